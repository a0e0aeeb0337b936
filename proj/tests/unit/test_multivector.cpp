#include <vector>

#include "doctest.h"
#include "ga/basis.hpp"
#include "ga/error.hpp"
#include "ga/multivector.hpp"
#include "oracles.hpp"

using namespace ga;

namespace {

Multivector mv(const AlgebraContext& ctx, std::initializer_list<std::pair<BladeMask, double>> terms) {
  Multivector x(ctx);
  for (auto [m, c] : terms) x[m] += c;
  return x;
}

constexpr BladeMask e1 = 1, e2 = 2, e12 = 3, e23 = 6;

}  // namespace

TEST_CASE("context and grade sets") {
  CHECK_THROWS_AS(AlgebraContext(0), Error);
  CHECK_THROWS_AS(AlgebraContext(13), Error);
  AlgebraContext c(12);
  CHECK(c.blade_count() == 4096);
  CHECK(c.tol_rel() == 1e-9);
  CHECK(c.tol_abs() == 1e-12);
  CHECK_THROWS_AS(c.require_same(AlgebraContext(3)), Error);

  const GradeSet s{0, 2};
  CHECK(s.contains(0));
  CHECK_FALSE(s.contains(1));
  CHECK(s.intersect(GradeSet{2, 3}) == GradeSet{2});
  CHECK(GradeSet{}.empty());
  CHECK_THROWS_AS(GradeSet{4}.validate(3), Error);
  CHECK(blades_of_grade(3, 2) == std::vector<BladeMask>{3, 5, 6});
  CHECK(blade_name(5, 3) == "e13");
  CHECK(blade_name(0, 3) == "1");
  CHECK(blade_name((1u << 1) | (1u << 10), 12) == "e[2,11]");
  CHECK(binomial(5, 2) == 10);
}

TEST_CASE("wedge examples") {
  AlgebraContext c(3);
  CHECK(wedge(mv(c, {{e1, 1}}), mv(c, {{e2, 1}})).coeffs()[e12] == 1.0);
  CHECK(wedge(mv(c, {{e1, 1}}), mv(c, {{e1, 1}})).is_zero());
  const auto x = wedge(mv(c, {{0, 1}, {e1, 1}}), mv(c, {{e2, 1}}));
  CHECK(approx_equal(x, mv(c, {{e2, 1}, {e12, 1}})));
}

TEST_CASE("scalar product and contraction examples") {
  AlgebraContext c2(2);
  CHECK(scalar_product(mv(c2, {{e12, 1}}), mv(c2, {{e12, 1}})) == 1.0);
  CHECK(scalar_product(mv(c2, {{e1, 1}}), mv(c2, {{e2, 1}})) == 0.0);
  CHECK(scalar_product(mv(c2, {{e1, 2}, {e12, 1}}), mv(c2, {{e1, 1}, {e12, 3}})) == 5.0);

  CHECK(approx_equal(left_contraction(mv(c2, {{e1, 1}}), mv(c2, {{e12, 1}})), mv(c2, {{e2, 1}})));
  CHECK(approx_equal(left_contraction(mv(c2, {{e12, 1}}), mv(c2, {{e12, 1}})), mv(c2, {{0, -1}})));
  const auto tau = Multivector::pseudoscalar(c2);
  CHECK(left_contraction(tau, reversion(tau)).scalar_part() == 1.0);
  const auto x = mv(c2, {{0, 0.5}, {e1, 2}, {e12, -1}});
  CHECK(approx_equal(left_contraction(Multivector::scalar(c2, 3.0), x), 3.0 * x));
}

TEST_CASE("clifford product and commutator examples") {
  AlgebraContext c(3);
  CHECK(approx_equal(clifford_product(mv(c, {{e1, 1}}), mv(c, {{e1, 1}})), mv(c, {{0, 1}})));
  CHECK(approx_equal(clifford_product(mv(c, {{e1, 1}}), mv(c, {{e2, 1}})), mv(c, {{e12, 1}})));
  CHECK(approx_equal(clifford_product(mv(c, {{e12, 1}}), mv(c, {{e1, 1}})), mv(c, {{e2, -1}})));
  const auto x = mv(c, {{e1, 1}, {e23, 2}});
  CHECK(commutator(x, x).is_zero());
  CHECK(approx_equal(commutator(mv(c, {{e12, 1}}), mv(c, {{e1, 1}})), mv(c, {{e2, -1}})));
  CHECK(approx_equal(0.5 * commutator(mv(c, {{e12, -2}}), mv(c, {{e1, 1}})), mv(c, {{e2, 1}})));
}

TEST_CASE("products agree with the index-list oracle") {
  oracle::Rng rng(11);
  for (int n = 1; n <= 5; ++n) {
    AlgebraContext c(n);
    const std::vector<double> ones(static_cast<std::size_t>(n), 1.0);
    for (int trial = 0; trial < 20; ++trial) {
      const auto x = oracle::random_multivector(rng, c);
      const auto y = oracle::random_multivector(rng, c);
      using K = oracle::ProductKind;
      CHECK(oracle::close(clifford_product(x, y).coeffs(), oracle::product(x.coeffs(), y.coeffs(), K::clifford, ones), 1e-12));
      CHECK(oracle::close(wedge(x, y).coeffs(), oracle::product(x.coeffs(), y.coeffs(), K::wedge, ones), 1e-12));
      CHECK(oracle::close(left_contraction(x, y).coeffs(), oracle::product(x.coeffs(), y.coeffs(), K::left, ones), 1e-12));
      CHECK(oracle::close(right_contraction(x, y).coeffs(), oracle::product(x.coeffs(), y.coeffs(), K::right, ones), 1e-12));
      double dot = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) dot += x.coeffs()[i] * y.coeffs()[i];
      CHECK(oracle::close(scalar_product(x, y), dot, 1e-12));
      // X . Y = <reversion(X) Y>_0
      CHECK(oracle::close(scalar_product(x, y), clifford_product(reversion(x), y).scalar_part(), 1e-12));

      std::vector<double> diag(static_cast<std::size_t>(n));
      for (double& d : diag) d = oracle::uniform(rng, -2.0, 2.0);
      CHECK(oracle::close(diagonal_clifford_product(x, y, diag).coeffs(),
                          oracle::product(x.coeffs(), y.coeffs(), K::clifford, diag), 1e-12));
    }
  }
}

TEST_CASE("wedge graded anticommutativity and clifford associativity") {
  oracle::Rng rng(12);
  for (int n = 2; n <= 5; ++n) {
    AlgebraContext c(n);
    for (int r = 0; r <= n; ++r) {
      for (int s = 0; s <= n; ++s) {
        const auto a = oracle::random_homogeneous(rng, c, r);
        const auto b = oracle::random_homogeneous(rng, c, s);
        const double sign = ((r * s) & 1) ? -1.0 : 1.0;
        CHECK(oracle::close(wedge(a, b), sign * wedge(b, a), 1e-12));
      }
    }
    const auto x = oracle::random_multivector(rng, c);
    const auto y = oracle::random_multivector(rng, c);
    const auto z = oracle::random_multivector(rng, c);
    CHECK(approx_equal(clifford_product(clifford_product(x, y), z), clifford_product(x, clifford_product(y, z))));
    // Wedge of dependent vectors vanishes.
    const auto v = oracle::random_homogeneous(rng, c, 1);
    const auto w = oracle::random_homogeneous(rng, c, 1);
    CHECK(wedge(wedge(v, w), 2.0 * v - 3.0 * w).max_norm() < 1e-14);
  }
}

TEST_CASE("grade parts, projectors and involutions") {
  AlgebraContext c(3);
  const auto x = mv(c, {{0, 1}, {e1, 1}, {e12, 1}});
  CHECK(approx_equal(grade_part(x, 1), mv(c, {{e1, 1}})));
  CHECK(grade_part(mv(c, {{e12, 1}}), 1).is_zero());
  CHECK_THROWS_AS(grade_part(x, 4), Error);
  CHECK(approx_equal(project_grades(x, GradeSet{0, 2}), mv(c, {{0, 1}, {e12, 1}})));
  CHECK(project_grades(x, GradeSet{}).is_zero());
  CHECK(approx_equal(reversion(mv(c, {{e12, 1}})), mv(c, {{e12, -1}})));
  CHECK(approx_equal(grade_involution(mv(c, {{e1, 1}})), mv(c, {{e1, -1}})));
  CHECK(approx_equal(conjugation(x), mv(c, {{0, 1}, {e1, -1}, {e12, -1}})));

  oracle::Rng rng(13);
  for (int n = 1; n <= 6; ++n) {
    AlgebraContext cn(n);
    const auto y = oracle::random_multivector(rng, cn);
    const auto z = oracle::random_multivector(rng, cn);
    Multivector sum(cn);
    for (int k = 0; k <= n; ++k) sum += grade_part(y, k);
    CHECK(sum.coeffs().size() == y.coeffs().size());
    CHECK(approx_equal(sum, y, 0.0, 0.0));
    CHECK(approx_equal(reversion(reversion(y)), y, 0.0, 0.0));
    CHECK(approx_equal(grade_involution(grade_involution(y)), y, 0.0, 0.0));
    CHECK(approx_equal(conjugation(conjugation(y)), y, 0.0, 0.0));
    for (int k = 0; k <= n; ++k) {
      const auto yk = grade_part(y, k);
      const double rs = ((k * (k - 1) / 2) & 1) ? -1.0 : 1.0;
      const double gs = (k & 1) ? -1.0 : 1.0;
      CHECK(approx_equal(grade_part(reversion(y), k), rs * yk, 0.0, 0.0));
      CHECK(approx_equal(grade_part(grade_involution(y), k), gs * yk, 0.0, 0.0));
      CHECK(approx_equal(grade_part(conjugation(y), k), rs * gs * yk, 0.0, 0.0));
    }

    // Nested projections intersect; self-adjointness; disjoint sums unite.
    const auto s1 = GradeSet::from_bits(static_cast<std::uint32_t>(rng()) & ((2u << n) - 1));
    const auto s2 = GradeSet::from_bits(static_cast<std::uint32_t>(rng()) & ((2u << n) - 1));
    CHECK(approx_equal(project_grades(project_grades(y, s1), s2), project_grades(y, s1.intersect(s2)), 0.0, 0.0));
    CHECK(oracle::close(scalar_product(project_grades(y, s1), z), scalar_product(y, project_grades(z, s1)), 1e-12));
    const auto d1 = GradeSet::from_bits(s1.bits() & ~s2.bits());
    CHECK(approx_equal(project_grades(y, d1) + project_grades(y, s2), project_grades(y, d1.unite(s2)), 0.0, 0.0));
  }
}

TEST_CASE("reciprocal basis") {
  AlgebraContext c2(2);
  const Basis ortho = Basis::orthonormal(c2);
  CHECK(ortho.reciprocal().matrix() == ortho.matrix());

  const Basis b = Basis::from_vectors(c2, {{1, 1}, {0, 1}});
  const Basis r = b.reciprocal();
  CHECK(oracle::close(r.matrix(), Matrix::from_rows({{1, -1}, {0, 1}}), 1e-14));
  CHECK(oracle::close(r.reciprocal().matrix(), b.matrix(), 1e-14));
  CHECK_THROWS_AS(Basis::from_vectors(c2, {{1, 1}, {2, 2}}), SingularError);

  oracle::Rng rng(14);
  for (int n = 2; n <= 6; ++n) {
    AlgebraContext c(n);
    for (int trial = 0; trial < 10; ++trial) {
      const Basis bn(c, oracle::random_well_conditioned(rng, n));
      const Basis rn = bn.reciprocal();
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          CHECK(oracle::close(scalar_product(bn.vector(j), rn.vector(k)), j == k ? 1.0 : 0.0, 1e-8));
    }
  }
}

TEST_CASE("context mismatch is rejected") {
  AlgebraContext a(2), b(3);
  CHECK_THROWS_AS(wedge(Multivector(a), Multivector(b)), Error);
  CHECK_THROWS_AS(Multivector(a, std::vector<double>(3)), Error);
}
