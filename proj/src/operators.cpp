#include "ga/operators.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "ga/error.hpp"

namespace ga {
namespace {

/// x ^ v for a vector v given by orthonormal coordinates. Only touches the
/// non-zero blades of x, so building a grade-k column costs C(n,k) * n.
Multivector wedge_vector_right(const Multivector& x, std::span<const double> v) {
  Multivector out(x.context());
  const auto xs = x.coeffs();
  auto os = out.coeffs();
  const int n = x.dim();
  for (std::size_t a = 0; a < xs.size(); ++a) {
    if (xs[a] == 0.0) continue;
    const auto am = static_cast<BladeMask>(a);
    for (int i = 0; i < n; ++i) {
      const BladeMask bit = BladeMask{1} << i;
      if ((am & bit) != 0 || v[static_cast<std::size_t>(i)] == 0.0) continue;
      // e_A ^ e_i: e_i moves left past the factors of A above index i.
      const int above = std::popcount(am & ~((bit << 1) - 1));
      const double s = (above & 1) ? -1.0 : 1.0;
      os[am | bit] += s * xs[a] * v[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

/// t(e_j1) ^ ... ^ t(e_jk) for the ascending factors of B.
Multivector extended_blade(const LinOp& t, BladeMask b) {
  Multivector acc = Multivector::scalar(t.context(), 1.0);
  for (int j : blade_indices(b)) {
    const auto col = t.matrix().column(static_cast<std::size_t>(j - 1));
    acc = wedge_vector_right(acc, col);
  }
  return acc;
}

GeneralExtensor from_images(const AlgebraContext& ctx, const std::vector<Multivector>& images) {
  const std::size_t n = ctx.blade_count();
  Matrix rows(n, n);  // row B = image of e_B
  for (std::size_t b = 0; b < n; ++b) {
    const auto c = images[b].coeffs();
    std::copy(c.begin(), c.end(), rows.data().begin() + static_cast<std::ptrdiff_t>(b * n));
  }
  return GeneralExtensor(ctx, rows.transpose());
}

}  // namespace

GeneralExtensor extend(const LinOp& t) {
  const auto& ctx = t.context();
  const std::size_t n = ctx.blade_count();
  // e_B = e_{B minus top factor} ^ e_top, so each column extends an earlier one.
  std::vector<Multivector> cols;
  cols.reserve(n);
  cols.push_back(Multivector::scalar(ctx, 1.0));
  for (std::size_t b = 1; b < n; ++b) {
    const auto bm = static_cast<BladeMask>(b);
    const int top = 31 - std::countl_zero(bm);
    const auto image = t.matrix().column(static_cast<std::size_t>(top));
    cols.push_back(wedge_vector_right(cols[bm & ~(BladeMask{1} << top)], image));
  }
  return from_images(ctx, cols);
}

GeneralExtensor extend(const LinOp& t, const Basis& b) {
  t.context().require_same(b.context());
  const auto& ctx = t.context();
  const std::size_t n = ctx.blade_count();
  const Basis recip = b.reciprocal();
  const LinOp on_basis = t.compose(LinOp(ctx, b.matrix()));  // e_j -> t(e_j)
  std::vector<Multivector> images(n, Multivector(ctx));
  for (std::size_t j = 0; j < n; ++j) {
    const auto jm = static_cast<BladeMask>(j);
    const Multivector tj = extended_blade(on_basis, jm);
    const Multivector rj = recip.blade(jm);
    for (std::size_t o = 0; o < n; ++o) {
      const double w = rj[static_cast<BladeMask>(o)];  // e^J . e_o for orthonormal e_o
      if (w != 0.0) images[o] += w * tj;
    }
  }
  return from_images(ctx, images);
}

Multivector apply_extended(const LinOp& t, const Multivector& x) {
  t.context().require_same(x.context());
  Multivector out(x.context());
  const auto xs = x.coeffs();
  for (std::size_t b = 0; b < xs.size(); ++b) {
    if (xs[b] == 0.0) continue;
    out += xs[b] * extended_blade(t, static_cast<BladeMask>(b));
  }
  return out;
}

GradeSetExtensor adjoint(const GradeSetExtensor& t) { return t.transpose(); }
GeneralExtensor adjoint(const GeneralExtensor& t) { return t.transpose(); }
LinOp adjoint(const LinOp& t) { return t.transpose(); }
LinOp adjoint_inverse(const LinOp& t) { return inverse(adjoint(t)); }

GeneralExtensor generalize(const LinOp& t) {
  const auto& ctx = t.context();
  const int dim = ctx.dim();
  const std::size_t n = ctx.blade_count();
  Matrix m(n, n);
  for (std::size_t b = 0; b < n; ++b) {
    const auto bm = static_cast<BladeMask>(b);
    for (int k = 0; k < dim; ++k) {
      const BladeMask kb = BladeMask{1} << k;
      if ((bm & kb) == 0) continue;
      // e_k _| e_B = s1 e_C with C = B \ k; then t(e_k) ^ e_C.
      const BladeMask c = bm ^ kb;
      const int s1 = blade_sign(kb, bm);
      for (int i = 0; i < dim; ++i) {
        const BladeMask ib = BladeMask{1} << i;
        if (c & ib) continue;
        const double tik = t.matrix()(static_cast<std::size_t>(i), static_cast<std::size_t>(k));
        if (tik == 0.0) continue;
        m(c | ib, b) += s1 * blade_sign(ib, c) * tik;
      }
    }
  }
  return GeneralExtensor(ctx, std::move(m));
}

GeneralExtensor generalize(const LinOp& t, const Basis& b) {
  t.context().require_same(b.context());
  const auto& ctx = t.context();
  const Basis recip = b.reciprocal();
  std::vector<Multivector> t_recip;
  std::vector<Multivector> e;
  for (int k = 0; k < ctx.dim(); ++k) {
    t_recip.push_back(t.apply(recip.vector(k)));
    e.push_back(b.vector(k));
  }
  std::vector<Multivector> images;
  for (std::size_t o = 0; o < ctx.blade_count(); ++o) {
    const Multivector x = Multivector::blade(ctx, static_cast<BladeMask>(o));
    Multivector acc(ctx);
    for (int k = 0; k < ctx.dim(); ++k) {
      const auto ku = static_cast<std::size_t>(k);
      acc += wedge(t_recip[ku], left_contraction(e[ku], x));
    }
    images.push_back(std::move(acc));
  }
  return from_images(ctx, images);
}

Multivector apply_generalized(const LinOp& t, const Multivector& x) {
  t.context().require_same(x.context());
  Multivector acc(x.context());
  for (int k = 0; k < x.dim(); ++k) {
    const Multivector ek = Multivector::blade(x.context(), BladeMask{1} << k);
    acc += wedge(t.image(k), left_contraction(ek, x));
  }
  return acc;
}

Multivector bivector_of(const LinOp& t) {
  Multivector acc(t.context());
  for (int k = 0; k < t.dim(); ++k)
    acc += wedge(t.image(k), Multivector::blade(t.context(), BladeMask{1} << k));
  return acc;
}

Multivector bivector_of(const LinOp& t, const Basis& b) {
  t.context().require_same(b.context());
  const Basis recip = b.reciprocal();
  Multivector acc(t.context());
  for (int k = 0; k < t.dim(); ++k) acc += wedge(t.apply(recip.vector(k)), b.vector(k));
  return acc;
}

Product parse_product(std::string_view tag) {
  if (tag == "wedge") return Product::wedge;
  if (tag == "scalar") return Product::scalar;
  if (tag == "left_contraction") return Product::left_contraction;
  if (tag == "right_contraction") return Product::right_contraction;
  if (tag == "clifford") return Product::clifford;
  throw Error(ErrorKind::invalid_argument, "unknown product tag '" + std::string(tag) + "'");
}

Multivector apply_product(Product p, const Multivector& x, const Multivector& y) {
  switch (p) {
    case Product::wedge: return wedge(x, y);
    case Product::scalar: return Multivector::scalar(x.context(), scalar_product(x, y));
    case Product::left_contraction: return left_contraction(x, y);
    case Product::right_contraction: return right_contraction(x, y);
    case Product::clifford: return clifford_product(x, y);
  }
  throw Error(ErrorKind::invalid_argument, "unknown product");
}

DerivationCheck skew_generalized_derivation_check(const LinOp& t, const Multivector& x,
                                                  const Multivector& y, Product product) {
  const GeneralExtensor skew = generalize(t).skew_part();
  const Multivector tx = skew.apply(x);
  const Multivector ty = skew.apply(y);
  Multivector lhs = skew.apply(apply_product(product, x, y));
  Multivector rhs = apply_product(product, tx, y) + apply_product(product, x, ty);
  return {std::move(lhs), std::move(rhs)};
}

double determinant(const LinOp& t) {
  const Multivector top = extended_blade(t, t.context().pseudoscalar_mask());
  return top[t.context().pseudoscalar_mask()];
}

double determinant(const LinOp& t, const Basis& b) {
  t.context().require_same(b.context());
  return scalar_product(apply_extended(t, b.wedge_all()), b.reciprocal().wedge_all());
}

bool is_singular(const LinOp& t, double det) {
  const double scale = std::max(1.0, std::pow(t.matrix().inf_norm(), t.dim()));
  return !(std::abs(det) > 1e-12 * scale);
}

LinOp inverse(const LinOp& t) {
  const auto& ctx = t.context();
  const double det = determinant(t);
  if (is_singular(t, det)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "operator is singular (|det| = %.3g)", std::abs(det));
    throw SingularError(buf, std::abs(det));
  }
  const Multivector I = Multivector::pseudoscalar(ctx);
  const Multivector I_inv = reversion(I);  // I ~I = 1 in the Euclidean algebra
  const LinOp t_adj = adjoint(t);
  const auto n = static_cast<std::size_t>(ctx.dim());
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Multivector v = Multivector::blade(ctx, BladeMask{1} << j);
    const Multivector w = clifford_product(apply_extended(t_adj, clifford_product(v, I)), I_inv);
    const auto col = w.vector_part();
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i] / det;
  }
  return LinOp(ctx, std::move(m));
}

}  // namespace ga
