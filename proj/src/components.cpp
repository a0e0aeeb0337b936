#include "ga/components.hpp"

#include <string>
#include <utility>
#include <vector>

#include "ga/error.hpp"

namespace ga {
namespace {

constexpr std::uint64_t kMaxComponentEntries = std::uint64_t{1} << 24;

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

/// Decodes row/column number r into an ordered index tuple of length len.
std::vector<int> decode_tuple(std::uint64_t r, int n, int len) {
  std::vector<int> t(static_cast<std::size_t>(len));
  for (int i = len - 1; i >= 0; --i) {
    t[static_cast<std::size_t>(i)] = static_cast<int>(r % static_cast<std::uint64_t>(n));
    r /= static_cast<std::uint64_t>(n);
  }
  return t;
}

std::uint64_t encode_tuple(std::span<const int> t, int n) {
  std::uint64_t r = 0;
  for (int j : t) r = r * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(j);
  return r;
}

/// Blade of an ordered factor tuple: e_{t1} ^ ... = sign * e_mask, sign 0 on repeats.
struct OrderedBlade {
  BladeMask mask = 0;
  int sign = 1;
};

OrderedBlade ordered_blade(std::span<const int> t) {
  OrderedBlade ob;
  for (int j : t) {
    const BladeMask bit = BladeMask{1} << j;
    if (ob.mask & bit) return {0, 0};
    // Moving e_j left past every already-placed factor with a larger index.
    if (std::popcount(ob.mask & ~((bit << 1) - 1)) & 1) ob.sign = -ob.sign;
    ob.mask |= bit;
  }
  return ob;
}

std::vector<int> mask_positions(int dim, const std::vector<BladeMask>& blades) {
  std::vector<int> pos(std::size_t{1} << dim, -1);
  for (std::size_t i = 0; i < blades.size(); ++i) pos[blades[i]] = static_cast<int>(i);
  return pos;
}

/// F[row = orthonormal blade][col = basis blade J] = coefficient of b.blade(J).
Matrix frame(const Basis& b, const std::vector<BladeMask>& blades) {
  Matrix f(blades.size(), blades.size());
  for (std::size_t c = 0; c < blades.size(); ++c) {
    const Multivector bj = b.blade(blades[c]);
    for (std::size_t r = 0; r < blades.size(); ++r) f(r, c) = bj[blades[r]];
  }
  return f;
}

void check_limit(int n, int p, int q) {
  if (ipow(static_cast<std::uint64_t>(n), p + q) > kMaxComponentEntries) {
    throw Error(ErrorKind::limit_exceeded, "component array n^(p+q) too large to materialize");
  }
}

void check_elementary_limits(int n, int k) {
  if (k > 3 || n > 6) {
    throw Error(ErrorKind::limit_exceeded,
                "elementary components are materialized only for k <= 3 and n <= 6");
  }
}

}  // namespace

PQComponents::PQComponents(int dim, int p, int q, Matrix values)
    : dim_(dim), p_(p), q_(q), values_(std::move(values)) {
  if (values_.rows() != ipow(static_cast<std::uint64_t>(dim), p) ||
      values_.cols() != ipow(static_cast<std::uint64_t>(dim), q)) {
    throw Error(ErrorKind::shape_mismatch, "component array must be n^p x n^q");
  }
}

double PQComponents::at(std::span<const int> j, std::span<const int> k) const {
  return values_(encode_tuple(j, dim_), encode_tuple(k, dim_));
}

Matrix PQComponents::independent() const {
  const auto jb = blades_of_grade(dim_, p_);
  const auto kb = blades_of_grade(dim_, q_);
  Matrix out(jb.size(), kb.size());
  for (std::size_t r = 0; r < jb.size(); ++r) {
    const auto jt = blade_indices(jb[r]);
    std::vector<int> j0(jt.size());
    for (std::size_t i = 0; i < jt.size(); ++i) j0[i] = jt[i] - 1;
    for (std::size_t c = 0; c < kb.size(); ++c) {
      const auto kt = blade_indices(kb[c]);
      std::vector<int> k0(kt.size());
      for (std::size_t i = 0; i < kt.size(); ++i) k0[i] = kt[i] - 1;
      out(r, c) = at(j0, k0);
    }
  }
  return out;
}

PQComponents pq_components(const PQExtensor& t, const Basis& b, ComponentVariant variant) {
  t.context().require_same(b.context());
  const int n = b.dim();
  const int p = t.p();
  const int q = t.q();
  check_limit(n, p, q);
  const Basis left = variant == ComponentVariant::covariant ? b : b.reciprocal();
  const Matrix fp = frame(left, t.input_blades());
  const Matrix fq = frame(left, t.output_blades());
  // [K][J] = t(e_J) . e_K
  const Matrix asc = multiply(multiply(fq.transpose(), t.matrix()), fp);
  const auto jpos = mask_positions(n, t.input_blades());
  const auto kpos = mask_positions(n, t.output_blades());

  Matrix values(ipow(static_cast<std::uint64_t>(n), p), ipow(static_cast<std::uint64_t>(n), q));
  for (std::size_t r = 0; r < values.rows(); ++r) {
    const OrderedBlade jb = ordered_blade(decode_tuple(r, n, p));
    if (jb.sign == 0) continue;
    for (std::size_t c = 0; c < values.cols(); ++c) {
      const OrderedBlade kb = ordered_blade(decode_tuple(c, n, q));
      if (kb.sign == 0) continue;
      values(r, c) = jb.sign * kb.sign *
                     asc(static_cast<std::size_t>(kpos[kb.mask]), static_cast<std::size_t>(jpos[jb.mask]));
    }
  }
  return PQComponents(n, p, q, std::move(values));
}

PQExtensor pq_from_components(const PQComponents& c, const Basis& b, ComponentVariant variant) {
  if (c.dim() != b.dim()) throw Error(ErrorKind::context_mismatch, "component dimension differs from basis");
  const int n = b.dim();
  const int p = c.p();
  const int q = c.q();
  const auto jblades = blades_of_grade(n, p);
  const auto kblades = blades_of_grade(n, q);
  const auto jpos = mask_positions(n, jblades);
  const auto kpos = mask_positions(n, kblades);

  // Collapse the ordered-tuple sum onto ascending index sets: each basis
  // extensor is antisymmetric in both index groups.
  Matrix asc(jblades.size(), kblades.size());
  const Matrix& v = c.values();
  for (std::size_t r = 0; r < v.rows(); ++r) {
    const OrderedBlade jb = ordered_blade(decode_tuple(r, n, p));
    if (jb.sign == 0) continue;
    for (std::size_t col = 0; col < v.cols(); ++col) {
      const double x = v(r, col);
      if (x == 0.0) continue;
      const OrderedBlade kb = ordered_blade(decode_tuple(col, n, q));
      if (kb.sign == 0) continue;
      asc(static_cast<std::size_t>(jpos[jb.mask]), static_cast<std::size_t>(kpos[kb.mask])) +=
          jb.sign * kb.sign * x;
    }
  }
  asc *= 1.0 / (factorial(p) * factorial(q));

  const Basis right = variant == ComponentVariant::covariant ? b.reciprocal() : b;
  const Matrix rp = frame(right, jblades);
  const Matrix rq = frame(right, kblades);
  return PQExtensor(b.context(), p, q, multiply(multiply(rq, asc.transpose()), rp.transpose()));
}

Matrix ext_components(const GeneralExtensor& t, const Basis& b, ComponentVariant variant) {
  t.context().require_same(b.context());
  const auto all = blades_in(b.dim(), GradeSet::all(b.dim()));
  const Basis left = variant == ComponentVariant::covariant ? b : b.reciprocal();
  const Matrix f = frame(left, all);
  return multiply(multiply(f.transpose(), t.matrix()), f).transpose();
}

GeneralExtensor ext_from_components(const Matrix& c, const Basis& b, ComponentVariant variant) {
  const auto all = blades_in(b.dim(), GradeSet::all(b.dim()));
  if (c.rows() != all.size() || c.cols() != all.size()) {
    throw Error(ErrorKind::shape_mismatch, "extensor components must be 2^n x 2^n");
  }
  const Basis right = variant == ComponentVariant::covariant ? b.reciprocal() : b;
  const Matrix r = frame(right, all);
  return GeneralExtensor(b.context(), multiply(multiply(r, c.transpose()), r.transpose()));
}

Matrix elementary_components(const ElementaryKExtensor& t, const Basis& b, ComponentVariant variant) {
  t.context().require_same(b.context());
  const int n = b.dim();
  const int k = t.arity();
  check_elementary_limits(n, k);
  const Basis left = variant == ComponentVariant::covariant ? b : b.reciprocal();
  std::vector<Multivector> kblades;
  for (BladeMask m : t.output_blades()) kblades.push_back(left.blade(m));

  Matrix out(ipow(static_cast<std::uint64_t>(n), k), kblades.size());
  std::vector<Multivector> args;
  for (std::size_t r = 0; r < out.rows(); ++r) {
    args.clear();
    for (int j : decode_tuple(r, n, k)) args.push_back(left.vector(j));
    const Multivector y = t.evaluate(args);
    for (std::size_t c = 0; c < kblades.size(); ++c) out(r, c) = scalar_product(y, kblades[c]);
  }
  return out;
}

ElementaryKExtensor elementary_from_components(const Matrix& c, int k, int q, const Basis& b,
                                               ComponentVariant variant) {
  const int n = b.dim();
  check_elementary_limits(n, k);
  const auto kblades = blades_of_grade(n, q);
  const std::uint64_t rows = ipow(static_cast<std::uint64_t>(n), k);
  if (c.rows() != rows || c.cols() != kblades.size()) {
    throw Error(ErrorKind::shape_mismatch, "elementary components must be n^k x C(n,q)");
  }
  const Basis right = variant == ComponentVariant::covariant ? b.reciprocal() : b;
  // m[j][b'] = sum_K c[j][K] * (e^K)_{b'}
  const Matrix m = multiply(c, frame(right, kblades).transpose());
  const Matrix& rv = right.matrix();

  Matrix values(rows, kblades.size());
  for (std::size_t o = 0; o < rows; ++o) {
    const auto ot = decode_tuple(o, n, k);
    for (std::size_t j = 0; j < rows; ++j) {
      const auto jt = decode_tuple(j, n, k);
      // (e_o . e^j) for each argument slot
      double w = 1.0;
      for (std::size_t i = 0; i < ot.size() && w != 0.0; ++i)
        w *= rv(static_cast<std::size_t>(ot[i]), static_cast<std::size_t>(jt[i]));
      if (w == 0.0) continue;
      for (std::size_t col = 0; col < values.cols(); ++col) values(o, col) += w * m(j, col);
    }
  }
  return ElementaryKExtensor(b.context(), k, q, std::move(values));
}

}  // namespace ga
