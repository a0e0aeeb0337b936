#include "ga/multivector.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "ga/detail/sign_table.hpp"
#include "ga/error.hpp"
#include "ga/kernels.hpp"

namespace ga {

Multivector::Multivector(AlgebraContext ctx) : ctx_(ctx), coeffs_(ctx.blade_count(), 0.0) {}

Multivector::Multivector(AlgebraContext ctx, std::vector<double> coeffs)
    : ctx_(ctx), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != ctx_.blade_count()) {
    throw Error(ErrorKind::shape_mismatch, "multivector needs " + std::to_string(ctx_.blade_count()) +
                                               " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

Multivector Multivector::scalar(AlgebraContext ctx, double value) {
  Multivector m(ctx);
  m.coeffs_[0] = value;
  return m;
}

Multivector Multivector::blade(AlgebraContext ctx, BladeMask mask, double coeff) {
  if (mask >= ctx.blade_count()) {
    throw Error(ErrorKind::out_of_range, "blade outside dimension " + std::to_string(ctx.dim()));
  }
  Multivector m(ctx);
  m.coeffs_[mask] = coeff;
  return m;
}

Multivector Multivector::vector(AlgebraContext ctx, std::span<const double> coords) {
  if (coords.size() != static_cast<std::size_t>(ctx.dim())) {
    throw Error(ErrorKind::shape_mismatch, "vector needs " + std::to_string(ctx.dim()) + " coordinates");
  }
  Multivector m(ctx);
  for (std::size_t i = 0; i < coords.size(); ++i) m.coeffs_[BladeMask{1} << i] = coords[i];
  return m;
}

std::vector<double> Multivector::vector_part() const {
  std::vector<double> v(static_cast<std::size_t>(dim()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeffs_[BladeMask{1} << i];
  return v;
}

bool Multivector::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](double c) { return c == 0.0; });
}

double Multivector::max_norm() const noexcept {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

GradeSet Multivector::grades_present() const noexcept {
  std::uint32_t bits = 0;
  for (std::size_t m = 0; m < coeffs_.size(); ++m)
    if (coeffs_[m] != 0.0) bits |= 1u << blade_grade(static_cast<BladeMask>(m));
  return GradeSet::from_bits(bits);
}

Multivector& Multivector::operator+=(const Multivector& o) {
  ctx_.require_same(o.ctx_);
  kernels::active().axpy(1.0, o.coeffs_.data(), coeffs_.data(), coeffs_.size());
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  ctx_.require_same(o.ctx_);
  kernels::active().axpy(-1.0, o.coeffs_.data(), coeffs_.data(), coeffs_.size());
  return *this;
}

Multivector& Multivector::operator*=(double s) noexcept {
  for (double& c : coeffs_) c *= s;
  return *this;
}

namespace {

Multivector blade_product(const Multivector& x, const Multivector& y, kernels::BladeFilter filter,
                          const double* meet_weights = nullptr) {
  x.context().require_same(y.context());
  const int n = x.dim();
  const std::size_t len = x.size();
  Multivector out(x.context());
  const auto& k = kernels::active();
  const auto xs = x.coeffs();
  for (std::size_t a = 0; a < len; ++a) {
    if (xs[a] == 0.0) continue;
    const auto mask = static_cast<BladeMask>(a);
    k.blade_row({out.coeffs().data(), y.coeffs().data(), detail::product_sign_row(n, mask),
                 meet_weights, xs[a], mask, filter, len});
  }
  return out;
}

template <class SignOfGrade>
Multivector per_grade_sign(const Multivector& x, SignOfGrade sign) {
  Multivector out = x;
  auto cs = out.coeffs();
  for (std::size_t m = 0; m < cs.size(); ++m)
    if (sign(blade_grade(static_cast<BladeMask>(m))) < 0) cs[m] = -cs[m];
  return out;
}

}  // namespace

Multivector wedge(const Multivector& x, const Multivector& y) {
  return blade_product(x, y, kernels::BladeFilter::superset);
}

Multivector clifford_product(const Multivector& x, const Multivector& y) {
  return blade_product(x, y, kernels::BladeFilter::all);
}

Multivector left_contraction(const Multivector& x, const Multivector& y) {
  return blade_product(x, y, kernels::BladeFilter::disjoint);
}

Multivector right_contraction(const Multivector& x, const Multivector& y) {
  return blade_product(x, y, kernels::BladeFilter::subset);
}

double scalar_product(const Multivector& x, const Multivector& y) {
  x.context().require_same(y.context());
  return kernels::active().dot(x.coeffs().data(), y.coeffs().data(), x.size());
}

Multivector commutator(const Multivector& x, const Multivector& y) {
  Multivector out = clifford_product(x, y);
  out -= clifford_product(y, x);
  out *= 0.5;
  return out;
}

Multivector diagonal_clifford_product(const Multivector& x, const Multivector& y,
                                      std::span<const double> diag) {
  if (diag.size() != static_cast<std::size_t>(x.dim())) {
    throw Error(ErrorKind::shape_mismatch, "metric diagonal length mismatch");
  }
  // w[S] = product of diag[i] over the factors shared by both blades.
  std::vector<double> meet(x.size(), 1.0);
  for (std::size_t s = 1; s < meet.size(); ++s) {
    const int low = std::countr_zero(static_cast<unsigned>(s));
    meet[s] = meet[s & (s - 1)] * diag[static_cast<std::size_t>(low)];
  }
  return blade_product(x, y, kernels::BladeFilter::all, meet.data());
}

Multivector grade_part(const Multivector& x, int k) {
  if (k < 0 || k > x.dim()) {
    throw Error(ErrorKind::out_of_range,
                "grade " + std::to_string(k) + " outside 0.." + std::to_string(x.dim()));
  }
  return project_grades(x, GradeSet::single(k));
}

Multivector project_grades(const Multivector& x, GradeSet s) {
  s.validate(x.dim());
  Multivector out(x.context());
  const auto in = x.coeffs();
  auto o = out.coeffs();
  for (std::size_t m = 0; m < in.size(); ++m)
    if (s.contains(blade_grade(static_cast<BladeMask>(m)))) o[m] = in[m];
  return out;
}

Multivector grade_involution(const Multivector& x) {
  return per_grade_sign(x, [](int k) { return (k % 2) ? -1 : 1; });
}

Multivector reversion(const Multivector& x) {
  return per_grade_sign(x, [](int k) { return ((k * (k - 1) / 2) % 2) ? -1 : 1; });
}

Multivector conjugation(const Multivector& x) {
  return per_grade_sign(x, [](int k) { return ((k * (k + 1) / 2) % 2) ? -1 : 1; });
}

bool approx_equal(const Multivector& x, const Multivector& y, double tol_rel, double tol_abs) {
  if (!(x.context() == y.context())) return false;
  double diff = 0.0;
  const auto a = x.coeffs();
  const auto b = y.coeffs();
  for (std::size_t i = 0; i < a.size(); ++i) diff = std::max(diff, std::abs(a[i] - b[i]));
  return diff <= tol_abs + tol_rel * std::max(x.max_norm(), y.max_norm());
}

bool approx_equal(const Multivector& x, const Multivector& y) {
  return approx_equal(x, y, x.context().tol_rel(), x.context().tol_abs());
}

}  // namespace ga
