#pragma once

#include <span>
#include <vector>

#include "ga/context.hpp"

namespace ga {

/// Dense element of the exterior algebra: one real coefficient per canonical
/// blade, indexed by BladeMask.
class Multivector {
 public:
  explicit Multivector(AlgebraContext ctx);
  Multivector(AlgebraContext ctx, std::vector<double> coeffs);

  static Multivector scalar(AlgebraContext ctx, double value);
  static Multivector blade(AlgebraContext ctx, BladeMask mask, double coeff = 1.0);
  /// Grade-1 multivector with the given orthonormal-frame coordinates.
  static Multivector vector(AlgebraContext ctx, std::span<const double> coords);
  static Multivector pseudoscalar(AlgebraContext ctx) {
    return blade(ctx, ctx.pseudoscalar_mask());
  }

  const AlgebraContext& context() const noexcept { return ctx_; }
  int dim() const noexcept { return ctx_.dim(); }
  std::size_t size() const noexcept { return coeffs_.size(); }

  std::span<const double> coeffs() const noexcept { return coeffs_; }
  std::span<double> coeffs() noexcept { return coeffs_; }
  double operator[](BladeMask m) const { return coeffs_.at(m); }
  double& operator[](BladeMask m) { return coeffs_.at(m); }

  double scalar_part() const noexcept { return coeffs_[0]; }
  /// Orthonormal-frame coordinates of the grade-1 part.
  std::vector<double> vector_part() const;

  bool is_zero() const noexcept;
  double max_norm() const noexcept;
  /// Grades with at least one non-zero coefficient.
  GradeSet grades_present() const noexcept;

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(double s) noexcept;

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, double s) { return a *= s; }
  friend Multivector operator*(double s, Multivector a) { return a *= s; }
  friend Multivector operator-(Multivector a) { return a *= -1.0; }

 private:
  AlgebraContext ctx_;
  std::vector<double> coeffs_;
};

Multivector wedge(const Multivector& x, const Multivector& y);
Multivector clifford_product(const Multivector& x, const Multivector& y);
/// A _| B = <AB>_{s-r} on blades of grades r <= s, zero for r > s.
Multivector left_contraction(const Multivector& x, const Multivector& y);
/// A |_ B = <AB>_{r-s} on blades of grades r >= s, zero for r < s.
Multivector right_contraction(const Multivector& x, const Multivector& y);
/// <reversion(X) Y>_0; positive definite, canonical blades orthonormal.
double scalar_product(const Multivector& x, const Multivector& y);
/// (XY - YX) / 2
Multivector commutator(const Multivector& x, const Multivector& y);

/// Clifford product for the diagonal metric e_i e_i = diag[i]; the
/// Euclidean product is the all-ones case.
Multivector diagonal_clifford_product(const Multivector& x, const Multivector& y,
                                      std::span<const double> diag);

Multivector grade_part(const Multivector& x, int k);
Multivector project_grades(const Multivector& x, GradeSet s);
Multivector grade_involution(const Multivector& x);
Multivector reversion(const Multivector& x);
Multivector conjugation(const Multivector& x);

/// max|x - y| <= tol_abs + tol_rel * max(|x|, |y|) in the max norm.
bool approx_equal(const Multivector& x, const Multivector& y, double tol_rel, double tol_abs);
/// Same, with the tolerances of x's context.
bool approx_equal(const Multivector& x, const Multivector& y);

}  // namespace ga
