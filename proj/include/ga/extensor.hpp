#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ga/context.hpp"
#include "ga/dense.hpp"
#include "ga/multivector.hpp"

namespace ga {

/// A (1,1)-extensor: linear operator on V. Column j of the matrix holds the
/// orthonormal-frame coordinates of t(e_j).
class LinOp {
 public:
  LinOp(AlgebraContext ctx, Matrix m);

  static LinOp identity(AlgebraContext ctx);
  /// images[j] = t(e_j)
  static LinOp from_images(AlgebraContext ctx, const std::vector<std::vector<double>>& images);

  const AlgebraContext& context() const noexcept { return ctx_; }
  int dim() const noexcept { return ctx_.dim(); }
  const Matrix& matrix() const noexcept { return m_; }

  std::vector<double> apply(std::span<const double> v) const;
  /// Applies t to the grade-1 part of v.
  Multivector apply(const Multivector& v) const;
  /// t(e_j) for 0-based j.
  Multivector image(int j) const;

  /// (*this) o inner
  LinOp compose(const LinOp& inner) const;
  /// Matrix transpose; the Euclidean adjoint in the orthonormal frame.
  LinOp transpose() const { return LinOp(ctx_, m_.transpose()); }
  LinOp symmetric_part() const;
  LinOp skew_part() const;

  LinOp& operator+=(const LinOp& o);
  LinOp& operator-=(const LinOp& o);
  LinOp& operator*=(double s);
  friend LinOp operator+(LinOp a, const LinOp& b) { return a += b; }
  friend LinOp operator-(LinOp a, const LinOp& b) { return a -= b; }
  friend LinOp operator*(LinOp a, double s) { return a *= s; }
  friend LinOp operator*(double s, LinOp a) { return a *= s; }

 private:
  AlgebraContext ctx_;
  Matrix m_;
};

/// A linear operator on the whole exterior algebra, 2^n x 2^n over the
/// canonical blade basis (column B = image of e_B).
class GeneralExtensor {
 public:
  GeneralExtensor(AlgebraContext ctx, Matrix m);

  static GeneralExtensor identity(AlgebraContext ctx);

  const AlgebraContext& context() const noexcept { return ctx_; }
  int dim() const noexcept { return ctx_.dim(); }
  const Matrix& matrix() const noexcept { return m_; }

  Multivector apply(const Multivector& x) const;
  GeneralExtensor compose(const GeneralExtensor& inner) const;
  GeneralExtensor transpose() const { return GeneralExtensor(ctx_, m_.transpose()); }
  GeneralExtensor symmetric_part() const;
  GeneralExtensor skew_part() const;

  GeneralExtensor& operator+=(const GeneralExtensor& o);
  GeneralExtensor& operator-=(const GeneralExtensor& o);
  GeneralExtensor& operator*=(double s);
  friend GeneralExtensor operator+(GeneralExtensor a, const GeneralExtensor& b) { return a += b; }
  friend GeneralExtensor operator-(GeneralExtensor a, const GeneralExtensor& b) { return a -= b; }
  friend GeneralExtensor operator*(GeneralExtensor a, double s) { return a *= s; }
  friend GeneralExtensor operator*(double s, GeneralExtensor a) { return a *= s; }

 private:
  AlgebraContext ctx_;
  Matrix m_;
};

/// A linear map between two sums of homogeneous subspaces. The matrix has one
/// row per codomain blade and one column per domain blade, both in ascending
/// mask order.
class GradeSetExtensor {
 public:
  GradeSetExtensor(AlgebraContext ctx, GradeSet domain, GradeSet codomain, Matrix m);

  static GradeSetExtensor zero(AlgebraContext ctx, GradeSet domain, GradeSet codomain);
  /// The block of g mapping domain blades to codomain blades.
  static GradeSetExtensor restrict(const GeneralExtensor& g, GradeSet domain, GradeSet codomain);
  static GradeSetExtensor from_linop(const LinOp& t);

  const AlgebraContext& context() const noexcept { return ctx_; }
  GradeSet domain() const noexcept { return domain_; }
  GradeSet codomain() const noexcept { return codomain_; }
  const Matrix& matrix() const noexcept { return m_; }
  const std::vector<BladeMask>& domain_blades() const noexcept { return in_; }
  const std::vector<BladeMask>& codomain_blades() const noexcept { return out_; }

  /// Projects x onto the domain grades, then maps.
  Multivector apply(const Multivector& x) const;
  /// (*this) o inner; inner's codomain must equal this domain.
  GradeSetExtensor compose(const GradeSetExtensor& inner) const;
  /// Swaps domain and codomain and transposes the block.
  GradeSetExtensor transpose() const;
  /// Embeds into ext(V) with zeros outside the block.
  GeneralExtensor to_general() const;

 private:
  AlgebraContext ctx_;
  GradeSet domain_;
  GradeSet codomain_;
  std::vector<BladeMask> in_;
  std::vector<BladeMask> out_;
  Matrix m_;
};

/// A linear map from p-vectors to q-vectors; C(n,q) x C(n,p) matrix.
class PQExtensor {
 public:
  PQExtensor(AlgebraContext ctx, int p, int q, Matrix m);

  static PQExtensor zero(AlgebraContext ctx, int p, int q);
  static PQExtensor restrict(const GeneralExtensor& g, int p, int q);

  const AlgebraContext& context() const noexcept { return ctx_; }
  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  const Matrix& matrix() const noexcept { return m_; }
  const std::vector<BladeMask>& input_blades() const noexcept { return in_; }
  const std::vector<BladeMask>& output_blades() const noexcept { return out_; }

  /// Projects x to grade p first.
  Multivector apply(const Multivector& x) const;
  GradeSetExtensor as_grade_set() const;

 private:
  AlgebraContext ctx_;
  int p_;
  int q_;
  std::vector<BladeMask> in_;
  std::vector<BladeMask> out_;
  Matrix m_;
};

/// Multilinear map from k vectors to q-vectors. Row r of values() holds the
/// q-vector t(e_{j1}, ..., e_{jk}) in the orthonormal frame, where
/// r = ((j1 * n) + j2) * n + ... (0-based, j1 most significant); columns run
/// over grade-q blades in ascending mask order.
class ElementaryKExtensor {
 public:
  ElementaryKExtensor(AlgebraContext ctx, int k, int q, Matrix values);

  static ElementaryKExtensor zero(AlgebraContext ctx, int k, int q);
  /// The k = 1 case identified with a (1,q)-extensor.
  static ElementaryKExtensor from_pq(const PQExtensor& t);

  const AlgebraContext& context() const noexcept { return ctx_; }
  int arity() const noexcept { return k_; }
  int degree() const noexcept { return q_; }
  const Matrix& values() const noexcept { return values_; }
  const std::vector<BladeMask>& output_blades() const noexcept { return out_; }

  /// Throws ErrorKind::shape_mismatch unless exactly arity() vectors are given.
  Multivector evaluate(std::span<const Multivector> vectors) const;

 private:
  AlgebraContext ctx_;
  int k_;
  int q_;
  std::vector<BladeMask> out_;
  Matrix values_;
};

/// Sum of C(n,k) over k in s.
std::uint64_t dim_grade_set(int dim, GradeSet s);
/// dim k-ext(S_1, ..., S_k; S) = prod dim S_i * dim S.
std::uint64_t dim_extensor_space(int dim, std::span<const GradeSet> arguments, GradeSet codomain);
/// dim ext_p^q(V) = C(n,p) C(n,q)
std::uint64_t dim_pq_space(int dim, int p, int q);
/// dim ext(V) = 2^n 2^n
std::uint64_t dim_general_space(int dim);
/// dim k-ext^q(V) = n^k C(n,q)
std::uint64_t dim_elementary_space(int dim, int k, int q);

}  // namespace ga
