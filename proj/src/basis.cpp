#include "ga/basis.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "ga/error.hpp"
#include "ga/metric.hpp"

namespace ga {

Basis::Basis(AlgebraContext ctx, Matrix columns) : ctx_(ctx), columns_(std::move(columns)) {
  const auto n = static_cast<std::size_t>(ctx_.dim());
  if (columns_.rows() != n || columns_.cols() != n) {
    throw Error(ErrorKind::shape_mismatch, "basis must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  // Dependent when the Gram spectrum spans more than 1/tol_abs, i.e. the
  // columns have condition number at least 1e6.
  Matrix vecs;
  const std::vector<double> lambda = jacobi_eigen(gram(), vecs);
  const auto [lo, hi] = std::minmax_element(lambda.begin(), lambda.end());
  const double ratio = *hi > 0.0 ? *lo / *hi : 0.0;
  if (!(ratio > ctx_.tol_abs())) {
    throw SingularError("basis vectors are linearly dependent (Gram eigenvalue ratio " + std::to_string(ratio) + ")",
                        ratio);
  }
}

Basis Basis::orthonormal(AlgebraContext ctx) {
  return Basis(ctx, Matrix::identity(static_cast<std::size_t>(ctx.dim())));
}

Basis Basis::from_vectors(AlgebraContext ctx, const std::vector<std::vector<double>>& vectors) {
  const auto n = static_cast<std::size_t>(ctx.dim());
  if (vectors.size() != n) throw Error(ErrorKind::shape_mismatch, "basis needs exactly n vectors");
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.set_column(j, vectors[j]);
  return Basis(ctx, std::move(m));
}

Multivector Basis::vector(int j) const {
  return Multivector::vector(ctx_, columns_.column(static_cast<std::size_t>(j)));
}

Multivector Basis::blade(BladeMask J) const {
  Multivector out = Multivector::scalar(ctx_, 1.0);
  for (int idx : blade_indices(J)) out = wedge(out, vector(idx - 1));
  return out;
}

Matrix Basis::gram() const { return multiply(columns_.transpose(), columns_); }

Basis Basis::reciprocal() const {
  // Column j of E G^-1 is sum_k (G^-1)_{kj} e_k; G^-1 is symmetric.
  return Basis(ctx_, multiply(columns_, elimination_inverse(gram())));
}

}  // namespace ga
