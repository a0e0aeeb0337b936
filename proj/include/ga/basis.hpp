#pragma once

#include <vector>

#include "ga/dense.hpp"
#include "ga/multivector.hpp"

namespace ga {

/// An arbitrary basis {e_j} of V, stored as the columns of an n x n matrix of
/// orthonormal-frame coordinates.
class Basis {
 public:
  /// Throws SingularError when the Gram matrix is (numerically) singular.
  Basis(AlgebraContext ctx, Matrix columns);

  static Basis orthonormal(AlgebraContext ctx);
  static Basis from_vectors(AlgebraContext ctx, const std::vector<std::vector<double>>& vectors);

  const AlgebraContext& context() const noexcept { return ctx_; }
  int dim() const noexcept { return ctx_.dim(); }
  const Matrix& matrix() const noexcept { return columns_; }

  /// e_j for 0-based j.
  Multivector vector(int j) const;
  /// e_{j1} ^ ... ^ e_{jk} over the ascending factors of J; 1 for J = 0.
  Multivector blade(BladeMask J) const;
  /// e_1 ^ ... ^ e_n
  Multivector wedge_all() const { return blade(ctx_.pseudoscalar_mask()); }

  /// G_{jk} = e_j . e_k
  Matrix gram() const;

  /// {e^k} with e_j . e^k = delta_j^k, via e^j = sum_k (G^-1)_{jk} e_k.
  Basis reciprocal() const;

 private:
  AlgebraContext ctx_;
  Matrix columns_;
};

}  // namespace ga
