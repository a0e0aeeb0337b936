#pragma once

#include <vector>

#include "ga/extensor.hpp"
#include "ga/multivector.hpp"

namespace ga {

/// A symmetric non-degenerate g on V with its signature (p, q) and a gauge
/// decomposition g = h+ o eta o h. Everything is computed at construction.
class MetricStructure {
 public:
  /// Throws ErrorKind::asymmetric (entries differing by more than 1e-12) or
  /// ErrorKind::degenerate (an eigenvalue below tol_abs * max(1, |g|)).
  static MetricStructure from_matrix(const AlgebraContext& ctx, const Matrix& m);
  static MetricStructure identity(const AlgebraContext& ctx);
  static MetricStructure diagonal(const AlgebraContext& ctx, const std::vector<double>& diag);

  const AlgebraContext& context() const noexcept { return g_.context(); }
  int dim() const noexcept { return g_.dim(); }
  const LinOp& g() const noexcept { return g_; }
  const LinOp& g_inverse() const noexcept { return g_inv_; }
  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  /// det[g] from the pseudoscalar formula.
  double det() const noexcept { return det_; }

  /// Eigenvalues, positive first, each group by descending magnitude.
  const std::vector<double>& eigenvalues() const noexcept { return lambda_; }
  /// Orthogonal Q with g = Q diag(eigenvalues) Q^T; column j pairs with eigenvalue j.
  const LinOp& eigenvectors() const noexcept { return q_vecs_; }
  /// h = |Lambda|^(1/2) Q^T
  const LinOp& h() const noexcept { return h_; }
  /// diag(+1 x p, -1 x q)
  const LinOp& eta() const noexcept { return eta_; }
  /// h* = (h+)^-1
  const LinOp& h_star() const noexcept { return h_star_; }

 private:
  MetricStructure(LinOp g, LinOp g_inv, std::vector<double> lambda, LinOp q_vecs, LinOp h, LinOp eta,
                  LinOp h_star, int p, int q, double det);

  LinOp g_;
  LinOp g_inv_;
  std::vector<double> lambda_;
  LinOp q_vecs_;
  LinOp h_;
  LinOp eta_;
  LinOp h_star_;
  int p_;
  int q_;
  double det_;
};

/// Symmetric eigendecomposition by cyclic Jacobi rotations. Returns the
/// eigenvalues unsorted and writes the eigenvectors into the columns of vecs.
std::vector<double> jacobi_eigen(const Matrix& sym, Matrix& vecs);

/// X .g Y = g-bar(X) . Y
double g_scalar_product(const MetricStructure& m, const Multivector& x, const Multivector& y);

enum class Side { left, right };

/// left:  (g-bar X) _| Y     right: X |_ (g-bar Y)
/// With inverse = true the deformation uses g^-1.
Multivector g_contraction(const MetricStructure& m, const Multivector& x, const Multivector& y, Side side,
                          bool inverse);

/// Clifford product of the g (or g^-1) metric algebra, evaluated in the
/// eigenbasis of g where the metric is diagonal.
Multivector g_clifford_product(const MetricStructure& m, const Multivector& x, const Multivector& y,
                               bool inverse);

/// t+(g) = g-bar^-1 o t+ o g-bar
GradeSetExtensor adjoint_metric(const GradeSetExtensor& t, const MetricStructure& m);
LinOp adjoint_metric(const LinOp& t, const MetricStructure& m);

/// The block of t-bar mapping grades in s to themselves, without building the
/// full 2^n x 2^n matrix.
GradeSetExtensor extended_block(const LinOp& t, GradeSet s);

}  // namespace ga
