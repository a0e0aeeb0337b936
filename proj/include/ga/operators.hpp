#pragma once

#include <string_view>

#include "ga/basis.hpp"
#include "ga/extensor.hpp"
#include "ga/multivector.hpp"

namespace ga {

// Extension (outermorphism) ------------------------------------------------

/// t-bar: grade-preserving, t(v1 ^ ... ^ vk) = t(v1) ^ ... ^ t(vk).
GeneralExtensor extend(const LinOp& t);
/// Same operator, assembled from an arbitrary basis and its reciprocal:
/// t-bar(X) = sum_J (e^J . X) t(e_j1) ^ ... ^ t(e_jk).
GeneralExtensor extend(const LinOp& t, const Basis& b);
/// t-bar(X) without materializing the 2^n x 2^n matrix.
Multivector apply_extended(const LinOp& t, const Multivector& x);

// Adjoint ------------------------------------------------------------------

/// X . t+(Y) = t(X) . Y. The blade basis is orthonormal, so this is the
/// transposed block with domain and codomain swapped.
GradeSetExtensor adjoint(const GradeSetExtensor& t);
GeneralExtensor adjoint(const GeneralExtensor& t);
LinOp adjoint(const LinOp& t);
/// t* = (t+)^-1 = (t^-1)+
LinOp adjoint_inverse(const LinOp& t);

// Generalization -----------------------------------------------------------

/// t~(X) = t(e^k) ^ (e_k _| X); a derivation of the exterior algebra.
GeneralExtensor generalize(const LinOp& t);
GeneralExtensor generalize(const LinOp& t, const Basis& b);
Multivector apply_generalized(const LinOp& t, const Multivector& x);

/// biv[t] = t(e^k) ^ e_k
Multivector bivector_of(const LinOp& t);
Multivector bivector_of(const LinOp& t, const Basis& b);

enum class Product { wedge, scalar, left_contraction, right_contraction, clifford };

/// Parses "wedge" | "scalar" | "left_contraction" | "right_contraction" |
/// "clifford"; throws ErrorKind::invalid_argument otherwise.
Product parse_product(std::string_view tag);
Multivector apply_product(Product p, const Multivector& x, const Multivector& y);

/// Both sides of t~_-(X * Y) = t~_-(X) * Y + X * t~_-(Y). For the scalar
/// product the left side is the (vanishing) image of a scalar.
struct DerivationCheck {
  Multivector lhs;
  Multivector rhs;
  bool holds(double tol_rel, double tol_abs) const { return approx_equal(lhs, rhs, tol_rel, tol_abs); }
};
DerivationCheck skew_generalized_derivation_check(const LinOp& t, const Multivector& x,
                                                  const Multivector& y, Product product);

// Determinant and inversion ------------------------------------------------

/// det[t] = t-bar(e_1 ^ ... ^ e_n) . (e^1 ^ ... ^ e^n), orthonormal frame.
double determinant(const LinOp& t);
double determinant(const LinOp& t, const Basis& b);

/// |det t| <= 1e-12 * max(1, ||t||_inf^n)
bool is_singular(const LinOp& t, double det);

/// t^-1(v) = det^-1[t] t-bar+(v I) I^-1. Throws SingularError carrying |det|.
LinOp inverse(const LinOp& t);

}  // namespace ga
