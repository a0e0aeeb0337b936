#pragma once

// Basis-dependent component views of extensors. Operators are always stored
// over the orthonormal frame; components are computed on demand from
// (operator, basis) and never cached.

#include <cstdint>
#include <span>

#include "ga/basis.hpp"
#include "ga/extensor.hpp"

namespace ga {

/// covariant:     t(e_J) . e_K      reconstructs with the reciprocal-basis extensors
/// contravariant: t(e^J) . e^K      reconstructs with the basis extensors
enum class ComponentVariant { covariant, contravariant };

/// Components of a (p,q)-extensor over ordered index tuples. Row r encodes
/// (j1..jp) and column c encodes (k1..kq), 0-based, first index most
/// significant. The array is antisymmetric within each index group.
class PQComponents {
 public:
  PQComponents(int dim, int p, int q, Matrix values);

  int dim() const noexcept { return dim_; }
  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  const Matrix& values() const noexcept { return values_; }

  double at(std::span<const int> j, std::span<const int> k) const;

  /// Entries with strictly ascending j and k: C(n,p) x C(n,q) numbers,
  /// rows/columns in ascending blade-mask order.
  Matrix independent() const;
  std::uint64_t independent_count() const { return binomial(dim_, p_) * binomial(dim_, q_); }

 private:
  int dim_;
  int p_;
  int q_;
  Matrix values_;
};

/// Throws ErrorKind::limit_exceeded when n^(p+q) exceeds 2^24 entries.
PQComponents pq_components(const PQExtensor& t, const Basis& b, ComponentVariant variant);
/// t = 1/(p! q!) sum over ordered tuples of components times basis extensors.
PQExtensor pq_from_components(const PQComponents& c, const Basis& b, ComponentVariant variant);

/// Components t_{J;K} over all collective-index pairs (ascending subsets J, K
/// in mask order): a 2^n x 2^n matrix indexed [J][K].
Matrix ext_components(const GeneralExtensor& t, const Basis& b, ComponentVariant variant);
GeneralExtensor ext_from_components(const Matrix& c, const Basis& b, ComponentVariant variant);

/// Components of an elementary k-extensor: n^k x C(n,q), row = ordered vector
/// index tuple, column = ascending grade-q index set. Limited to k <= 3, n <= 6.
Matrix elementary_components(const ElementaryKExtensor& t, const Basis& b, ComponentVariant variant);
ElementaryKExtensor elementary_from_components(const Matrix& c, int k, int q, const Basis& b,
                                               ComponentVariant variant);

}  // namespace ga
