#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace ga {

inline constexpr int kMaxDim = 12;

/// Bit i set <=> basis vector e_{i+1} is a factor of the blade. Factors are
/// always taken in ascending index order.
using BladeMask = std::uint32_t;

inline int blade_grade(BladeMask m) noexcept { return std::popcount(m); }

/// Sign of the Euclidean product e_a e_b = sign * e_{a^b} for canonical
/// (ascending) blades, counted by transpositions.
int blade_sign(BladeMask a, BladeMask b) noexcept;

/// The vector space V = R^n with its fixed Euclidean metric and the
/// comparison tolerances shared by every value built over it.
class AlgebraContext {
 public:
  explicit AlgebraContext(int dim, double tol_rel = 1e-9, double tol_abs = 1e-12);

  int dim() const noexcept { return dim_; }
  std::size_t blade_count() const noexcept { return std::size_t{1} << dim_; }
  BladeMask pseudoscalar_mask() const noexcept {
    return static_cast<BladeMask>(blade_count() - 1);
  }
  double tol_rel() const noexcept { return tol_rel_; }
  double tol_abs() const noexcept { return tol_abs_; }

  /// Throws ErrorKind::context_mismatch when the dimensions differ.
  void require_same(const AlgebraContext& other) const;

  /// Contexts are interchangeable when they describe the same space;
  /// tolerances are a property of comparisons, not of the space.
  bool operator==(const AlgebraContext& other) const noexcept {
    return dim_ == other.dim_;
  }

 private:
  int dim_;
  double tol_rel_;
  double tol_abs_;
};

/// A set of grades {k} subset of {0..n}; the empty set denotes {0}.
class GradeSet {
 public:
  constexpr GradeSet() = default;
  GradeSet(std::initializer_list<int> grades);

  static GradeSet single(int k);
  static GradeSet all(int dim);
  static constexpr GradeSet from_bits(std::uint32_t bits) {
    GradeSet s;
    s.bits_ = bits;
    return s;
  }

  bool contains(int k) const noexcept {
    return k >= 0 && k < 32 && ((bits_ >> k) & 1u) != 0;
  }
  bool empty() const noexcept { return bits_ == 0; }
  bool disjoint_with(const GradeSet& o) const noexcept { return (bits_ & o.bits_) == 0; }
  std::uint32_t bits() const noexcept { return bits_; }
  int max_grade() const noexcept { return bits_ == 0 ? -1 : 31 - std::countl_zero(bits_); }
  std::vector<int> grades() const;

  GradeSet intersect(const GradeSet& o) const noexcept { return from_bits(bits_ & o.bits_); }
  GradeSet unite(const GradeSet& o) const noexcept { return from_bits(bits_ | o.bits_); }

  /// Throws ErrorKind::out_of_range if any grade exceeds dim.
  void validate(int dim) const;

  bool operator==(const GradeSet&) const noexcept = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Canonical blades of grade k, in ascending mask order.
std::vector<BladeMask> blades_of_grade(int dim, int k);

/// Canonical blades whose grade lies in s, in ascending mask order.
std::vector<BladeMask> blades_in(int dim, GradeSet s);

/// 1-based ascending factor indices of a blade.
std::vector<int> blade_indices(BladeMask m);

/// "e12" for dim <= 9, "e[1,2]" otherwise; the scalar blade is "1".
std::string blade_name(BladeMask m, int dim);

std::uint64_t binomial(int n, int k);

}  // namespace ga
