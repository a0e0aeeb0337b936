#include "ga/context.hpp"

#include "ga/error.hpp"

namespace ga {

int blade_sign(BladeMask a, BladeMask b) noexcept {
  // Each factor of b must move left past every factor of a with a larger index.
  int swaps = 0;
  for (BladeMask s = a >> 1; s != 0; s >>= 1) swaps += std::popcount(s & b);
  return (swaps & 1) ? -1 : 1;
}

AlgebraContext::AlgebraContext(int dim, double tol_rel, double tol_abs)
    : dim_(dim), tol_rel_(tol_rel), tol_abs_(tol_abs) {
  if (dim < 1 || dim > kMaxDim) {
    throw Error(ErrorKind::out_of_range,
                "dimension " + std::to_string(dim) + " outside 1.." + std::to_string(kMaxDim));
  }
  if (!(tol_rel >= 0.0) || !(tol_abs >= 0.0)) {
    throw Error(ErrorKind::invalid_argument, "tolerances must be non-negative");
  }
}

void AlgebraContext::require_same(const AlgebraContext& other) const {
  if (dim_ != other.dim_) {
    throw Error(ErrorKind::context_mismatch, "context mismatch: dim " + std::to_string(dim_) +
                                                 " vs dim " + std::to_string(other.dim_));
  }
}

GradeSet::GradeSet(std::initializer_list<int> grades) {
  for (int k : grades) {
    if (k < 0 || k > kMaxDim) {
      throw Error(ErrorKind::out_of_range, "grade " + std::to_string(k) + " out of range");
    }
    bits_ |= 1u << k;
  }
}

GradeSet GradeSet::single(int k) {
  if (k < 0 || k > kMaxDim) {
    throw Error(ErrorKind::out_of_range, "grade " + std::to_string(k) + " out of range");
  }
  return from_bits(1u << k);
}

GradeSet GradeSet::all(int dim) { return from_bits((1u << (dim + 1)) - 1u); }

std::vector<int> GradeSet::grades() const {
  std::vector<int> out;
  for (int k = 0; k < 32; ++k)
    if (contains(k)) out.push_back(k);
  return out;
}

void GradeSet::validate(int dim) const {
  if (max_grade() > dim) {
    throw Error(ErrorKind::out_of_range, "grade " + std::to_string(max_grade()) +
                                             " exceeds dimension " + std::to_string(dim));
  }
}

std::vector<BladeMask> blades_of_grade(int dim, int k) {
  std::vector<BladeMask> out;
  const BladeMask n = BladeMask{1} << dim;
  for (BladeMask m = 0; m < n; ++m)
    if (blade_grade(m) == k) out.push_back(m);
  return out;
}

std::vector<BladeMask> blades_in(int dim, GradeSet s) {
  std::vector<BladeMask> out;
  const BladeMask n = BladeMask{1} << dim;
  for (BladeMask m = 0; m < n; ++m)
    if (s.contains(blade_grade(m))) out.push_back(m);
  return out;
}

std::vector<int> blade_indices(BladeMask m) {
  std::vector<int> out;
  for (int i = 0; m != 0; ++i, m >>= 1)
    if (m & 1u) out.push_back(i + 1);
  return out;
}

std::string blade_name(BladeMask m, int dim) {
  if (m == 0) return "1";
  const auto idx = blade_indices(m);
  std::string s = "e";
  if (dim <= 9) {
    for (int i : idx) s += static_cast<char>('0' + i);
    return s;
  }
  s += '[';
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(idx[i]);
  }
  s += ']';
  return s;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace ga
