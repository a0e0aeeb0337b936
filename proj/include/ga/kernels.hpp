#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference version and,
// on x86-64 with AVX2+FMA, a vectorized variant picked once at startup.
// Setting GA_KERNELS=scalar in the environment forces the reference set.

#include <cstddef>
#include <cstdint>

namespace ga::kernels {

/// Which output blades k a blade row contributes to, for row blade A.
enum class BladeFilter : std::uint8_t {
  all,       // geometric product
  superset,  // A subset of k: exterior product
  disjoint,  // A & k == 0: left contraction
  subset,    // k subset of A: right contraction
};

/// out[k] += alpha * signs[k] * w[A & ~k] * src[A ^ k] for every k passing
/// the filter, where w is meet_weights (or 1 when null).
struct BladeRow {
  double* out;
  const double* src;
  const std::int8_t* signs;
  const double* meet_weights;
  double alpha;
  std::uint32_t mask;
  BladeFilter filter;
  std::size_t len;
};

struct KernelTable {
  const char* name;
  double (*dot)(const double* x, const double* y, std::size_t n);
  /// y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  /// y = A x, A row-major rows x cols
  void (*gemv)(const double* a, const double* x, double* y, std::size_t rows,
               std::size_t cols);
  /// C = A B, all row-major; A is m x k, B is k x n
  void (*gemm)(const double* a, const double* b, double* c, std::size_t m,
               std::size_t k, std::size_t n);
  void (*blade_row)(const BladeRow& row);
};

const KernelTable& scalar_kernels() noexcept;

/// nullptr when the variant was not compiled in or the CPU lacks AVX2/FMA.
const KernelTable* avx2_kernels() noexcept;

/// The table used by the library.
const KernelTable& active() noexcept;

}  // namespace ga::kernels
