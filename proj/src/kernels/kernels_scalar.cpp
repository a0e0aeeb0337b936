#include "ga/kernels.hpp"

#include "kernels_internal.hpp"

namespace ga::kernels {
namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void gemv_scalar(const double* a, const double* x, double* y, std::size_t rows,
                 std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) {
    const double* row = a + r * cols;
    double acc = 0.0;
    for (std::size_t c = 0; c < cols; ++c) acc += row[c] * x[c];
    y[r] = acc;
  }
}

void gemm_scalar(const double* a, const double* b, double* c, std::size_t m,
                 std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m * n; ++i) c[i] = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double* crow = c + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const double aip = a[i * k + p];
      if (aip == 0.0) continue;
      const double* brow = b + p * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += aip * brow[j];
    }
  }
}

void blade_row_scalar(const BladeRow& r) {
  const std::uint32_t a = r.mask;
  for (std::size_t i = 0; i < r.len; ++i) {
    const auto k = static_cast<std::uint32_t>(i);
    if (!detail::passes(r.filter, a, k)) continue;
    double w = r.alpha * static_cast<double>(r.signs[k]);
    if (r.meet_weights != nullptr) w *= r.meet_weights[a & ~k];
    r.out[k] += w * r.src[a ^ k];
  }
}

}  // namespace

const KernelTable& scalar_kernels() noexcept {
  static const KernelTable table{"scalar",     dot_scalar,  axpy_scalar,
                                 gemv_scalar,  gemm_scalar, blade_row_scalar};
  return table;
}

}  // namespace ga::kernels
