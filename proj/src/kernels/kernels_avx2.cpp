// Compiled with -mavx2 -mfma. Only reached after a runtime CPU check, so this
// translation unit must not instantiate any inline code shared with others.

#include <immintrin.h>

#include <cstring>

#include "ga/kernels.hpp"

namespace ga::kernels {
namespace detail {
const KernelTable& avx2_table() noexcept;
}

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d a = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(a, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void gemv_avx2(const double* a, const double* x, double* y, std::size_t rows,
               std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) y[r] = dot_avx2(a + r * cols, x, cols);
}

void gemm_avx2(const double* a, const double* b, double* c, std::size_t m,
               std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m * n; ++i) c[i] = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double* crow = c + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const double aip = a[i * k + p];
      if (aip == 0.0) continue;
      const __m256d av = _mm256_set1_pd(aip);
      const double* brow = b + p * n;
      std::size_t j = 0;
      for (; j + 4 <= n; j += 4) {
        _mm256_storeu_pd(crow + j,
                         _mm256_fmadd_pd(av, _mm256_loadu_pd(brow + j), _mm256_loadu_pd(crow + j)));
      }
      for (; j < n; ++j) crow[j] += aip * brow[j];
    }
  }
}

inline bool passes_tail(BladeFilter f, std::uint32_t a, std::uint32_t k) {
  switch (f) {
    case BladeFilter::all: return true;
    case BladeFilter::superset: return (k & a) == a;
    case BladeFilter::disjoint: return (k & a) == 0;
    case BladeFilter::subset: return (k & ~a) == 0;
  }
  return false;
}

void blade_row_avx2(const BladeRow& r) {
  const std::uint32_t a = r.mask;
  std::size_t i = 0;
  if (r.len >= 4) {
    const __m256i amask = _mm256_set1_epi64x(static_cast<long long>(a));
    const __m256i zero = _mm256_setzero_si256();
    const __m256i step = _mm256_set1_epi64x(4);
    const __m256d alpha = _mm256_set1_pd(r.alpha);
    __m256i idx = _mm256_setr_epi64x(0, 1, 2, 3);
    for (; i + 4 <= r.len; i += 4) {
      __m256i keep;
      switch (r.filter) {
        case BladeFilter::superset:
          keep = _mm256_cmpeq_epi64(_mm256_and_si256(idx, amask), amask);
          break;
        case BladeFilter::disjoint:
          keep = _mm256_cmpeq_epi64(_mm256_and_si256(idx, amask), zero);
          break;
        case BladeFilter::subset:
          keep = _mm256_cmpeq_epi64(_mm256_andnot_si256(amask, idx), zero);
          break;
        case BladeFilter::all:
        default:
          keep = _mm256_cmpeq_epi64(zero, zero);
          break;
      }
      if (_mm256_testz_si256(keep, keep) == 0) {
        std::int32_t packed;
        std::memcpy(&packed, r.signs + i, sizeof(packed));
        const __m256d sgn = _mm256_cvtepi32_pd(_mm_cvtepi8_epi32(_mm_cvtsi32_si128(packed)));
        __m256d w = _mm256_mul_pd(alpha, sgn);
        if (r.meet_weights != nullptr) {
          const __m256i widx = _mm256_andnot_si256(idx, amask);
          w = _mm256_mul_pd(w, _mm256_i64gather_pd(r.meet_weights, widx, 8));
        }
        w = _mm256_and_pd(w, _mm256_castsi256_pd(keep));
        const __m256d src = _mm256_i64gather_pd(r.src, _mm256_xor_si256(idx, amask), 8);
        _mm256_storeu_pd(r.out + i, _mm256_fmadd_pd(w, src, _mm256_loadu_pd(r.out + i)));
      }
      idx = _mm256_add_epi64(idx, step);
    }
  }
  for (; i < r.len; ++i) {
    const auto k = static_cast<std::uint32_t>(i);
    if (!passes_tail(r.filter, a, k)) continue;
    double w = r.alpha * static_cast<double>(r.signs[k]);
    if (r.meet_weights != nullptr) w *= r.meet_weights[a & ~k];
    r.out[k] += w * r.src[a ^ k];
  }
}

}  // namespace

const KernelTable& detail::avx2_table() noexcept {
  static const KernelTable table{"avx2", dot_avx2,  axpy_avx2,
                                 gemv_avx2, gemm_avx2, blade_row_avx2};
  return table;
}

}  // namespace ga::kernels
