#include <cstdint>
#include <vector>

#include "doctest.h"
#include "ga/detail/sign_table.hpp"
#include "ga/kernels.hpp"
#include "oracles.hpp"

using ga::kernels::BladeFilter;
using ga::kernels::BladeRow;
using ga::kernels::KernelTable;

namespace {

std::vector<double> random_vec(oracle::Rng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (double& x : v) x = oracle::uniform(rng);
  return v;
}

// FMA contraction changes rounding, so the variants agree to a few ulps.
constexpr double kTol = 1e-13;

void check_tables(const KernelTable& ref, const KernelTable& alt) {
  oracle::Rng rng(21);
  for (std::size_t n = 0; n <= 67; ++n) {
    const auto x = random_vec(rng, n);
    const auto y = random_vec(rng, n);
    CHECK(oracle::close(ref.dot(x.data(), y.data(), n), alt.dot(x.data(), y.data(), n), kTol));

    auto y1 = y;
    auto y2 = y;
    ref.axpy(0.75, x.data(), y1.data(), n);
    alt.axpy(0.75, x.data(), y2.data(), n);
    CHECK(oracle::close(y1, y2, kTol));
  }

  for (std::size_t rows : {1u, 3u, 4u, 7u, 16u, 33u}) {
    for (std::size_t cols : {1u, 2u, 5u, 8u, 13u, 64u}) {
      const auto a = random_vec(rng, rows * cols);
      const auto x = random_vec(rng, cols);
      std::vector<double> o1(rows), o2(rows);
      ref.gemv(a.data(), x.data(), o1.data(), rows, cols);
      alt.gemv(a.data(), x.data(), o2.data(), rows, cols);
      CHECK(oracle::close(o1, o2, kTol));

      for (std::size_t inner : {1u, 4u, 9u}) {
        const auto l = random_vec(rng, rows * inner);
        const auto r = random_vec(rng, inner * cols);
        std::vector<double> c1(rows * cols), c2(rows * cols);
        ref.gemm(l.data(), r.data(), c1.data(), rows, inner, cols);
        alt.gemm(l.data(), r.data(), c2.data(), rows, inner, cols);
        CHECK(oracle::close(c1, c2, kTol));
      }
    }
  }

  for (int dim = 0; dim <= 8; ++dim) {
    const std::size_t len = std::size_t{1} << dim;
    const auto src = random_vec(rng, len);
    const auto weights = random_vec(rng, len);
    for (std::uint32_t a = 0; a < len; ++a) {
      for (BladeFilter f : {BladeFilter::all, BladeFilter::superset, BladeFilter::disjoint, BladeFilter::subset}) {
        for (bool weighted : {false, true}) {
          auto o1 = random_vec(rng, len);
          auto o2 = o1;
          const std::int8_t* signs = dim == 0 ? nullptr : ga::detail::product_sign_row(dim, a);
          static const std::int8_t one = 1;
          if (signs == nullptr) signs = &one;
          BladeRow r{o1.data(), src.data(), signs, weighted ? weights.data() : nullptr, -1.5, a, f, len};
          ref.blade_row(r);
          r.out = o2.data();
          alt.blade_row(r);
          CHECK(oracle::close(o1, o2, kTol));
        }
      }
    }
  }
}

}  // namespace

TEST_CASE("scalar blade_row matches the definition") {
  const int dim = 4;
  const std::size_t len = 16;
  oracle::Rng rng(22);
  const auto src = random_vec(rng, len);
  for (std::uint32_t a = 0; a < len; ++a) {
    std::vector<double> out(len, 0.0);
    const BladeRow r{out.data(), src.data(), ga::detail::product_sign_row(dim, a), nullptr, 1.0, a,
                     BladeFilter::superset, len};
    ga::kernels::scalar_kernels().blade_row(r);
    // e_a * sum_b src[b] e_b restricted to b disjoint from a.
    std::vector<double> x(len, 0.0);
    x[a] = 1.0;
    const auto expect = oracle::product(x, src, oracle::ProductKind::wedge, std::vector<double>(dim, 1.0));
    CHECK(oracle::close(out, expect, 1e-15));
  }
}

TEST_CASE("active table is one of the known variants") {
  const auto& act = ga::kernels::active();
  const auto* avx = ga::kernels::avx2_kernels();
  CHECK((&act == &ga::kernels::scalar_kernels() || (avx != nullptr && &act == avx)));
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
  const KernelTable* avx = ga::kernels::avx2_kernels();
  if (avx == nullptr) {
    MESSAGE("AVX2 variant unavailable on this build or CPU; skipping equivalence");
    return;
  }
  check_tables(ga::kernels::scalar_kernels(), *avx);
}
