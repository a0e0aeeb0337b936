#pragma once

#include "ga/kernels.hpp"

namespace ga::kernels::detail {

inline bool passes(BladeFilter f, std::uint32_t a, std::uint32_t k) noexcept {
  switch (f) {
    case BladeFilter::all: return true;
    case BladeFilter::superset: return (k & a) == a;
    case BladeFilter::disjoint: return (k & a) == 0;
    case BladeFilter::subset: return (k & ~a) == 0;
  }
  return false;
}

#if defined(GA_HAVE_AVX2)
const KernelTable& avx2_table() noexcept;
#endif

}  // namespace ga::kernels::detail
