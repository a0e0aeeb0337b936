#include <cstdlib>
#include <cstring>

#include "ga/kernels.hpp"
#include "kernels_internal.hpp"

namespace ga::kernels {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(GA_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& select() noexcept {
  const char* forced = std::getenv("GA_KERNELS");
  if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return scalar_kernels();
  if (const KernelTable* t = avx2_kernels()) return *t;
  return scalar_kernels();
}

}  // namespace

const KernelTable* avx2_kernels() noexcept {
#if defined(GA_HAVE_AVX2)
  static const bool ok = cpu_has_avx2();
  return ok ? &detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() noexcept {
  static const KernelTable& table = select();
  return table;
}

}  // namespace ga::kernels
