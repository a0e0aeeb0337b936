#include "ga/detail/sign_table.hpp"

#include <array>
#include <memory>
#include <mutex>

#include "ga/context.hpp"

namespace ga::detail {
namespace {

struct Slot {
  std::once_flag once;
  std::unique_ptr<std::int8_t[]> table;
};

std::array<Slot, kMaxDim + 1>& slots() {
  static std::array<Slot, kMaxDim + 1> s;
  return s;
}

}  // namespace

const std::int8_t* product_sign_table(int dim) {
  Slot& slot = slots().at(static_cast<std::size_t>(dim));
  std::call_once(slot.once, [&slot, dim] {
    const std::size_t n = std::size_t{1} << dim;
    slot.table = std::make_unique<std::int8_t[]>(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      std::int8_t* row = slot.table.get() + a * n;
      for (std::size_t k = 0; k < n; ++k) {
        const auto am = static_cast<BladeMask>(a);
        row[k] = static_cast<std::int8_t>(blade_sign(am, am ^ static_cast<BladeMask>(k)));
      }
    }
  });
  return slot.table.get();
}

}  // namespace ga::detail
