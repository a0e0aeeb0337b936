#pragma once

#include <cstddef>
#include <cstdint>

namespace ga::detail {

/// Row-major 2^n x 2^n table, T[a][k] = blade_sign(a, a ^ k), so that
/// e_a e_{a^k} = T[a][k] e_k. Built once per dimension, never mutated after.
const std::int8_t* product_sign_table(int dim);

inline const std::int8_t* product_sign_row(int dim, std::uint32_t a) {
  return product_sign_table(dim) + (static_cast<std::size_t>(a) << dim);
}

}  // namespace ga::detail
