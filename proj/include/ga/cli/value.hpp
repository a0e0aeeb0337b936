#pragma once

#include <string>
#include <variant>

#include "ga/extensor.hpp"
#include "ga/multivector.hpp"

namespace ga::cli {

/// Scalars and grade-0 multivectors are the same value; operators never
/// convert to multivectors.
using Value = std::variant<double, Multivector, LinOp, GeneralExtensor>;

const char* type_name(const Value& v);

/// True for scalars and for multivectors with no grade above 0.
bool is_scalar_like(const Value& v);
double scalar_of(const Value& v);
/// Scalars become grade-0 multivectors.
Multivector multivector_of(const Value& v, const AlgebraContext& ctx);

/// Multivectors print as sorted terms "1 - 2·e12" with %.{precision}g
/// coefficients; coefficients at or below 1e-12 * max(1, largest) are dropped. Operators print as mat[[...], ...] literals.
std::string format_text(const Value& v, int precision);
std::string format_json(const Value& v, const AlgebraContext& ctx);

std::string format_number(double x, int precision);

}  // namespace ga::cli
