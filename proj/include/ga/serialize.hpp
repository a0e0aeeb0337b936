#pragma once

// JSON encodings. Multivectors: {"dim", "terms": [{"blades": [1-based
// ascending], "coeff"}]} with terms in mask order and zeros omitted.
// Operators: {"dim", "kind", "shape", "matrix": row-major}.
// Metrics: {"dim", "matrix"} with the matrix flat row-major or as rows.

#include <string>
#include <string_view>

#include "ga/extensor.hpp"
#include "ga/metric.hpp"
#include "ga/multivector.hpp"

namespace ga {

std::string to_json(const Multivector& x);
std::string to_json(const LinOp& t);
std::string to_json(const GeneralExtensor& t);
std::string to_json(const PQExtensor& t);
std::string to_json(const ElementaryKExtensor& t);
std::string to_json(const MetricStructure& m);

/// Throws ErrorKind::invalid_argument on malformed input.
Multivector multivector_from_json(std::string_view text);
LinOp linop_from_json(std::string_view text);
GeneralExtensor general_from_json(std::string_view text);
MetricStructure metric_from_json(const AlgebraContext& ctx, std::string_view text);

/// "identity", "diag:a,b,..." or the path of a metric JSON file.
MetricStructure metric_from_spec(const AlgebraContext& ctx, std::string_view spec);

}  // namespace ga
