#include "ga/serialize.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "ga/error.hpp"
#include "json.hpp"

namespace ga {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::invalid_argument, what); }

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

int read_dim(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer()) bad("JSON object needs an integer \"dim\"");
  const int n = j["dim"].get<int>();
  if (n < 1 || n > kMaxDim) bad("\"dim\" must be in 1.." + std::to_string(kMaxDim));
  return n;
}

json matrix_json(const Matrix& m) {
  json arr = json::array();
  for (double v : m.data()) arr.push_back(v);
  return arr;
}

json operator_json(int dim, const char* kind, json shape, const Matrix& m) {
  return json{{"dim", dim}, {"kind", kind}, {"shape", std::move(shape)}, {"matrix", matrix_json(m)}};
}

/// Accepts a flat row-major array of rows*cols numbers or an array of rows.
Matrix read_matrix(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array()) bad("\"matrix\" must be an array");
  Matrix m(rows, cols);
  const bool nested = !j.empty() && j[0].is_array();
  if (nested) {
    if (j.size() != rows) bad("\"matrix\" needs " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    for (std::size_t r = 0; r < rows; ++r) {
      if (!j[r].is_array() || j[r].size() != cols) bad("matrix row " + std::to_string(r + 1) + " needs " + std::to_string(cols) + " entries");
      for (std::size_t c = 0; c < cols; ++c) {
        if (!j[r][c].is_number()) bad("matrix entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") is not a number");
        m(r, c) = j[r][c].get<double>();
      }
    }
    return m;
  }
  if (j.size() != rows * cols) bad("\"matrix\" needs " + std::to_string(rows * cols) + " entries, got " + std::to_string(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) bad("matrix entry (" + std::to_string(i / cols + 1) + "," + std::to_string(i % cols + 1) + ") is not a number");
    m(i / cols, i % cols) = j[i].get<double>();
  }
  return m;
}

void check_kind(const json& j, const char* kind) {
  if (j.contains("kind") && j["kind"] != kind) bad(std::string("expected \"kind\": \"") + kind + "\"");
}

}  // namespace

std::string to_json(const Multivector& x) {
  json terms = json::array();
  const auto cs = x.coeffs();
  for (std::size_t b = 0; b < cs.size(); ++b) {
    if (cs[b] == 0.0) continue;
    terms.push_back(json{{"blades", blade_indices(static_cast<BladeMask>(b))}, {"coeff", cs[b]}});
  }
  return json{{"dim", x.dim()}, {"terms", std::move(terms)}}.dump();
}

std::string to_json(const LinOp& t) {
  return operator_json(t.dim(), "linop", {t.dim(), t.dim()}, t.matrix()).dump();
}

std::string to_json(const GeneralExtensor& t) {
  const auto n = t.context().blade_count();
  return operator_json(t.dim(), "general", {n, n}, t.matrix()).dump();
}

std::string to_json(const PQExtensor& t) {
  json j = operator_json(t.context().dim(), "pq", {t.matrix().rows(), t.matrix().cols()}, t.matrix());
  j["p"] = t.p();
  j["q"] = t.q();
  return j.dump();
}

std::string to_json(const ElementaryKExtensor& t) {
  json j = operator_json(t.context().dim(), "elementary", {t.values().rows(), t.values().cols()}, t.values());
  j["k"] = t.arity();
  j["q"] = t.degree();
  return j.dump();
}

std::string to_json(const MetricStructure& m) {
  return json{{"dim", m.dim()}, {"matrix", matrix_json(m.g().matrix())}}.dump();
}

Multivector multivector_from_json(std::string_view text) {
  const json j = parse_text(text);
  const int n = read_dim(j);
  if (!j.contains("terms") || !j["terms"].is_array()) bad("multivector JSON needs a \"terms\" array");
  AlgebraContext ctx(n);
  Multivector x(ctx);
  for (const auto& term : j["terms"]) {
    if (!term.is_object() || !term.contains("blades") || !term["blades"].is_array() || !term.contains("coeff") ||
        !term["coeff"].is_number()) {
      bad("each term needs \"blades\" and a numeric \"coeff\"");
    }
    BladeMask mask = 0;
    int last = 0;
    for (const auto& b : term["blades"]) {
      if (!b.is_number_integer()) bad("blade indices must be integers");
      const int i = b.get<int>();
      if (i < 1 || i > n) bad("blade index " + std::to_string(i) + " outside 1.." + std::to_string(n));
      if (i <= last) bad("blade indices must be strictly ascending");
      last = i;
      mask |= BladeMask{1} << (i - 1);
    }
    x[mask] += term["coeff"].get<double>();
  }
  return x;
}

LinOp linop_from_json(std::string_view text) {
  const json j = parse_text(text);
  const int n = read_dim(j);
  check_kind(j, "linop");
  if (!j.contains("matrix")) bad("operator JSON needs a \"matrix\"");
  const auto un = static_cast<std::size_t>(n);
  return LinOp(AlgebraContext(n), read_matrix(j["matrix"], un, un));
}

GeneralExtensor general_from_json(std::string_view text) {
  const json j = parse_text(text);
  const int n = read_dim(j);
  check_kind(j, "general");
  if (!j.contains("matrix")) bad("operator JSON needs a \"matrix\"");
  const std::size_t size = std::size_t{1} << n;
  return GeneralExtensor(AlgebraContext(n), read_matrix(j["matrix"], size, size));
}

MetricStructure metric_from_json(const AlgebraContext& ctx, std::string_view text) {
  const json j = parse_text(text);
  const int n = read_dim(j);
  if (n != ctx.dim()) bad("metric has dim " + std::to_string(n) + " but the session has dim " + std::to_string(ctx.dim()));
  if (!j.contains("matrix")) bad("metric JSON needs a \"matrix\"");
  const auto un = static_cast<std::size_t>(n);
  return MetricStructure::from_matrix(ctx, read_matrix(j["matrix"], un, un));
}

MetricStructure metric_from_spec(const AlgebraContext& ctx, std::string_view spec) {
  if (spec == "identity") return MetricStructure::identity(ctx);
  constexpr std::string_view prefix = "diag:";
  if (spec.substr(0, prefix.size()) == prefix) {
    std::vector<double> diag;
    std::string_view rest = spec.substr(prefix.size());
    while (true) {
      const auto comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
        bad("diagonal entry " + std::to_string(diag.size() + 1) + " ('" + std::string(item) + "') is not a number");
      }
      diag.push_back(v);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return MetricStructure::diagonal(ctx, diag);
  }
  std::ifstream in{std::string(spec)};
  if (!in) bad("cannot open metric file '" + std::string(spec) + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return metric_from_json(ctx, buf.str());
}

}  // namespace ga
