#include "ga/cli/value.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ga/serialize.hpp"

namespace ga::cli {
namespace {

constexpr double kDisplayChop = 1e-12;

std::string matrix_text(const Matrix& m, int precision) {
  std::string s = "mat[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    s += r ? ", [" : "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) s += ", ";
      s += format_number(m(r, c), precision);
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace

const char* type_name(const Value& v) {
  switch (v.index()) {
    case 0: return "scalar";
    case 1: return is_scalar_like(v) ? "scalar" : "multivector";
    case 2: return "linear operator";
    default: return "general extensor";
  }
}

bool is_scalar_like(const Value& v) {
  if (std::holds_alternative<double>(v)) return true;
  if (const auto* x = std::get_if<Multivector>(&v)) {
    const auto cs = x->coeffs();
    return std::all_of(cs.begin() + 1, cs.end(), [](double c) { return c == 0.0; });
  }
  return false;
}

double scalar_of(const Value& v) {
  if (const auto* d = std::get_if<double>(&v)) return *d;
  return std::get<Multivector>(v).scalar_part();
}

Multivector multivector_of(const Value& v, const AlgebraContext& ctx) {
  if (const auto* d = std::get_if<double>(&v)) return Multivector::scalar(ctx, *d);
  return std::get<Multivector>(v);
}

std::string format_number(double x, int precision) {
  if (x == 0.0) return "0";  // also folds -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, x);
  return buf;
}

std::string format_text(const Value& v, int precision) {
  if (const auto* d = std::get_if<double>(&v)) return format_number(*d, precision);
  if (const auto* t = std::get_if<LinOp>(&v)) return matrix_text(t->matrix(), precision);
  if (const auto* g = std::get_if<GeneralExtensor>(&v)) return matrix_text(g->matrix(), precision);

  const auto& x = std::get<Multivector>(v);
  const auto cs = x.coeffs();
  double biggest = 1.0;
  for (double c : cs)
    if (std::isfinite(c)) biggest = std::max(biggest, std::abs(c));
  const double chop = kDisplayChop * biggest;
  std::string out;
  for (std::size_t b = 0; b < cs.size(); ++b) {
    const double c = cs[b];
    if (std::isfinite(c) && !(std::abs(c) > chop)) continue;
    const bool negative = c < 0.0;
    const std::string mag = format_number(std::abs(c), precision);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (b == 0) {
      out += mag;
    } else {
      const std::string name = blade_name(static_cast<BladeMask>(b), x.dim());
      out += mag == "1" ? name : mag + "·" + name;
    }
  }
  return out.empty() ? "0" : out;
}

std::string format_json(const Value& v, const AlgebraContext& ctx) {
  if (const auto* t = std::get_if<LinOp>(&v)) return to_json(*t);
  if (const auto* g = std::get_if<GeneralExtensor>(&v)) return to_json(*g);
  return to_json(multivector_of(v, ctx));
}

}  // namespace ga::cli
