#include "ga/cli/eval.hpp"

#include <cmath>
#include <functional>
#include <utility>

#include "ga/error.hpp"
#include "ga/hodge.hpp"
#include "ga/operators.hpp"

namespace ga::cli {
namespace {

using Args = std::vector<Value>;

struct CallSite {
  const Node& node;
  const std::string& name;
  Session& session;

  const Span& arg_span(std::size_t i) const { return node.children[i + 1]->span; }

  [[noreturn]] void type_error(std::size_t i, const char* wanted, const Value& got) const {
    throw CliError(name + " expects " + wanted + " as argument " + std::to_string(i + 1) + ", got " +
                       type_name(got),
                   arg_span(i));
  }

  const LinOp& linop(const Args& a, std::size_t i) const {
    if (const auto* t = std::get_if<LinOp>(&a[i])) return *t;
    type_error(i, "a linear operator", a[i]);
  }

  Multivector mv(const Args& a, std::size_t i) const {
    if (std::holds_alternative<double>(a[i]) || std::holds_alternative<Multivector>(a[i]))
      return multivector_of(a[i], session.context());
    type_error(i, "a multivector", a[i]);
  }

  int integer(const Args& a, std::size_t i) const {
    if (!is_scalar_like(a[i])) type_error(i, "an integer", a[i]);
    const double d = scalar_of(a[i]);
    if (!(std::abs(d) < 1e9) || d != std::floor(d)) {
      throw CliError(name + " expects an integer as argument " + std::to_string(i + 1), arg_span(i));
    }
    return static_cast<int>(d);
  }

  int grade(const Args& a, std::size_t i) const {
    const int k = integer(a, i);
    if (k < 0 || k > session.context().dim()) {
      throw CliError("grade " + std::to_string(k) + " outside 0.." + std::to_string(session.context().dim()),
                     arg_span(i));
    }
    return k;
  }
};

struct Builtin {
  std::size_t min_args;
  std::size_t max_args;
  std::function<Value(const CallSite&, const Args&)> fn;
};

Value operator_unary(const CallSite& cs, const Args& a, LinOp (*on_linop)(const LinOp&),
                     GeneralExtensor (*on_general)(const GeneralExtensor&)) {
  if (const auto* t = std::get_if<LinOp>(&a[0])) return on_linop(*t);
  if (const auto* g = std::get_if<GeneralExtensor>(&a[0])) return on_general(*g);
  cs.type_error(0, "an operator", a[0]);
}

const std::map<std::string, Builtin>& builtins() {
  static const std::map<std::string, Builtin> table = [] {
    std::map<std::string, Builtin> b;
    const auto mv1 = [](Multivector (*f)(const Multivector&)) {
      return Builtin{1, 1, [f](const CallSite& cs, const Args& a) -> Value { return Value(f(cs.mv(a, 0))); }};
    };

    // Operator calculus
    b["ext"] = {1, 2, [](const CallSite& cs, const Args& a) -> Value {
                  const LinOp& t = cs.linop(a, 0);
                  if (a.size() == 1) return extend(t);
                  return Value(apply_extended(t, cs.mv(a, 1)));
                }};
    b["gen"] = {1, 2, [](const CallSite& cs, const Args& a) -> Value {
                  const LinOp& t = cs.linop(a, 0);
                  if (a.size() == 1) return generalize(t);
                  return Value(apply_generalized(t, cs.mv(a, 1)));
                }};
    b["adj"] = {1, 1, [](const CallSite& cs, const Args& a) -> Value {
                  return operator_unary(cs, a, [](const LinOp& t) { return adjoint(t); },
                                        [](const GeneralExtensor& g) { return adjoint(g); });
                }};
    b["madj"] = {1, 1, [](const CallSite& cs, const Args& a) -> Value {
                   const MetricStructure& m = cs.session.metric();
                   if (const auto* t = std::get_if<LinOp>(&a[0])) return adjoint_metric(*t, m);
                   if (const auto* g = std::get_if<GeneralExtensor>(&a[0])) {
                     const GradeSet all = GradeSet::all(m.dim());
                     return adjoint_metric(GradeSetExtensor::restrict(*g, all, all), m).to_general();
                   }
                   cs.type_error(0, "an operator", a[0]);
                 }};
    b["biv"] = {1, 1, [](const CallSite& cs, const Args& a) -> Value { return Value(bivector_of(cs.linop(a, 0))); }};
    b["det"] = {1, 1, [](const CallSite& cs, const Args& a) -> Value { return determinant(cs.linop(a, 0)); }};
    b["inv"] = {1, 1, [](const CallSite& cs, const Args& a) -> Value { return inverse(cs.linop(a, 0)); }};
    b["sym"] = {1, 1, [](const CallSite& cs, const Args& a) -> Value {
                  return operator_unary(cs, a, [](const LinOp& t) { return t.symmetric_part(); },
                                        [](const GeneralExtensor& g) { return g.symmetric_part(); });
                }};
    b["skew"] = {1, 1, [](const CallSite& cs, const Args& a) -> Value {
                   return operator_unary(cs, a, [](const LinOp& t) { return t.skew_part(); },
                                         [](const GeneralExtensor& g) { return g.skew_part(); });
                 }};

    // Hodge maps
    b["dual"] = mv1([](const Multivector& x) { return hodge_standard(x); });
    b["idual"] = mv1([](const Multivector& x) { return hodge_standard_inv(x); });
    b["mdual"] = {1, 1, [](const CallSite& cs, const Args& a) -> Value {
                    return Value(hodge_metric(cs.session.metric(), cs.mv(a, 0)));
                  }};
    b["imdual"] = {1, 1, [](const CallSite& cs, const Args& a) -> Value {
                     return Value(hodge_metric_inv(cs.session.metric(), cs.mv(a, 0)));
                   }};
    b["mdual_std"] = {1, 1, [](const CallSite& cs, const Args& a) -> Value {
                        return Value(hodge_metric_via_standard(cs.session.metric(), cs.mv(a, 0)));
                      }};
    b["mdual_gauge"] = {1, 1, [](const CallSite& cs, const Args& a) -> Value {
                          return Value(hodge_metric_via_gauge(cs.session.metric(), cs.mv(a, 0)));
                        }};

    // Grades and involutions
    b["grade"] = {2, 2, [](const CallSite& cs, const Args& a) -> Value {
                    return Value(grade_part(cs.mv(a, 0), cs.grade(a, 1)));
                  }};
    b["proj"] = {1, 64, [](const CallSite& cs, const Args& a) -> Value {
                   GradeSet s;
                   for (std::size_t i = 1; i < a.size(); ++i) s = s.unite(GradeSet::single(cs.grade(a, i)));
                   return Value(project_grades(cs.mv(a, 0), s));
                 }};
    b["rev"] = mv1(reversion);
    b["ginv"] = mv1(grade_involution);
    b["conj"] = mv1(conjugation);

    // Products without an operator symbol
    b["comm"] = {2, 2, [](const CallSite& cs, const Args& a) -> Value {
                   return Value(commutator(cs.mv(a, 0), cs.mv(a, 1)));
                 }};
    b["gdot"] = {2, 2, [](const CallSite& cs, const Args& a) -> Value {
                   return g_scalar_product(cs.session.metric(), cs.mv(a, 0), cs.mv(a, 1));
                 }};
    const auto gprod = [](auto f) {
      return Builtin{2, 2, [f](const CallSite& cs, const Args& a) -> Value {
                       return Value(f(cs.session.metric(), cs.mv(a, 0), cs.mv(a, 1)));
                     }};
    };
    b["glc"] = gprod([](const MetricStructure& m, const Multivector& x, const Multivector& y) {
      return g_contraction(m, x, y, Side::left, false);
    });
    b["grc"] = gprod([](const MetricStructure& m, const Multivector& x, const Multivector& y) {
      return g_contraction(m, x, y, Side::right, false);
    });
    b["iglc"] = gprod([](const MetricStructure& m, const Multivector& x, const Multivector& y) {
      return g_contraction(m, x, y, Side::left, true);
    });
    b["igrc"] = gprod([](const MetricStructure& m, const Multivector& x, const Multivector& y) {
      return g_contraction(m, x, y, Side::right, true);
    });
    b["gprod"] = gprod([](const MetricStructure& m, const Multivector& x, const Multivector& y) {
      return g_clifford_product(m, x, y, false);
    });
    b["igprod"] = gprod([](const MetricStructure& m, const Multivector& x, const Multivector& y) {
      return g_clifford_product(m, x, y, true);
    });

    // Constants of the session
    b["vol"] = {0, 0, [](const CallSite& cs, const Args&) -> Value {
                  return Value(standard_volume(cs.session.context()).tau);
                }};
    b["mvol"] = {0, 0, [](const CallSite& cs, const Args&) -> Value {
                   return Value(metric_volume(cs.session.metric()).tau);
                 }};
    b["id"] = {0, 0, [](const CallSite& cs, const Args&) -> Value { return LinOp::identity(cs.session.context()); }};
    b["metric"] = {0, 0, [](const CallSite& cs, const Args&) -> Value { return cs.session.metric().g(); }};
    return b;
  }();
  return table;
}

[[noreturn]] void binary_type_error(const Node& n, const Value& a, const Value& b) {
  std::string msg = std::string("operator '") + n.name + "' is not defined for " + type_name(a) + " and " +
                    type_name(b);
  const bool op_left = std::holds_alternative<LinOp>(a) || std::holds_alternative<GeneralExtensor>(a);
  const bool mv_right = std::holds_alternative<Multivector>(b) || std::holds_alternative<double>(b);
  if (n.name == "*" && op_left && mv_right) msg += "; apply an operator with call syntax, e.g. T(x)";
  throw CliError(msg, n.span);
}

template <typename Op>
Value add_like(const Node& n, const Value& a, const Value& b, const AlgebraContext& ctx, Op op) {
  if (std::holds_alternative<double>(a) && std::holds_alternative<double>(b))
    return op(std::get<double>(a), std::get<double>(b));
  const bool a_mv = a.index() <= 1;
  const bool b_mv = b.index() <= 1;
  if (a_mv && b_mv) return op(multivector_of(a, ctx), multivector_of(b, ctx));
  if (const auto* s = std::get_if<LinOp>(&a))
    if (const auto* t = std::get_if<LinOp>(&b)) return op(*s, *t);
  if (const auto* s = std::get_if<GeneralExtensor>(&a))
    if (const auto* t = std::get_if<GeneralExtensor>(&b)) return op(*s, *t);
  binary_type_error(n, a, b);
}

Value scale(const Value& v, double s) {
  switch (v.index()) {
    case 0: return std::get<double>(v) * s;
    case 1: return std::get<Multivector>(v) * s;
    case 2: return std::get<LinOp>(v) * s;
    default: return std::get<GeneralExtensor>(v) * s;
  }
}

}  // namespace

Session::Session(AlgebraContext ctx, MetricStructure metric) : ctx_(ctx), metric_(std::move(metric)) {
  ctx_.require_same(metric_.context());
}

bool Session::is_builtin(const std::string& name) { return name == "mat" || builtins().count(name) != 0; }

std::vector<std::string> Session::builtin_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : builtins()) out.push_back(name);
  return out;
}

Value Session::eval(const Node& n) {
  try {
    switch (n.kind) {
      case NodeKind::number: return n.number;
      case NodeKind::blade: return Multivector::blade(ctx_, n.mask, n.sign);
      case NodeKind::variable: {
        const auto it = vars_.find(n.name);
        if (it != vars_.end()) return it->second;
        if (builtins().count(n.name)) throw CliError("'" + n.name + "' is a function; call it with (...)", n.span);
        throw CliError("unbound variable '" + n.name + "'", n.span);
      }
      case NodeKind::negate: return scale(eval(*n.children[0]), -1.0);
      case NodeKind::binary: return eval_binary(n);
      case NodeKind::call: return eval_call(n);
      case NodeKind::matrix: return eval_matrix(n);
      case NodeKind::assign: {
        if (is_builtin(n.name)) throw CliError("cannot assign to builtin '" + n.name + "'", n.span);
        Value v = eval(*n.children[0]);
        vars_.insert_or_assign(n.name, v);
        return v;
      }
    }
  } catch (const ga::Error& e) {
    throw CliError(e.what(), n.span);
  }
  throw CliError("unknown expression", n.span);
}

Value Session::eval_binary(const Node& n) {
  const Value a = eval(*n.children[0]);
  const Value b = eval(*n.children[1]);
  const std::string& op = n.name;

  if (op == "+") return add_like(n, a, b, ctx_, [](auto x, auto y) -> Value { return x + y; });
  if (op == "-") return add_like(n, a, b, ctx_, [](auto x, auto y) -> Value { return x - y; });

  if (op == "*") {
    if (std::holds_alternative<double>(a)) return scale(b, std::get<double>(a));
    if (std::holds_alternative<double>(b) && a.index() != 1) return scale(a, std::get<double>(b));
    if (a.index() == 1 && b.index() <= 1) return clifford_product(std::get<Multivector>(a), multivector_of(b, ctx_));
    if (const auto* s = std::get_if<LinOp>(&a)) {
      if (const auto* t = std::get_if<LinOp>(&b)) return s->compose(*t);
    }
    if (const auto* s = std::get_if<GeneralExtensor>(&a)) {
      if (const auto* t = std::get_if<GeneralExtensor>(&b)) return s->compose(*t);
    }
    if (is_scalar_like(a) && b.index() >= 2) return scale(b, scalar_of(a));
    if (a.index() >= 2 && is_scalar_like(b)) return scale(a, scalar_of(b));
    binary_type_error(n, a, b);
  }

  if (a.index() > 1 || b.index() > 1) binary_type_error(n, a, b);
  if (std::holds_alternative<double>(a) && std::holds_alternative<double>(b)) {
    const double x = std::get<double>(a);
    const double y = std::get<double>(b);
    if (op == "^" || op == "|") return x * y;
    if (op == "<<" || op == ">>") return x * y;
  }
  const Multivector x = multivector_of(a, ctx_);
  const Multivector y = multivector_of(b, ctx_);
  if (op == "^") return wedge(x, y);
  if (op == "<<") return left_contraction(x, y);
  if (op == ">>") return right_contraction(x, y);
  if (op == "|") return scalar_product(x, y);
  throw CliError("unknown operator '" + op + "'", n.span);
}

Value Session::eval_call(const Node& n) {
  Args args;
  for (std::size_t i = 1; i < n.children.size(); ++i) args.push_back(eval(*n.children[i]));
  const Node& callee = *n.children[0];

  const bool bound = !n.name.empty() && vars_.count(n.name) != 0;
  if (!n.name.empty() && !bound) {
    const auto it = builtins().find(n.name);
    if (it == builtins().end()) throw CliError("unknown function '" + n.name + "'", callee.span);
    const Builtin& fn = it->second;
    if (args.size() < fn.min_args || args.size() > fn.max_args) {
      std::string want = std::to_string(fn.min_args);
      if (fn.max_args != fn.min_args) want += fn.max_args > 8 ? " or more" : " to " + std::to_string(fn.max_args);
      throw CliError(n.name + " takes " + want + " argument" + (fn.max_args == 1 && fn.min_args == 1 ? "" : "s") +
                         ", got " + std::to_string(args.size()),
                     n.span);
    }
    return fn.fn(CallSite{n, n.name, *this}, args);
  }

  // Applying an operator value: T(x).
  const Value f = eval(callee);
  if (args.size() != 1) throw CliError("an operator takes exactly 1 argument", n.span);
  if (args[0].index() > 1) {
    throw CliError(std::string("cannot apply an operator to a ") + type_name(args[0]), n.children[1]->span);
  }
  const Multivector x = multivector_of(args[0], ctx_);
  if (const auto* t = std::get_if<LinOp>(&f)) {
    if (x.grades_present().bits() & ~std::uint32_t{2}) {
      throw CliError("a linear operator applies to vectors; use ext(T, x) for other grades", n.children[1]->span);
    }
    return t->apply(x);
  }
  if (const auto* g = std::get_if<GeneralExtensor>(&f)) return g->apply(x);
  throw CliError(std::string("a ") + type_name(f) + " cannot be called", callee.span);
}

Value Session::eval_matrix(const Node& n) {
  const auto dim = static_cast<std::size_t>(ctx_.dim());
  const std::size_t blades = ctx_.blade_count();
  if (!(n.rows == n.cols && (n.rows == dim || n.rows == blades))) {
    throw CliError("matrix literal must be " + std::to_string(dim) + "x" + std::to_string(dim) + " or " +
                       std::to_string(blades) + "x" + std::to_string(blades) + ", got " + std::to_string(n.rows) +
                       "x" + std::to_string(n.cols),
                   n.span);
  }
  Matrix m(n.rows, n.cols);
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    const Value v = eval(*n.children[i]);
    if (!is_scalar_like(v)) throw CliError("matrix entries must be scalars", n.children[i]->span);
    m(i / n.cols, i % n.cols) = scalar_of(v);
  }
  if (n.rows == dim) return LinOp(ctx_, std::move(m));
  return GeneralExtensor(ctx_, std::move(m));
}

}  // namespace ga::cli
