#pragma once

#include <map>
#include <string>
#include <vector>

#include "ga/cli/parser.hpp"
#include "ga/cli/value.hpp"
#include "ga/metric.hpp"

namespace ga::cli {

/// One evaluation environment: a fixed algebra, a fixed metric and the
/// variables bound so far.
class Session {
 public:
  Session(AlgebraContext ctx, MetricStructure metric);

  const AlgebraContext& context() const noexcept { return ctx_; }
  const MetricStructure& metric() const noexcept { return metric_; }

  /// Evaluates a statement. Assignments bind and return the bound value.
  /// Failures are reported as CliError located at the offending node.
  Value eval(const Node& n);

  const std::map<std::string, Value>& bindings() const noexcept { return vars_; }

  static bool is_builtin(const std::string& name);
  static std::vector<std::string> builtin_names();

 private:
  Value eval_binary(const Node& n);
  Value eval_call(const Node& n);
  Value eval_matrix(const Node& n);

  AlgebraContext ctx_;
  MetricStructure metric_;
  std::map<std::string, Value> vars_;
};

}  // namespace ga::cli
