#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ga/cli/lexer.hpp"

namespace ga::cli {

enum class NodeKind { number, blade, variable, negate, binary, call, assign, matrix };

struct Node {
  NodeKind kind = NodeKind::number;
  Span span;
  std::string name;  // variable, assignment target, operator spelling, or callee for named calls
  double number = 0.0;
  BladeMask mask = 0;
  int sign = 1;
  /// negate: {operand}; binary: {lhs, rhs}; call: {callee, args...};
  /// assign: {value}; matrix: entries row-major with `cols` per row.
  std::vector<std::unique_ptr<Node>> children;
  std::size_t rows = 0;
  std::size_t cols = 0;
};

using NodePtr = std::unique_ptr<Node>;

/// Binding strength, loosest first: + -, |, << >>, ^, *, then unary minus
/// and calls. Every binary operator is left-associative.
std::vector<NodePtr> parse_program(const std::vector<Token>& tokens);
std::vector<NodePtr> parse_program(std::string_view source, int dim);

/// Canonical parenthesized rendering, for tests and diagnostics.
std::string to_string(const Node& n);

}  // namespace ga::cli
