#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ga/context.hpp"

namespace ga::cli {

/// 1-based line/column of the first character, byte offset and length.
struct Span {
  int line = 1;
  int column = 1;
  std::size_t offset = 0;
  std::size_t length = 0;
};

/// Any lexing, parsing or evaluation failure, located in the source.
class CliError : public std::runtime_error {
 public:
  CliError(const std::string& what, Span span) : std::runtime_error(what), span_(span) {}
  const Span& span() const noexcept { return span_; }

 private:
  Span span_;
};

enum class TokKind { ident, number, blade, op, punct, separator, end };

struct Token {
  TokKind kind = TokKind::end;
  std::string lexeme;  // operators and punctuation use their ASCII spelling
  Span span;
  double number = 0.0;
  BladeMask mask = 0;
  int sign = 1;  // blade literals written out of ascending order
};

/// Newlines separate statements only outside brackets; ';' always does.
/// "#" starts a comment running to the end of the line.
std::vector<Token> tokenize(std::string_view input, int dim);

}  // namespace ga::cli
