#pragma once

#include <iosfwd>
#include <string_view>

#include "ga/cli/eval.hpp"

namespace ga::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitEvalError = 1;
inline constexpr int kExitUsage = 2;

enum class OutputFormat { text, json };

struct RunConfig {
  OutputFormat format = OutputFormat::text;
  int precision = 12;
};

std::string format_value(const Value& v, const Session& s, const RunConfig& cfg);

/// "error: line L, column C: message" followed by the source line and a caret.
void print_diagnostic(std::ostream& err, std::string_view source, const CliError& e);

/// Parses the whole source before evaluating anything. Prints the value of
/// the final statement (every expression statement when print_each is set),
/// unless that statement is an assignment. Returns kExitOk or kExitEvalError.
int run_source(Session& s, std::string_view source, std::ostream& out, std::ostream& err, const RunConfig& cfg,
               bool print_each = false);

/// Line-oriented loop with prompt "ga> ". Errors are reported and the loop
/// continues; returns kExitOk at end of input.
int run_repl(Session& s, std::istream& in, std::ostream& out, std::ostream& err, const RunConfig& cfg);

}  // namespace ga::cli
