#include "ga/cli/session.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ga::cli {
namespace {

std::string_view source_line(std::string_view src, int line) {
  std::size_t start = 0;
  for (int l = 1; l < line; ++l) {
    const auto nl = src.find('\n', start);
    if (nl == std::string_view::npos) return {};
    start = nl + 1;
  }
  const auto end = src.find('\n', start);
  return src.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
}

}  // namespace

std::string format_value(const Value& v, const Session& s, const RunConfig& cfg) {
  return cfg.format == OutputFormat::json ? format_json(v, s.context()) : format_text(v, cfg.precision);
}

void print_diagnostic(std::ostream& err, std::string_view source, const CliError& e) {
  const Span& sp = e.span();
  err << "error: line " << sp.line << ", column " << sp.column << ": " << e.what() << '\n';
  const std::string_view text = source_line(source, sp.line);
  if (text.empty()) return;
  err << "  " << text << '\n' << "  ";
  // Columns count code points; reproduce tabs so the caret lines up.
  int col = 1;
  for (std::size_t i = 0; i < text.size() && col < sp.column; ++i) {
    if ((static_cast<unsigned char>(text[i]) & 0xC0) == 0x80) continue;
    err << (text[i] == '\t' ? '\t' : ' ');
    ++col;
  }
  const std::size_t width = std::clamp<std::size_t>(sp.length, 1, 80);
  err << '^' << std::string(width - 1, '~') << '\n';
}

int run_source(Session& s, std::string_view source, std::ostream& out, std::ostream& err, const RunConfig& cfg,
               bool print_each) {
  std::vector<NodePtr> program;
  try {
    program = parse_program(source, s.context().dim());
  } catch (const CliError& e) {
    print_diagnostic(err, source, e);
    return kExitEvalError;
  }
  for (std::size_t i = 0; i < program.size(); ++i) {
    const Node& stmt = *program[i];
    try {
      const Value v = s.eval(stmt);
      const bool last = i + 1 == program.size();
      if ((print_each || last) && stmt.kind != NodeKind::assign) out << format_value(v, s, cfg) << '\n';
    } catch (const CliError& e) {
      print_diagnostic(err, source, e);
      return kExitEvalError;
    } catch (const std::exception& e) {
      print_diagnostic(err, source, CliError(e.what(), stmt.span));
      return kExitEvalError;
    }
  }
  return kExitOk;
}

int run_repl(Session& s, std::istream& in, std::ostream& out, std::ostream& err, const RunConfig& cfg) {
  std::string line;
  while (true) {
    out << "ga> " << std::flush;
    if (!std::getline(in, line)) break;
    run_source(s, line, out, err, cfg, true);
  }
  out << '\n';
  return kExitOk;
}

}  // namespace ga::cli
