#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ga/cli/session.hpp"
#include "ga/error.hpp"
#include "ga/serialize.hpp"

namespace {

const char* const kFooter = R"(Expression language
  literals    2.5  1e-3  e1  e12 (dim <= 9)  e[2,11]  mat[[a,b],[c,d]]
  operators   loosest to tightest, all left-associative:
                +  -          sum, difference
                |             scalar product
                <<  >>        left, right contraction
                ^             wedge
                *             geometric product; composes or scales operators
                -x  f(x)      negation, calls
  statements  name = expr, separated by ';' or newlines; '#' starts a comment
  operators   T(x) applies an operator; ext(T, x) extends it to any grade

Functions
  ext gen adj madj biv det inv sym skew
  dual idual mdual imdual mdual_std mdual_gauge
  grade proj rev ginv conj
  comm gdot glc grc iglc igrc gprod igprod
  vol mvol id metric

Exit status: 0 success, 1 parse or evaluation error, 2 usage error.)";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric-algebra extensor calculator", "gacalc"};
  app.footer(kFooter);

  int dim = 0;
  std::string metric_spec = "identity";
  std::string expr;
  std::string script;
  std::string format = "text";
  int precision = 12;

  app.add_option("--dim", dim, "Dimension of V (1..12)")->required()->check(CLI::Range(1, ga::kMaxDim));
  app.add_option("--metric", metric_spec, "identity | diag:a,b,... | FILE.json")->capture_default_str();
  auto* eval_opt = app.add_option("--eval", expr, "Evaluate statements and print the last value");
  auto* script_opt = app.add_option("--script", script, "Run a script file and print the last value");
  eval_opt->excludes(script_opt);
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--precision", precision, "Significant digits in text output")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ga::cli::kExitUsage;
  }

  const ga::AlgebraContext ctx(dim);
  std::optional<ga::cli::Session> session;
  try {
    if (metric_spec != "identity" && metric_spec.rfind("diag:", 0) != 0 && !std::filesystem::exists(metric_spec)) {
      std::cerr << "error: metric file not found: " << metric_spec << '\n';
      return ga::cli::kExitUsage;
    }
    session.emplace(ctx, ga::metric_from_spec(ctx, metric_spec));
  } catch (const ga::Error& e) {
    std::cerr << "error: invalid --metric: " << e.what() << '\n';
    return ga::cli::kExitUsage;
  }

  ga::cli::RunConfig cfg;
  cfg.format = format == "json" ? ga::cli::OutputFormat::json : ga::cli::OutputFormat::text;
  cfg.precision = precision;

  if (eval_opt->count() > 0) return ga::cli::run_source(*session, expr, std::cout, std::cerr, cfg);

  if (script_opt->count() > 0) {
    std::ifstream in(script);
    if (!in) {
      std::cerr << "error: cannot open script: " << script << '\n';
      return ga::cli::kExitUsage;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return ga::cli::run_source(*session, buf.str(), std::cout, std::cerr, cfg);
  }

  return ga::cli::run_repl(*session, std::cin, std::cout, std::cerr, cfg);
}
