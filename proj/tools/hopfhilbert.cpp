#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "hopfhilbert/cli.hpp"

using namespace hopfhilbert::cli;

namespace {

int emit(const CommandResult& res, const RunConfig& cfg) {
  const bool to_stderr = res.is_error && cfg.format == OutputFormat::Text;
  (to_stderr ? std::cerr : std::cout) << res.output;
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert series of Hopf invariants of free algebras"};
  app.require_subcommand(1);

  RunConfig cfg;
  bool json_out = false;
  std::string file;
  std::size_t order = 8;

  auto* validate = app.add_subcommand("validate", "check the Hopf algebra axioms and the representation");
  validate->add_option("file", file, "fixture file")->required();
  validate->add_flag("--json", json_out, "machine-readable output");

  auto* series = app.add_subcommand("series", "compute P(T(V)^H, z) as a rational function");
  series->add_option("file", file, "fixture file")->required();
  series->add_option("--expand", cfg.expand_order, "number of Taylor coefficients after the constant term");
  series->add_flag("--json", json_out, "machine-readable output");

  auto* verify = app.add_subcommand("verify", "compare the series with brute-force invariant dimensions");
  verify->add_option("file", file, "fixture file")->required();
  verify->add_option("--order", order, "highest tensor degree to check");
  verify->add_option("--cap", cfg.oracle_cap, "largest d^n the oracle will realize")->check(CLI::PositiveNumber);
  verify->add_flag("--json", json_out, "machine-readable output");

  std::string table, rep;
  GroupFlags flags;
  auto* group = app.add_subcommand("group", "series for a group algebra or its dual from a Cayley table");
  group->add_option("--table", table, "group table file")->required();
  group->add_option("--rep", rep, "representation file")->required();
  group->add_flag("--closed-form", flags.closed_form, "use the closed form (1/|G|) sum_g 1/(1 - chi(g) z)");
  group->add_flag("--dual", flags.dual, "use the dual group algebra (kG)*");
  group->add_option("--expand", cfg.expand_order, "number of Taylor coefficients after the constant term");
  group->add_flag("--json", json_out, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kParseError;
  }
  if (json_out) cfg.format = OutputFormat::Json;

  if (*validate) return emit(cmd_validate(file, cfg), cfg);
  if (*series) return emit(cmd_series(file, cfg), cfg);
  if (*verify) return emit(cmd_verify(file, order, cfg), cfg);
  return emit(cmd_group(table, rep, flags, cfg), cfg);
}
