// bcx: command-line front end for the bicomplex spectral toolkit.
//
//   bcx split   --input T.json
//   bcx eig     --input T.json [--tol 1e-10]
//   bcx measure --input T.json [--vector PATH|JSON | --find-cyclic]
//   bcx verify  [--input T.json] [--seed N] [--trials N]
//
// Reports are JSON on stdout (compact by default, --pretty to indent).

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cli/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Bicomplex spectral toolkit"};
  app.require_subcommand(1);

  std::optional<std::string> input;
  bcx::cli::CommandOptions options;
  double tol = 0.0;
  bool pretty = false;
  bool json_flag = false;

  auto add_common = [&](CLI::App* sub, bool input_required) {
    auto* opt = sub->add_option("--input", input, "Matrix file (JSON)");
    if (input_required) opt->required();
    sub->add_option("--tol", tol, "Verdict tolerance (defaults to the module value)");
    sub->add_flag("--json", json_flag, "Compact JSON output (default)");
    sub->add_flag("--pretty", pretty, "Indented JSON output");
  };

  auto* split = app.add_subcommand("split", "Idempotent components of a bicomplex matrix");
  add_common(split, true);
  auto* eig = app.add_subcommand("eig", "Spectral decomposition U T U* = M");
  add_common(eig, true);
  auto* measure = app.add_subcommand("measure", "Spectral measure of a cyclic vector");
  add_common(measure, true);
  measure->add_option("--vector", options.vector, "Vector file or inline JSON array");
  measure->add_flag("--find-cyclic", options.find_cyclic, "Construct a cyclic vector");
  auto* verify = app.add_subcommand("verify", "Randomized invariant suites");
  add_common(verify, false);
  verify->add_option("--seed", options.seed, "RNG seed");
  verify->add_option("--trials", options.trials, "Trials per family")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return bcx::cli::kExitUsage;
  }

  if (pretty && json_flag) {
    std::cerr << "bcx: --json and --pretty are mutually exclusive\n";
    return bcx::cli::kExitUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  for (const char* name : {"--tol"}) {
    if (chosen->count(name) > 0) options.tol = tol;
  }

  const bcx::cli::CommandResult result = bcx::cli::run_command(chosen->get_name(), input, options);
  std::cout << result.report.dump(pretty ? 2 : -1) << '\n';
  if (result.report.contains("error")) {
    std::cerr << "bcx " << chosen->get_name() << ": "
              << result.report["error"]["message"].get<std::string>() << '\n';
  }
  return result.exit_code;
}
