#include <CLI11.hpp>
#include <iostream>

#include "lehmer_cli/cli.hpp"

namespace lehmer::cli {

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::IncompleteFactorization:
      return kExitIncomplete;
    case ErrorCode::OracleMismatch:
    case ErrorCode::DerivationMismatch:
      return kExitMismatch;
    default:
      return kExitValidation;
  }
}

void add_unit_options(CLI::App& cmd, RunConfig& config) {
  auto* unit = cmd.add_option("--unit", config.unit_literal, "unit literal, e.g. \"2+1*sqrt(3)\" or \"(1+1*sqrt(5))/2\"");
  auto* named = cmd.add_option("--named", config.named_unit, "golden, golden-squared or silver");
  unit->excludes(named);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  std::string format = "table";
  std::optional<std::string> cache_path;
  std::uint64_t rho_budget = config.budget.rho_iterations;

  CLI::App app{"Lehmer-Pierce sequences of real quadratic units and their primitive prime divisors", "lehmer"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", format, "table or structured")->check(CLI::IsMember({"table", "structured"}));
  app.add_option("--cache", cache_path, "factor cache file (default: $LEHMER_FACTOR_CACHE)");
  app.add_option("--digits", config.digits, "significant digits for printed reals")->check(CLI::Range(10u, 1000u));
  app.add_option("--budget", rho_budget, "Pollard rho iterations per number")->check(CLI::PositiveNumber);
  app.add_flag("--parallel", config.parallel, "certify units on worker threads");

  auto* delta = app.add_subcommand("delta", "table of Delta_n with prime factors");
  add_unit_options(*delta, config);
  delta->add_option("--min", config.n_min, "first index");
  delta->add_option("--max", config.n_max, "last index");
  delta->add_flag("--skip-2mod4", config.skip_2mod4, "omit n = 2 mod 4");

  auto* units = app.add_subcommand("units", "units 1 < u <= B of a given norm");
  units->add_option("--norm", config.norm_sign, "1 or -1")->required();
  units->add_option("--max", config.bound, "bound B (integer or p/q)")->required();

  auto* candidates = app.add_subcommand("candidates", "indices left by the analytic bound");
  add_unit_options(*candidates, config);

  auto* zsig = app.add_subcommand("zsigmondy", "Zsigmondy bound with its certificate");
  add_unit_options(*zsig, config);

  auto* verify = app.add_subcommand("verify", "re-verify the classification results");
  verify->add_option("target", config.verify_target, "norm-plus, norm-minus, combined or all")
      ->check(CLI::IsMember({"norm-plus", "norm-minus", "combined", "all"}));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  config.format = format == "structured" ? Format::Structured : Format::Table;
  config.budget.rho_iterations = rho_budget;
  if (cache_path) {
    config.cache_path = *cache_path;
  } else {
    config.cache_path = FactorCache::path_from_env();
  }

  try {
    std::unique_ptr<FactorCache> cache;
    if (config.cache_path) cache = std::make_unique<FactorCache>(*config.cache_path);

    CommandResult result;
    if (delta->parsed()) {
      config.command = "delta";
      result = cmd_delta(config, cache.get());
    } else if (units->parsed()) {
      config.command = "units";
      result = cmd_units(config);
    } else if (candidates->parsed()) {
      config.command = "candidates";
      result = cmd_candidates(config);
    } else if (zsig->parsed()) {
      config.command = "zsigmondy";
      result = cmd_zsigmondy(config, cache.get());
    } else {
      config.command = "verify";
      result = cmd_verify(config, cache.get());
    }
    out << result.output;
    return result.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace lehmer::cli
