#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lehmer/lehmer.hpp"

namespace lehmer::cli {

enum class Format { Table, Structured };

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitMismatch = 3;
inline constexpr int kExitIncomplete = 4;

struct RunConfig {
  std::string command;
  std::optional<std::string> unit_literal;
  std::optional<std::string> named_unit;
  std::uint64_t n_min = 1;
  std::uint64_t n_max = 12;
  bool skip_2mod4 = false;
  int norm_sign = 1;
  std::string bound = "6";  // rational, e.g. "13" or "27/2"
  std::string verify_target = "all";
  Format format = Format::Table;
  std::optional<std::filesystem::path> cache_path;
  unsigned digits = Real::kDefaultDigits;
  FactorBudget budget;
  bool parallel = false;
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;
};

// Resolves --unit / --named; throws on a missing or invalid unit.
QuadInt resolve_unit(const RunConfig& config);

CommandResult cmd_delta(const RunConfig& config, FactorCache* cache = nullptr);
CommandResult cmd_units(const RunConfig& config);
CommandResult cmd_candidates(const RunConfig& config);
CommandResult cmd_zsigmondy(const RunConfig& config, FactorCache* cache = nullptr);
CommandResult cmd_verify(const RunConfig& config, FactorCache* cache = nullptr);

// Plain-text renderings.
std::string render_delta_table(const PpdReport& report, std::uint64_t n_min, bool skip_2mod4);
std::string render_units(int norm_sign, const Rational& bound, const std::vector<QuadInt>& units);
std::string render_candidates(const CandidateSet& set, unsigned digits);
std::string render_certificate(const ZsigmondyCertificate& cert, unsigned digits);
std::string render_classification(const ClassificationReport& report);
std::string render_combined(const CombinedReport& report);

// Full command line, including argv[0]. Errors are written to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lehmer::cli
