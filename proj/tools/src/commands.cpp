#include <algorithm>

#include <json.hpp>

#include "lehmer_cli/cli.hpp"

namespace lehmer::cli {

namespace {

PpdOptions ppd_options(const RunConfig& config, FactorCache* cache) {
  PpdOptions options;
  options.budget = config.budget;
  options.cache = cache;
  options.parallel = config.parallel;
  return options;
}

Rational parse_bound(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    throw Error(ErrorCode::ParseError, "bound '" + text + "' is not a rational number");
  }
  r.canonicalize();
  if (r <= 1) throw Error(ErrorCode::PreconditionViolated, "bound must exceed 1");
  return r;
}

int norm_sign_of(const QuadInt& u) { return u.norm() == 1 ? 1 : -1; }

}  // namespace

QuadInt resolve_unit(const RunConfig& config) {
  if (config.unit_literal && config.named_unit) {
    throw Error(ErrorCode::PreconditionViolated, "give either --unit or --named, not both");
  }
  if (config.named_unit) return named_unit(*config.named_unit);
  if (!config.unit_literal) throw Error(ErrorCode::PreconditionViolated, "a unit is required (--unit or --named)");
  const QuadInt u = parse_quad(*config.unit_literal);
  require_unit_above_one(u);
  return u;
}

CommandResult cmd_delta(const RunConfig& config, FactorCache* cache) {
  const QuadInt u = resolve_unit(config);
  if (config.n_min < 1 || config.n_min > config.n_max) {
    throw Error(ErrorCode::PreconditionViolated, "need 1 <= --min <= --max");
  }
  if (config.n_max > kDefaultIndexCap) {
    throw Error(ErrorCode::CapExceeded, "--max exceeds " + std::to_string(kDefaultIndexCap));
  }
  PpdReport report = ppd_report(u, config.n_max, ppd_options(config, cache));
  if (config.format == Format::Table) return {kExitOk, render_delta_table(report, config.n_min, config.skip_2mod4)};

  std::erase_if(report.records, [&](const PpdRecord& r) {
    return r.n < config.n_min || (config.skip_2mod4 && r.n % 4 == 2);
  });
  return {kExitOk, to_json(report) + "\n"};
}

CommandResult cmd_units(const RunConfig& config) {
  if (config.norm_sign != 1 && config.norm_sign != -1) {
    throw Error(ErrorCode::PreconditionViolated, "--norm must be 1 or -1");
  }
  const Rational bound = parse_bound(config.bound);
  const auto units = enumerate_units(config.norm_sign, bound);
  if (config.format == Format::Table) return {kExitOk, render_units(config.norm_sign, bound, units)};
  return {kExitOk, units_to_json(config.norm_sign, bound, units) + "\n"};
}

CommandResult cmd_candidates(const RunConfig& config) {
  const QuadInt u = resolve_unit(config);
  const CandidateSet set = candidate_set(u, norm_sign_of(u));
  if (config.format == Format::Table) return {kExitOk, render_candidates(set, config.digits)};
  return {kExitOk, to_json(set) + "\n"};
}

CommandResult cmd_zsigmondy(const RunConfig& config, FactorCache* cache) {
  const QuadInt u = resolve_unit(config);
  const ZsigmondyCertificate cert = zsigmondy(u, ppd_options(config, cache));
  const int code = cert.complete ? kExitOk : kExitIncomplete;
  if (config.format == Format::Table) return {code, render_certificate(cert, config.digits)};
  return {code, to_json(cert) + "\n"};
}

CommandResult cmd_verify(const RunConfig& config, FactorCache* cache) {
  const std::string& target = config.verify_target;
  if (target != "norm-plus" && target != "norm-minus" && target != "combined" && target != "all") {
    throw Error(ErrorCode::PreconditionViolated,
                "unknown verify target '" + target + "' (norm-plus, norm-minus, combined, all)");
  }
  const PpdOptions options = ppd_options(config, cache);
  const bool structured = config.format == Format::Structured;

  std::vector<std::string> blocks;
  bool ok = true;
  bool complete = true;
  auto note = [&](const ClassificationReport& r) {
    ok = ok && r.ok();
    for (const auto& c : r.certificates) complete = complete && c.complete;
    blocks.push_back(structured ? to_json(r) : render_classification(r));
  };

  std::optional<ClassificationReport> plus, minus;
  if (target != "norm-minus") plus = verify_norm_plus_classification(options);
  if (target != "norm-plus") minus = verify_norm_minus_classification(options);
  if (target != "combined") {
    if (plus) note(*plus);
    if (minus) note(*minus);
  }
  if (target == "combined" || target == "all") {
    const CombinedReport combined = verify_combined_bound(*plus, *minus, options);
    ok = ok && combined.ok();
    if (target == "combined") ok = ok && plus->ok() && minus->ok();
    blocks.push_back(structured ? to_json(combined) : render_combined(combined));
  }

  CommandResult result;
  if (structured && blocks.size() > 1) {
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    for (const auto& b : blocks) all.push_back(nlohmann::ordered_json::parse(b));
    result.output = all.dump(2) + "\n";
  } else if (structured) {
    result.output = blocks.front() + "\n";
  } else {
    for (std::size_t i = 0; i < blocks.size(); ++i) result.output += (i ? "\n" : "") + blocks[i];
  }
  result.exit_code = !complete ? kExitIncomplete : ok ? kExitOk : kExitMismatch;
  return result;
}

}  // namespace lehmer::cli
