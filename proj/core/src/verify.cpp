#include "lehmer/verify.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <sstream>

#include "lehmer/cyclo.hpp"

namespace lehmer {

namespace {

struct Expectation {
  std::vector<std::uint64_t> failing;
  std::uint64_t z;
};

std::string join(const std::vector<std::uint64_t>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

std::vector<ZsigmondyCertificate> certify_all(const std::vector<QuadInt>& units, const PpdOptions& options) {
  std::vector<ZsigmondyCertificate> out;
  out.reserve(units.size());
  if (!options.parallel) {
    for (const auto& u : units) out.push_back(zsigmondy(u, options));
    return out;
  }
  std::vector<std::future<ZsigmondyCertificate>> futures;
  for (const auto& u : units) {
    futures.push_back(std::async(std::launch::async, [&options, u] { return zsigmondy(u, options); }));
  }
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

ClassificationReport classify(std::string title, int norm_sign, long bound, std::size_t expected_count,
                              std::uint64_t published_crossover, const std::map<std::string, Expectation>& special,
                              const Expectation& fallback, const PpdOptions& options) {
  ClassificationReport report;
  report.title = std::move(title);
  report.norm_sign = norm_sign;
  report.unit_bound = bound;
  report.expected_unit_count = expected_count;
  report.crossover_published = published_crossover;

  report.units = enumerate_units(norm_sign, Rational(bound));
  if (report.units.size() != expected_count) {
    report.mismatches.push_back("expected " + std::to_string(expected_count) + " units, enumerated " +
                                std::to_string(report.units.size()));
  }
  for (const auto& [literal, _] : special) {
    const QuadInt u = parse_quad(literal);
    if (std::find(report.units.begin(), report.units.end(), u) == report.units.end()) {
      report.mismatches.push_back("unit " + literal + " missing from the enumeration");
    }
  }

  report.certificates = certify_all(report.units, options);
  for (std::size_t i = 0; i < report.units.size(); ++i) {
    const auto& cert = report.certificates[i];
    ClaimCheck claim;
    claim.unit = report.units[i].to_string();
    const auto it = special.find(claim.unit);
    const Expectation& want = it != special.end() ? it->second : fallback;
    claim.expected_failing = want.failing;
    claim.expected_z = want.z;
    claim.actual_failing = cert.failing_prime_index;
    claim.actual_z = cert.z;
    claim.ok = cert.complete && claim.actual_failing == want.failing && cert.z == want.z;
    if (!claim.ok) {
      report.mismatches.push_back("claim for " + claim.unit + ": expected failing " + join(want.failing) + " Z=" +
                                  std::to_string(want.z) + ", got " + join(claim.actual_failing) + " Z=" +
                                  (cert.z ? std::to_string(*cert.z) : std::string("incomplete")));
    }
    report.claims.push_back(std::move(claim));
  }

  report.crossover_recomputed = crossover_bound(norm_sign);
  if (report.crossover_recomputed > published_crossover) {
    report.mismatches.push_back("recomputed crossover " + std::to_string(report.crossover_recomputed) +
                                " exceeds the published " + std::to_string(published_crossover));
  }
  return report;
}

}  // namespace

ClassificationReport verify_norm_plus_classification(const PpdOptions& options) {
  const std::map<std::string, Expectation> special{
      {"3+2*sqrt(2)", {{2}, 2}},
      {"2+1*sqrt(3)", {{4, 6}, 6}},
      {"(3+1*sqrt(5))/2", {{6, 10, 12}, 12}},
      {"(5+1*sqrt(21))/2", {{6}, 6}},
  };
  return classify("norm +1 units in (1, 6]", 1, 6, 4, 6, special, {{}, 1}, options);
}

ClassificationReport verify_norm_minus_classification(const PpdOptions& options) {
  const std::map<std::string, Expectation> special{
      {"1+1*sqrt(2)", {{3}, 3}},
      {"(1+1*sqrt(5))/2", {{9, 15, 18}, 18}},
  };
  return classify("norm -1 units in (1, 13]", -1, 13, 12, 13, special, {{}, 1}, options);
}

CombinedReport verify_combined_bound(const ClassificationReport& plus, const ClassificationReport& minus,
                                     const PpdOptions& options) {
  CombinedReport out;
  if (!plus.ok()) out.mismatches.push_back("norm +1 classification has mismatches");
  if (!minus.ok()) out.mismatches.push_back("norm -1 classification has mismatches");

  // Norm +1: catalog maximum is 12; units beyond the crossover (<= 6) have Z <= 6.
  for (const auto& cert : plus.certificates) {
    if (cert.z) out.norm_plus_max_z = std::max(out.norm_plus_max_z, *cert.z);
  }
  if (out.norm_plus_max_z != 12) {
    out.mismatches.push_back("norm +1: largest Z is " + std::to_string(out.norm_plus_max_z) + ", expected 12");
  }
  if (plus.crossover_recomputed > 6) out.mismatches.push_back("norm +1: crossover above 6");

  // Norm -1, n != 2 mod 4: catalog failures stop at 24; units beyond the
  // crossover (<= 13) fail only at n <= 6.
  for (const auto& cert : minus.certificates) {
    for (std::uint64_t n : cert.failing_n) out.norm_minus_max_failing_n = std::max(out.norm_minus_max_failing_n, n);
  }
  if (out.norm_minus_max_failing_n != 24) {
    out.mismatches.push_back("norm -1: largest failing n is " + std::to_string(out.norm_minus_max_failing_n) +
                             ", expected 24");
  }
  if (minus.crossover_recomputed > 13) out.mismatches.push_back("norm -1: crossover above 13");

  // n = 2k, k odd: Delta_n = -Delta_k^2 shares every prime with Delta_k, so
  // it fails whenever |Delta_k| > 1, which holds for every k >= 3.
  for (const auto& u : minus.units) {
    const DeltaSeq seq(u);
    for (std::uint64_t k = 13; 2 * k <= 90; k += 2) {
      const Integer dk = seq[k];
      ++out.square_identity_checks;
      if (seq[2 * k] != -(dk * dk) || abs(dk) <= 1) {
        out.mismatches.push_back("square identity or |Delta_k| > 1 fails for " + u.to_string() + " at k=" +
                                 std::to_string(k));
      }
    }
  }

  // Direct confirmation past 24 for the two units with late failures.
  out.spot_check_limit = 36;
  for (const char* literal : {"1+1*sqrt(2)", "(1+1*sqrt(5))/2"}) {
    const PpdReport report = ppd_report(parse_quad(literal), out.spot_check_limit, options);
    for (const auto& rec : report.records) {
      if (rec.n <= 24) continue;
      const bool fails = rec.status != PpdStatus::HasPpd;
      if (fails != (rec.n % 4 == 2)) {
        out.mismatches.push_back(std::string("spot check ") + literal + " at n=" + std::to_string(rec.n));
      }
    }
  }
  return out;
}

}  // namespace lehmer
