#include "lehmer/serialize.hpp"

#include <json.hpp>

namespace lehmer {

namespace {

using Json = nlohmann::ordered_json;

constexpr unsigned kRealDigits = 30;

Json integers(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

Json indices(const std::vector<std::uint64_t>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

Json optional_index(const std::optional<std::uint64_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json unit_json(const QuadInt& u) {
  Json j;
  j["literal"] = u.to_string();
  j["d"] = u.d().get_str();
  j["x"] = u.x().get_str();
  j["y"] = u.y().get_str();
  j["norm"] = u.norm().get_str();
  j["value"] = real_value(u).to_string(kRealDigits);
  return j;
}

Json certificate_json(const ZsigmondyCertificate& c) {
  Json j;
  j["unit"] = unit_json(c.unit);
  j["norm_sign"] = c.norm_sign;
  j["sequence"] = c.sequence;
  j["threshold_c"] = c.threshold_c.to_string(kRealDigits);
  j["n_max"] = c.n_max;
  j["analytic_cover"] = "n > n_max: g(n) >= c; 6 < n <= n_max outside candidates: inequality fails";
  j["candidates"] = indices(c.candidates);
  j["removed_2mod4"] = indices(c.removed_2mod4);
  Json checks = Json::array();
  for (const auto& k : c.candidate_checks) {
    Json e;
    e["n"] = k.n;
    e["cyclotomic_norm"] = k.cyclotomic_norm.get_str();
    e["n_squared"] = std::to_string(k.n * k.n);
    e["divides_n_squared"] = k.divides_n_squared;
    e["disposition"] = std::string(to_string(k.disposition));
    checks.push_back(std::move(e));
  }
  j["candidate_checks"] = std::move(checks);
  Json factors = Json::array();
  for (const auto& f : c.factor_checks) {
    Json e;
    e["n"] = f.n;
    e["prime_index"] = optional_index(f.prime_index);
    e["delta"] = f.delta.get_str();
    e["primes"] = integers(f.primes);
    e["primitive"] = integers(f.primitive);
    e["status"] = f.complete ? std::string(to_string(f.status)) : std::string("INCOMPLETE");
    e["probabilistic"] = f.probabilistic;
    factors.push_back(std::move(e));
  }
  j["factor_checks"] = std::move(factors);
  j["failing_n"] = indices(c.failing_n);
  j["failing_prime_index"] = indices(c.failing_prime_index);
  j["z"] = optional_index(c.z);
  j["z_convention"] = c.z_convention;
  j["complete"] = c.complete;
  j["probabilistic"] = c.probabilistic;
  return j;
}

Json classification_json(const ClassificationReport& r) {
  Json j;
  j["title"] = r.title;
  j["norm_sign"] = r.norm_sign;
  j["unit_bound"] = r.unit_bound.get_str();
  j["expected_unit_count"] = r.expected_unit_count;
  Json units = Json::array();
  for (const auto& u : r.units) units.push_back(u.to_string());
  j["units"] = std::move(units);
  Json claims = Json::array();
  for (const auto& c : r.claims) {
    Json e;
    e["unit"] = c.unit;
    e["expected_failing"] = indices(c.expected_failing);
    e["expected_z"] = c.expected_z;
    e["actual_failing"] = indices(c.actual_failing);
    e["actual_z"] = optional_index(c.actual_z);
    e["ok"] = c.ok;
    claims.push_back(std::move(e));
  }
  j["claims"] = std::move(claims);
  j["crossover_published"] = r.crossover_published;
  j["crossover_recomputed"] = r.crossover_recomputed;
  Json certs = Json::array();
  for (const auto& c : r.certificates) certs.push_back(certificate_json(c));
  j["certificates"] = std::move(certs);
  j["mismatches"] = r.mismatches;
  j["ok"] = r.ok();
  return j;
}

}  // namespace

std::string to_json(const ZsigmondyCertificate& cert) { return certificate_json(cert).dump(2); }

std::string to_json(const PpdReport& report) {
  Json j;
  j["unit"] = unit_json(report.unit);
  j["norm_sign"] = report.norm_sign;
  Json rows = Json::array();
  for (const auto& r : report.records) {
    Json e;
    e["n"] = r.n;
    e["prime_index"] = optional_index(r.prime_index);
    e["delta"] = r.delta.get_str();
    e["primes"] = integers(r.primes);
    e["primitive"] = integers(r.primitive);
    e["status"] = std::string(to_string(r.status));
    rows.push_back(std::move(e));
  }
  j["records"] = std::move(rows);
  j["failing_n"] = indices(report.failing());
  j["failing_prime_index"] = indices(report.failing_prime_indices());
  return j.dump(2);
}

std::string to_json(const CandidateSet& set) {
  Json j;
  j["bound"] = unit_json(set.bound);
  j["norm_sign"] = set.norm_sign;
  j["threshold_c"] = set.threshold_c.to_string(kRealDigits);
  j["n_max"] = set.n_max;
  j["members"] = indices(set.members);
  j["removed_2mod4"] = indices(set.removed_2mod4);
  return j.dump(2);
}

std::string to_json(const ConstantDerivation& derivation) {
  Json j;
  Json rows = Json::array();
  for (const auto& c : derivation.checks) {
    Json e;
    e["name"] = c.name;
    e["stored"] = c.stored.to_string(12);
    e["recomputed"] = c.recomputed.to_string(kRealDigits);
    e["exact"] = c.exact.to_string(kRealDigits);
    e["is_upper_bound"] = c.is_upper_bound;
    e["within_tolerance"] = c.within_tolerance;
    e["rounds_up"] = c.rounds_up;
    rows.push_back(std::move(e));
  }
  j["checks"] = std::move(rows);
  j["ok"] = derivation.ok();
  return j.dump(2);
}

std::string to_json(const ClassificationReport& report) { return classification_json(report).dump(2); }

std::string to_json(const CombinedReport& report) {
  Json j;
  j["norm_plus_max_z"] = report.norm_plus_max_z;
  j["norm_minus_max_failing_n"] = report.norm_minus_max_failing_n;
  j["square_identity_checks"] = report.square_identity_checks;
  j["spot_check_limit"] = report.spot_check_limit;
  j["mismatches"] = report.mismatches;
  j["ok"] = report.ok();
  return j.dump(2);
}

std::string units_to_json(int norm_sign, const Rational& bound, const std::vector<QuadInt>& units) {
  Json j;
  j["norm_sign"] = norm_sign;
  j["bound"] = bound.get_str();
  Json rows = Json::array();
  for (const auto& u : units) rows.push_back(unit_json(u));
  j["units"] = std::move(rows);
  return j.dump(2);
}

}  // namespace lehmer
