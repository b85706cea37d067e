#include <iomanip>
#include <sstream>

#include "lehmer_cli/cli.hpp"

namespace lehmer::cli {

namespace {

std::string join(const std::vector<Integer>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i].get_str();
  return out;
}

std::string join(const std::vector<std::uint64_t>& v) {
  if (v.empty()) return "{}";
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + "}";
}

std::string rational_str(const Rational& r) { return r.get_den() == 1 ? r.get_num().get_str() : r.get_str(); }

// Left-aligned text table with a header rule; the last column is not padded.
std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const bool last = c + 1 == cells.size();
      os << (c ? " | " : "");
      if (last) {
        os << cells[c];
      } else {
        os << std::setw(static_cast<int>(width[c])) << std::right << cells[c];
      }
    }
    os << "\n";
  };
  line(header);
  for (std::size_t c = 0; c < header.size(); ++c) {
    os << (c ? "-+-" : "") << std::string(width[c], '-');
  }
  os << "\n";
  for (const auto& row : rows) line(row);
  return os.str();
}

std::string sign_name(int norm_sign) { return norm_sign == 1 ? "+1" : "-1"; }

}  // namespace

std::string render_delta_table(const PpdReport& report, std::uint64_t n_min, bool skip_2mod4) {
  std::vector<std::vector<std::string>> rows;
  for (const PpdRecord& r : report.records) {
    if (r.n < n_min || (skip_2mod4 && r.n % 4 == 2)) continue;
    rows.push_back({std::to_string(r.n), r.delta.get_str(), r.primes.empty() ? "None" : join(r.primes)});
  }
  std::ostringstream os;
  os << "u = " << report.unit.pretty() << ", N(u) = " << sign_name(report.norm_sign) << "\n\n";
  os << table({"n", "Delta_n", "Prime factors of Delta_n"}, rows);
  return os.str();
}

std::string render_units(int norm_sign, const Rational& bound, const std::vector<QuadInt>& units) {
  std::vector<std::vector<std::string>> rows;
  for (const QuadInt& u : units) rows.push_back({u.to_string(), real_value(u).to_fixed(6), u.pretty()});
  std::ostringstream os;
  os << units.size() << " units of norm " << sign_name(norm_sign) << " in (1, " << rational_str(bound) << "]\n\n";
  os << table({"unit", "value", "form"}, rows);
  return os.str();
}

std::string render_candidates(const CandidateSet& set, unsigned digits) {
  std::ostringstream os;
  os << "u = " << set.bound.pretty() << ", N(u) = " << sign_name(set.norm_sign) << "\n";
  os << "threshold c = " << set.threshold_c.to_string(digits) << "\n";
  os << "n_max = " << set.n_max << "\n";
  os << "candidates = " << join(set.members) << "\n";
  if (set.norm_sign == -1) os << "removed (n = 2 mod 4) = " << join(set.removed_2mod4) << "\n";
  return os.str();
}

std::string render_certificate(const ZsigmondyCertificate& cert, unsigned digits) {
  std::ostringstream os;
  os << "u = " << cert.unit.pretty() << ", N(u) = " << sign_name(cert.norm_sign) << ", sequence " << cert.sequence
     << "\n";
  os << "threshold c = " << cert.threshold_c.to_string(digits) << ", n_max = " << cert.n_max << "\n";
  os << "candidates = " << join(cert.candidates) << "\n";
  if (cert.norm_sign == -1) os << "removed (n = 2 mod 4) = " << join(cert.removed_2mod4) << "\n";

  if (!cert.candidate_checks.empty()) {
    std::vector<std::vector<std::string>> rows;
    for (const CandidateCheck& c : cert.candidate_checks) {
      rows.push_back({std::to_string(c.n), c.cyclotomic_norm.get_str(), std::to_string(c.n * c.n),
                      std::string(to_string(c.disposition))});
    }
    os << "\n" << table({"n", "N(phi_n(u))", "n^2", "disposition"}, rows);
  }

  std::vector<std::vector<std::string>> rows;
  for (const FactorCheck& f : cert.factor_checks) {
    rows.push_back({std::to_string(f.n), f.prime_index ? std::to_string(*f.prime_index) : "-", f.delta.get_str(),
                    f.primes.empty() ? "None" : join(f.primes), f.primitive.empty() ? "-" : join(f.primitive),
                    f.complete ? std::string(to_string(f.status)) : "INCOMPLETE"});
  }
  os << "\n" << table({"n", "index", "Delta_n", "primes", "primitive", "status"}, rows);

  os << "\nfailing n = " << join(cert.failing_n) << "\n";
  if (cert.norm_sign == -1) os << "failing Delta' index = " << join(cert.failing_prime_index) << "\n";
  os << "Z(" << cert.sequence << ") = " << (cert.z ? std::to_string(*cert.z) : "INCOMPLETE");
  if (!cert.z_convention.empty()) os << " (" << cert.z_convention << ")";
  os << "\n";
  if (cert.probabilistic) os << "note: some primes are BPSW probable primes\n";
  return os.str();
}

std::string render_classification(const ClassificationReport& report) {
  std::ostringstream os;
  os << "== " << report.title << " ==\n";
  os << report.units.size() << " units of norm " << sign_name(report.norm_sign) << " in (1, "
     << rational_str(report.unit_bound) << "]\n\n";
  std::vector<std::vector<std::string>> rows;
  for (const ZsigmondyCertificate& c : report.certificates) {
    rows.push_back({c.unit.to_string(), std::to_string(c.n_max), join(c.candidates), join(c.failing_n),
                    c.norm_sign == -1 ? join(c.failing_prime_index) : "-", c.z ? std::to_string(*c.z) : "INCOMPLETE"});
  }
  os << table({"unit", "n_max", "candidates", "failing n", "failing Delta'", "Z"}, rows);
  os << "\ncrossover: published " << report.crossover_published << ", recomputed " << report.crossover_recomputed
     << "\n";
  for (const ClaimCheck& claim : report.claims) {
    os << (claim.ok ? "ok       " : "MISMATCH ") << claim.unit << ": expected " << join(claim.expected_failing)
       << " Z = " << claim.expected_z << "\n";
  }
  for (const std::string& m : report.mismatches) os << "mismatch: " << m << "\n";
  os << "result: " << (report.ok() ? "VERIFIED" : "FAILED") << "\n";
  return os.str();
}

std::string render_combined(const CombinedReport& report) {
  std::ostringstream os;
  os << "== combined bound ==\n";
  os << "norm +1: largest index without a primitive divisor = " << report.norm_plus_max_z << "\n";
  os << "norm -1: largest failing n with n != 2 mod 4 = " << report.norm_minus_max_failing_n << "\n";
  os << "Delta_2k = -Delta_k^2 checks (odd k) = " << report.square_identity_checks << "\n";
  os << "spot checks up to n = " << report.spot_check_limit << "\n";
  for (const std::string& m : report.mismatches) os << "mismatch: " << m << "\n";
  os << "result: " << (report.ok() ? "VERIFIED" : "FAILED") << "\n";
  return os.str();
}

}  // namespace lehmer::cli
