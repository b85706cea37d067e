#include "lehmer/ppd.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "lehmer/cyclo.hpp"
#include "lehmer/error.hpp"

namespace lehmer {

std::string_view to_string(PpdStatus s) {
  switch (s) {
    case PpdStatus::HasPpd: return "HAS_PPD";
    case PpdStatus::NoPpd: return "NO_PPD";
    case PpdStatus::UnitTerm: return "UNIT_TERM";
  }
  return "?";
}

std::string_view to_string(Disposition d) {
  switch (d) {
    case Disposition::EliminatedByCriterion: return "ELIMINATED_BY_EQ1";
    case Disposition::NeedsFactoring: return "NEEDS_FACTORING";
  }
  return "?";
}

namespace {

std::optional<std::uint64_t> index_in_sequence(int norm_sign, std::uint64_t n) {
  if (norm_sign > 0) return n;
  return delta_prime_index(n);
}

PpdStatus classify(const Integer& delta, const std::vector<Integer>& primitive) {
  if (abs(delta) == 1) return PpdStatus::UnitTerm;
  return primitive.empty() ? PpdStatus::NoPpd : PpdStatus::HasPpd;
}

}  // namespace

std::vector<std::uint64_t> PpdReport::failing() const {
  std::vector<std::uint64_t> out;
  for (const auto& r : records) {
    if (r.status == PpdStatus::NoPpd && !r.skipped()) out.push_back(r.n);
  }
  return out;
}

std::vector<std::uint64_t> PpdReport::failing_prime_indices() const {
  std::vector<std::uint64_t> out;
  for (const auto& r : records) {
    if (r.status == PpdStatus::NoPpd && !r.skipped()) out.push_back(*r.prime_index);
  }
  return out;
}

PpdReport ppd_report(const QuadInt& u, std::uint64_t n_max, const PpdOptions& options) {
  const DeltaSeq seq(u, std::max<std::uint64_t>(n_max, kDefaultIndexCap));
  PpdReport report{u, seq.norm_sign(), {}};
  std::set<Integer> seen;
  std::vector<Integer> hints;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    PpdRecord rec;
    rec.n = n;
    rec.delta = seq[n];
    const Factorization f = factorize_cached(rec.delta, options.budget, options.cache, hints);
    if (!f.complete) {
      throw Error(ErrorCode::IncompleteFactorization,
                  "Delta_" + std::to_string(n) + " of " + u.to_string() + " leaves cofactor " + f.cofactor.get_str());
    }
    rec.primes = f.primes();
    rec.probabilistic = f.probabilistic;
    for (const Integer& p : rec.primes) {
      if (!seen.contains(p)) rec.primitive.push_back(p);
    }
    for (const Integer& p : rec.primes) {
      if (seen.insert(p).second) hints.push_back(p);
    }
    rec.status = classify(rec.delta, rec.primitive);
    rec.prime_index = index_in_sequence(report.norm_sign, n);
    report.records.push_back(std::move(rec));
  }
  return report;
}

std::vector<Integer> primitive_primes_direct(const DeltaSeq& seq, std::uint64_t n, const std::vector<Integer>& primes) {
  std::vector<Integer> out;
  for (const Integer& p : primes) {
    bool earlier = false;
    for (std::uint64_t m = 1; m < n && !earlier; ++m) {
      earlier = mpz_divisible_p(seq[m].get_mpz_t(), p.get_mpz_t()) != 0;
    }
    if (!earlier) out.push_back(p);
  }
  return out;
}

ZsigmondyCertificate zsigmondy(const QuadInt& u, const PpdOptions& options) {
  require_unit_above_one(u);
  const DeltaSeq seq(u);
  const int norm_sign = seq.norm_sign();
  const CandidateSet cands = candidate_set(u, norm_sign);

  ZsigmondyCertificate cert{u};
  cert.norm_sign = norm_sign;
  cert.sequence = norm_sign > 0 ? "Delta" : "Delta'";
  cert.threshold_c = cands.threshold_c;
  cert.n_max = cands.n_max;
  cert.candidates = cands.members;
  cert.removed_2mod4 = cands.removed_2mod4;

  std::vector<std::uint64_t> to_factor;
  for (std::uint64_t n = 1; n <= 6; ++n) to_factor.push_back(n);
  for (std::uint64_t n : cands.members) {
    CandidateCheck check;
    check.n = n;
    check.cyclotomic_norm = norm_cyclotomic(u, n);
    check.divides_n_squared = divides_n_squared(u, n);
    // A candidate whose cyclotomic norm does not divide n^2 has a primitive divisor.
    check.disposition = check.divides_n_squared ? Disposition::NeedsFactoring : Disposition::EliminatedByCriterion;
    if (check.divides_n_squared) to_factor.push_back(n);
    cert.candidate_checks.push_back(std::move(check));
  }

  std::vector<Integer> hints;
  for (std::uint64_t n : to_factor) {
    FactorCheck fc;
    fc.n = n;
    fc.delta = seq[n];
    fc.prime_index = index_in_sequence(norm_sign, n);
    const Factorization f = factorize_cached(fc.delta, options.budget, options.cache, hints);
    fc.complete = f.complete;
    fc.probabilistic = f.probabilistic;
    fc.primes = f.primes();
    for (const Integer& p : fc.primes) {
      if (std::find(hints.begin(), hints.end(), p) == hints.end()) hints.push_back(p);
    }
    if (!f.complete) {
      cert.complete = false;
    } else {
      fc.primitive = primitive_primes_direct(seq, n, fc.primes);
      fc.status = classify(fc.delta, fc.primitive);
      if (fc.status == PpdStatus::NoPpd && fc.prime_index) {
        cert.failing_n.push_back(n);
        cert.failing_prime_index.push_back(*fc.prime_index);
      }
    }
    cert.probabilistic = cert.probabilistic || fc.probabilistic;
    cert.factor_checks.push_back(std::move(fc));
  }

  if (cert.complete) {
    if (cert.failing_prime_index.empty()) {
      cert.z = 1;
      cert.z_convention = "no failing index; Z reported as 1";
    } else {
      cert.z = cert.failing_prime_index.back();
      cert.z_convention = "largest failing index of " + cert.sequence;
    }
  } else {
    cert.z_convention = "INCOMPLETE: a factor check did not finish within budget";
  }
  return cert;
}

}  // namespace lehmer
