#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lehmer/factor_cache.hpp"
#include "lehmer/factorint.hpp"
#include "lehmer/quadring.hpp"
#include "lehmer/search.hpp"
#include "lehmer/seqkit.hpp"

namespace lehmer {

enum class PpdStatus { HasPpd, NoPpd, UnitTerm };
std::string_view to_string(PpdStatus s);

struct PpdOptions {
  FactorBudget budget;
  FactorCache* cache = nullptr;
  // Fan independent units out to worker threads in the classification runs.
  bool parallel = false;
};

struct PpdRecord {
  std::uint64_t n = 0;
  Integer delta;
  std::vector<Integer> primes;
  std::vector<Integer> primitive;  // primes dividing no earlier term
  PpdStatus status = PpdStatus::HasPpd;
  std::optional<std::uint64_t> prime_index;  // index in Delta'; nullopt when n = 2 mod 4 (norm -1 only)
  bool probabilistic = false;

  // Removed from Delta' (norm -1 and n = 2 mod 4).
  bool skipped() const { return !prime_index.has_value(); }
};

struct PpdReport {
  QuadInt unit;
  int norm_sign = 1;
  std::vector<PpdRecord> records;  // n = 1 .. n_max

  // NO_PPD indices n, excluding terms removed from Delta'.
  std::vector<std::uint64_t> failing() const;
  // Same, as Delta' positions (norm -1) or plain n (norm +1).
  std::vector<std::uint64_t> failing_prime_indices() const;
};

// Primitivity is decided against every earlier term, including the ones
// removed from Delta'. Throws IncompleteFactorization naming n.
PpdReport ppd_report(const QuadInt& u, std::uint64_t n_max, const PpdOptions& options = {});

enum class Disposition { EliminatedByCriterion, NeedsFactoring };
std::string_view to_string(Disposition d);

struct CandidateCheck {
  std::uint64_t n = 0;
  Integer cyclotomic_norm;  // N(phi_n(u))
  bool divides_n_squared = false;
  Disposition disposition = Disposition::NeedsFactoring;
};

struct FactorCheck {
  std::uint64_t n = 0;
  Integer delta;
  std::vector<Integer> primes;
  std::vector<Integer> primitive;
  PpdStatus status = PpdStatus::HasPpd;
  std::optional<std::uint64_t> prime_index;
  bool complete = true;
  bool probabilistic = false;
};

struct ZsigmondyCertificate {
  explicit ZsigmondyCertificate(QuadInt u) : unit(std::move(u)) {}

  QuadInt unit;
  int norm_sign = 1;
  std::string sequence;  // "Delta" or "Delta'"
  Real threshold_c;
  std::uint64_t n_max = 0;
  std::vector<std::uint64_t> candidates;
  std::vector<std::uint64_t> removed_2mod4;
  std::vector<CandidateCheck> candidate_checks;
  std::vector<FactorCheck> factor_checks;  // n <= 6 and NeedsFactoring candidates
  std::vector<std::uint64_t> failing_n;
  std::vector<std::uint64_t> failing_prime_index;
  std::optional<std::uint64_t> z;  // nullopt when incomplete
  std::string z_convention;
  bool complete = true;
  bool probabilistic = false;
};

// Threshold, candidate set, divisibility criterion, then factor checks for
// n <= 6 and the candidates the criterion does not eliminate.
ZsigmondyCertificate zsigmondy(const QuadInt& u, const PpdOptions& options = {});

// Primes of Delta_n that divide no Delta_m with m < n, by direct reduction.
std::vector<Integer> primitive_primes_direct(const DeltaSeq& seq, std::uint64_t n,
                                             const std::vector<Integer>& primes);

}  // namespace lehmer
