#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lehmer/ppd.hpp"

namespace lehmer {

// One expected outcome for a specific unit.
struct ClaimCheck {
  std::string unit;  // canonical literal
  std::vector<std::uint64_t> expected_failing;  // Delta indices (+1) or Delta' indices (-1)
  std::uint64_t expected_z = 0;
  std::vector<std::uint64_t> actual_failing;
  std::optional<std::uint64_t> actual_z;
  bool ok = false;
};

struct ClassificationReport {
  std::string title;
  int norm_sign = 1;
  Rational unit_bound;
  std::size_t expected_unit_count = 0;
  std::vector<QuadInt> units;
  std::vector<ZsigmondyCertificate> certificates;  // same order as units
  std::vector<ClaimCheck> claims;
  std::uint64_t crossover_published = 0;
  std::uint64_t crossover_recomputed = 0;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

// Norm +1 units 1 < u <= 6: Z = 2, 6, 12, 6 for 3+2sqrt2, 2+sqrt3,
// (3+sqrt5)/2, (5+sqrt21)/2; u > 6 has no candidate index above 6.
ClassificationReport verify_norm_plus_classification(const PpdOptions& options = {});

// Norm -1 units 1 < u <= 13: Z(Delta') = 3 for 1+sqrt2, 18 for the golden
// ratio and 1 for the ten others; u > 13 has no candidate index above 6.
ClassificationReport verify_norm_minus_classification(const PpdOptions& options = {});

struct CombinedReport {
  std::uint64_t norm_plus_max_z = 0;               // expected 12
  std::uint64_t norm_minus_max_failing_n = 0;      // expected 24, over n != 2 mod 4
  std::uint64_t square_identity_checks = 0;        // Delta_{2k} = -Delta_k^2, odd k
  std::uint64_t spot_check_limit = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Norm +1: every term beyond the twelfth has a primitive divisor. Norm -1:
// beyond n = 24 a term fails exactly when n = 2 mod 4.
CombinedReport verify_combined_bound(const ClassificationReport& plus, const ClassificationReport& minus,
                                     const PpdOptions& options = {});

}  // namespace lehmer
