#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lehmer/quadring.hpp"
#include "lehmer/real.hpp"

namespace lehmer {

// Numeric constants of the analytic bound, as published (5 decimals), plus
// the Meissel-Mertens constant and log(zeta(2)).
struct BoundConstants {
  Real s_norm1;              // |S| bound, norm +1
  Real s_norm_minus1_each;   // |S_i| bound, norm -1
  Real s_norm_minus1_total;  // |S_1| + |S_2|
  Real log_357;              // log(2 + s_norm1)
  Real with_zeta;            // log_357 + log(zeta(2))
  Real c_norm1;              // with_zeta + mertens_B
  Real c_norm_minus1;
  Real mertens_B;
  Real log_zeta2;

  static BoundConstants published(unsigned digits = Real::kDefaultDigits);
};

struct ConstantCheck {
  std::string name;
  Real stored;
  Real recomputed;  // defining expression fed with the published inputs
  Real exact;       // same expression with unrounded inputs
  bool is_upper_bound = false;
  bool within_tolerance = false;  // |stored - recomputed| <= 1e-5
  bool rounds_up = true;          // stored >= exact, for upper bounds
};

struct ConstantDerivation {
  BoundConstants constants;
  std::vector<ConstantCheck> checks;
  bool ok() const;
};

// Recomputes every constant; throws DerivationMismatch when any check fails.
ConstantDerivation derive_constants(unsigned digits = Real::kDefaultDigits);
// Same, without throwing.
ConstantDerivation recompute_constants(unsigned digits = Real::kDefaultDigits);

// g(x) = log x - 2 log log x - 4 / log x, increasing on (e, inf).
Real g(const Real& x);

// Largest integer n >= 3 with g(n) < c, or 2 when there is none. Near-ties
// (|g(n) - c| < 1e-20) are re-evaluated at higher precision.
std::uint64_t solve_g_threshold(const Real& c);

// Sign of lhs - rhs, re-evaluated at doubling precision while |lhs - rhs|
// is below the guard. `difference(digits)` must return lhs - rhs.
struct GuardedComparison {
  int sign = 0;
  Real margin;
  unsigned digits = 0;
};
GuardedComparison guarded_compare(const std::function<Real(unsigned)>& difference,
                                  unsigned digits = Real::kDefaultDigits);

// phi(n) log u < K + 2 log n, with K = 1.55724 (norm +1) or 5.03933 (norm -1).
// `u` is the unit itself or any lower bound for it, as a field element.
bool passes_inequality(const QuadInt& u, std::uint64_t n, int norm_sign);
GuardedComparison inequality_margin(const QuadInt& u, std::uint64_t n, int norm_sign);

// Analytic constant of the g-bound: 2.02819 - log log u or 2.71072 - log log u.
Real threshold_constant(const QuadInt& u, int norm_sign, unsigned digits = Real::kDefaultDigits);

struct CandidateSet {
  QuadInt bound;
  int norm_sign = 1;
  Real threshold_c;
  std::uint64_t n_max = 0;
  std::vector<std::uint64_t> members;        // n in (6, n_max] passing the inequality
  std::vector<std::uint64_t> removed_2mod4;  // passing, but n = 2 mod 4 with norm -1
};

// Requires u > 1.
CandidateSet candidate_set(const QuadInt& u, int norm_sign);

// Units 1 < u <= bound of the given norm over all real quadratic fields,
// sorted by value. Enumerates the trace x = u + eps/u.
std::vector<QuadInt> enumerate_units(int norm_sign, const Rational& bound);

// sum_{p <= n} 1/p < log log n + B + 4 / log n
bool mertens_check(std::uint64_t n);

struct MertensScan {
  bool holds = true;
  std::uint64_t first_failure = 0;
  Real min_margin;
  std::uint64_t argmin = 0;
};
MertensScan mertens_scan(std::uint64_t lo, std::uint64_t hi);

// Smallest integer C >= 2 such that the candidate set for the lower bound C
// is empty; every unit u >= C then has no candidate index above 6.
std::uint64_t crossover_bound(int norm_sign);

}  // namespace lehmer
