#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace lehmer {

using Integer = mpz_class;

// Largest bound below which is_prime is a deterministic Miller-Rabin test
// (bases 2, 3, 5, 7, 11, 13, 17).
inline constexpr std::uint64_t kDeterministicPrimeBound = 341'550'071'728'321ULL;

enum class Primality { Composite, ProbablePrime, Prime };

Primality primality(const Integer& n);

// True for proven primes and for probable primes above kDeterministicPrimeBound.
bool is_prime(const Integer& n);

struct FactorBudget {
  std::uint64_t trial_bound = 1'000'000;
  // Total Pollard-rho iterations spent on one input, across all restarts.
  std::uint64_t rho_iterations = 20'000'000;
};

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  int sign = 1;
  std::vector<PrimePower> factors;  // sorted by prime
  Integer cofactor = 1;             // 1 iff complete
  bool complete = true;
  bool probabilistic = false;  // some listed prime is only a BPSW probable prime

  // sign * prod(p^e) * cofactor
  Integer value() const;
  std::vector<Integer> primes() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Trial division up to budget.trial_bound, then Brent's variant of Pollard
// rho with the fixed increment sequence c = 1, 2, 3, ...  `hints` are primes
// that are divided out before anything else.
Factorization factorize(const Integer& n, const FactorBudget& budget = {},
                        std::span<const Integer> hints = {});

// Distinct primes of |n|; throws IncompleteFactorization if the budget runs out.
std::vector<Integer> prime_set(const Integer& n, const FactorBudget& budget = {});

// Primes below 10^6, sieved once and shared read-only.
const std::vector<std::uint32_t>& small_primes();

// Factorization of a machine-size value by trial division.
std::vector<std::pair<std::uint64_t, unsigned>> factor_small(std::uint64_t n);

bool is_squarefree(const Integer& n, const FactorBudget& budget = {});

}  // namespace lehmer
