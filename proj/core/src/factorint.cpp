#include "lehmer/factorint.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>

#include "lehmer/error.hpp"

namespace lehmer {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

constexpr std::uint32_t kSieveBound = 1'000'000;

bool fits_u64(const Integer& n) { return mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

u64 to_u64(const Integer& n) {
  // mpz_get_ui is only 64 bits wide on LP64, which is all this targets.
  static_assert(sizeof(unsigned long) == 8);
  return mpz_get_ui(n.get_mpz_t());
}

Integer from_u64(u64 v) {
  Integer r;
  mpz_set_ui(r.get_mpz_t(), static_cast<unsigned long>(v));
  return r;
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 e, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

bool miller_rabin_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Brent's cycle-finding rho on a machine word. Returns a nontrivial factor or 0.
u64 rho_u64(u64 n, u64 increment, u64& iterations_left) {
  if (n % 2 == 0) return 2;
  auto step = [&](u64 v) { return static_cast<u64>((static_cast<u128>(v) * v + increment) % n); };
  constexpr u64 kBlock = 128;
  u64 y = 2, x = 2, ys = 2, q = 1, g = 1;
  for (u64 r = 1; g == 1; r <<= 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = step(y);
    for (u64 k = 0; k < r && g == 1; k += kBlock) {
      ys = y;
      const u64 lim = std::min(kBlock, r - k);
      if (iterations_left < lim) return 0;
      iterations_left -= lim;
      for (u64 i = 0; i < lim; ++i) {
        y = step(y);
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
    }
  }
  if (g == n) {
    do {
      ys = step(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g == n ? 0 : g;
}

std::optional<Integer> rho_mpz(const Integer& n, unsigned long increment, u64& iterations_left) {
  if (mpz_even_p(n.get_mpz_t())) return Integer(2);
  auto step = [&](Integer& v) {
    v = v * v + increment;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  constexpr u64 kBlock = 128;
  Integer y = 2, x = 2, ys = 2, q = 1, g = 1, diff;
  for (u64 r = 1; g == 1; r <<= 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) step(y);
    for (u64 k = 0; k < r && g == 1; k += kBlock) {
      ys = y;
      const u64 lim = std::min(kBlock, r - k);
      if (iterations_left < lim) return std::nullopt;
      iterations_left -= lim;
      for (u64 i = 0; i < lim; ++i) {
        step(y);
        diff = x - y;
        q *= diff;
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
    }
  }
  if (g == n) {
    do {
      step(ys);
      diff = x - ys;
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  if (g == n) return std::nullopt;
  return g;
}

// Splits a composite into a nontrivial factor, trying c = 1, 2, 3, ...
std::optional<Integer> find_factor(const Integer& n, u64& iterations_left) {
  for (unsigned long c = 1; iterations_left > 0; ++c) {
    if (fits_u64(n)) {
      const u64 f = rho_u64(to_u64(n), c, iterations_left);
      if (f != 0) return from_u64(f);
    } else if (auto f = rho_mpz(n, c, iterations_left)) {
      return f;
    }
  }
  return std::nullopt;
}

struct Accumulator {
  std::map<Integer, unsigned> primes;
  Integer leftover = 1;
  bool probabilistic = false;

  void add_prime(const Integer& p, unsigned e = 1) {
    primes[p] += e;
    if (p >= from_u64(kDeterministicPrimeBound) && primality(p) == Primality::ProbablePrime) probabilistic = true;
  }
};

unsigned divide_out(Integer& m, const Integer& p) {
  unsigned e = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++e;
  }
  return e;
}

// Returns true when the remaining m is known to be 1 or prime (p^2 > m).
bool trial_divide(Integer& m, u64 bound, Accumulator& acc) {
  const auto& primes = small_primes();
  if (fits_u64(m)) {
    u64 v = to_u64(m);
    for (std::uint32_t p : primes) {
      if (p > bound) break;
      if (static_cast<u64>(p) * p > v) {
        m = from_u64(v);
        return true;
      }
      if (v % p == 0) {
        unsigned e = 0;
        do {
          v /= p;
          ++e;
        } while (v % p == 0);
        acc.add_prime(Integer(p), e);
      }
    }
    m = from_u64(v);
    return false;
  }
  for (std::uint32_t p : primes) {
    if (p > bound) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      unsigned e = 0;
      do {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
      acc.add_prime(Integer(p), e);
      if (fits_u64(m)) return trial_divide(m, bound, acc);
    }
  }
  return false;
}

}  // namespace

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kSieveBound + 1, false);
    std::vector<std::uint32_t> out;
    out.reserve(78498);
    for (std::uint32_t i = 2; i <= kSieveBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= kSieveBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

Primality primality(const Integer& n) {
  if (n < 2) return Primality::Composite;
  if (fits_u64(n) && to_u64(n) < kDeterministicPrimeBound) {
    return miller_rabin_u64(to_u64(n)) ? Primality::Prime : Primality::Composite;
  }
  // GMP >= 6.2 runs Baillie-PSW followed by extra Miller-Rabin rounds.
  const int r = mpz_probab_prime_p(n.get_mpz_t(), 25);
  if (r == 0) return Primality::Composite;
  return r == 2 ? Primality::Prime : Primality::ProbablePrime;
}

bool is_prime(const Integer& n) { return primality(n) != Primality::Composite; }

Integer Factorization::value() const {
  Integer v = cofactor;
  for (const auto& [p, e] : factors) {
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return sign < 0 ? Integer(-v) : v;
}

std::vector<Integer> Factorization::primes() const {
  std::vector<Integer> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(f.prime);
  return out;
}

Factorization factorize(const Integer& n, const FactorBudget& budget, std::span<const Integer> hints) {
  if (n == 0) throw Error(ErrorCode::ZeroInput, "cannot factor 0");
  Factorization result;
  result.sign = n < 0 ? -1 : 1;
  Integer m = abs(n);
  Accumulator acc;

  for (const Integer& h : hints) {
    if (h < 2 || m == 1) continue;
    if (!mpz_divisible_p(m.get_mpz_t(), h.get_mpz_t())) continue;
    if (!is_prime(h)) continue;
    acc.add_prime(h, divide_out(m, h));
  }

  std::vector<Integer> pending;
  if (m > 1) {
    const bool settled = trial_divide(m, std::min<u64>(budget.trial_bound, kSieveBound), acc);
    if (m > 1) {
      if (settled) {
        acc.add_prime(m);
      } else {
        pending.push_back(m);
      }
    }
  }

  u64 iterations_left = budget.rho_iterations;
  while (!pending.empty()) {
    Integer c = std::move(pending.back());
    pending.pop_back();
    if (c == 1) continue;
    if (is_prime(c)) {
      acc.add_prime(c);
      continue;
    }
    if (mpz_perfect_power_p(c.get_mpz_t())) {
      // Peel off the largest exact root so rho only sees non-powers.
      for (unsigned long k = mpz_sizeinbase(c.get_mpz_t(), 2); k >= 2; --k) {
        Integer root;
        if (mpz_root(root.get_mpz_t(), c.get_mpz_t(), k) != 0) {
          for (unsigned long i = 0; i < k; ++i) pending.push_back(root);
          break;
        }
      }
      continue;
    }
    if (auto f = find_factor(c, iterations_left)) {
      Integer other = c / *f;
      pending.push_back(*f);
      pending.push_back(std::move(other));
    } else {
      acc.leftover *= c;
    }
  }

  for (auto& [p, e] : acc.primes) result.factors.push_back({p, e});
  result.cofactor = acc.leftover;
  result.complete = acc.leftover == 1;
  result.probabilistic = acc.probabilistic;
  return result;
}

std::vector<Integer> prime_set(const Integer& n, const FactorBudget& budget) {
  const Factorization f = factorize(n, budget);
  if (!f.complete) {
    throw Error(ErrorCode::IncompleteFactorization,
                "unfactored cofactor " + f.cofactor.get_str() + " of " + n.get_str());
  }
  return f.primes();
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_small(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_squarefree(const Integer& n, const FactorBudget& budget) {
  if (n == 0) return false;
  const Factorization f = factorize(n, budget);
  if (!f.complete) {
    throw Error(ErrorCode::IncompleteFactorization, "cannot decide squarefreeness of " + n.get_str());
  }
  return std::all_of(f.factors.begin(), f.factors.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
}

}  // namespace lehmer
