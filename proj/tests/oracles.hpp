#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check.

#include <cmath>
#include <cstdint>
#include <tuple>
#include <vector>

namespace oracle {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

inline bool is_squarefree(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

inline std::uint64_t totient(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    std::uint64_t a = k, b = n;
    while (b) {
      const std::uint64_t t = a % b;
      a = b;
      b = t;
    }
    if (a == 1) ++count;
  }
  return count;
}

// (d, x, y) in half-coordinates for every unit 1 < (x + y sqrt d)/2 <= bound
// of norm eps, by scanning the box |x| <= 2B + 2, y^2 d <= x^2 + 4.
inline std::vector<std::tuple<long, long, long>> brute_force_units(int eps, long bound) {
  std::vector<std::tuple<long, long, long>> out;
  const long x_lim = 2 * bound + 2;
  for (long x = -x_lim; x <= x_lim; ++x) {
    const long cap = x * x + 4;
    for (long d = 2; d <= cap; ++d) {
      if (!is_squarefree(static_cast<std::uint64_t>(d))) continue;
      for (long m = 1; m * m * d <= cap; ++m) {
        for (long y : {m, -m}) {
          const bool parity_ok = d % 4 == 1 ? ((x - y) % 2 == 0) : (x % 2 == 0 && y % 2 == 0);
          if (!parity_ok || x * x - y * y * d != 4L * eps) continue;
          const long double value = (x + y * std::sqrt(static_cast<long double>(d))) / 2.0L;
          if (value > 1.0L && value <= static_cast<long double>(bound)) out.emplace_back(d, x, y);
        }
      }
    }
  }
  return out;
}

}  // namespace oracle
