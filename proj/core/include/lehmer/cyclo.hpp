#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lehmer/quadring.hpp"

namespace lehmer {

int mobius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

// Dense integer polynomial, coefficients from the constant term upward.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coefficients);

  // x^n - 1
  static IntPoly x_pow_minus_one(std::uint64_t n);

  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  // Exact division by a monic divisor; throws PreconditionViolated if the
  // divisor is not monic or leaves a remainder.
  IntPoly divide_exact(const IntPoly& monic_divisor) const;

  Integer evaluate(const Integer& at) const;
  QuadInt evaluate(const QuadInt& at) const;

  std::string to_string() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

// n-th cyclotomic polynomial from x^n - 1 divided by phi_d for the proper
// divisors d of n. Results are memoized for the life of the process.
IntPoly cyclotomic_poly(std::uint64_t n, std::uint64_t cap = 10'000);

// N(phi_n(u)), computed both by evaluating phi_n in the ring and by the
// Moebius product prod_{d | n} Delta_d^{mu(n/d)}. The two must agree exactly;
// a mismatch throws OracleMismatch.
Integer norm_cyclotomic(const QuadInt& u, std::uint64_t n);

// |N(phi_n(u))| divides n^2. Requires n > 6, and n != 2 (mod 4) for norm -1.
bool divides_n_squared(const QuadInt& u, std::uint64_t n);

}  // namespace lehmer
