#pragma once

#include <cstddef>
#include <deque>
#include <optional>
#include <shared_mutex>
#include <utility>

#include "lehmer/quadring.hpp"

namespace lehmer {

inline constexpr unsigned long kDefaultIndexCap = 10'000;

// Throws NotAUnit / NotGreaterThanOne unless u is a unit with u > 1.
void require_unit_above_one(const QuadInt& u);

// t_n = u^n + v^n for the conjugate v, from t_0 = 2, t_1 = T,
// t_n = T t_{n-1} - eps t_{n-2}.
class TraceSeq {
 public:
  explicit TraceSeq(const MinPoly& poly);

  Integer operator[](unsigned long n) const;
  const MinPoly& poly() const noexcept { return poly_; }

 private:
  MinPoly poly_;
  mutable std::shared_mutex mutex_;
  mutable std::deque<Integer> terms_;
};

// Lehmer-Pierce sequence Delta_n = N(u^n - 1) of a unit u > 1.
//
// Terms come from the closed form Delta_n = eps^n - t_n + 1, which follows
// from N(u^n - 1) = (uv)^n - (u^n + v^n) + 1 with uv = eps. The memo is
// guarded by a shared_mutex: concurrent readers, exclusive extension.
class DeltaSeq {
 public:
  explicit DeltaSeq(const QuadInt& unit, unsigned long cap = kDefaultIndexCap);

  // n >= 1, n <= cap.
  Integer operator[](unsigned long n) const;

  const QuadInt& unit() const noexcept { return unit_; }
  int norm_sign() const noexcept { return norm_sign_; }
  unsigned long cap() const noexcept { return cap_; }

 private:
  QuadInt unit_;
  int norm_sign_;
  unsigned long cap_;
  TraceSeq traces_;
};

Integer delta(const QuadInt& u, unsigned long n);
// N(u^n - 1) evaluated in the quadratic ring; independent of the trace recurrence.
Integer delta_direct(const QuadInt& u, unsigned long n);

// Position of Delta_n inside Delta' (the sequence with n = 2 mod 4 removed),
// or nullopt for a removed index.
std::optional<unsigned long> delta_prime_index(unsigned long n);
// Inverse of delta_prime_index.
unsigned long delta_index_from_prime(unsigned long k);

// (Delta_{2k}, -Delta_k^2) for a norm -1 unit and odd k; the two agree.
std::pair<Integer, Integer> skipped_square_identity(const QuadInt& u, unsigned long k);

}  // namespace lehmer
