#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "lehmer/real.hpp"

namespace lehmer {

using Integer = mpz_class;
using Rational = mpq_class;

// Element (x + y*sqrt(d)) / 2 of the ring of integers of Q(sqrt(d)), d > 1
// squarefree. Half-coordinates cover both ring shapes:
//   d = 1 (mod 4):  x = y (mod 2)
//   otherwise:      x, y both even
class QuadInt {
 public:
  // Validates d (squarefree, > 1) and the parity rule.
  static QuadInt make(const Integer& d, const Integer& x, const Integer& y);
  // The rational integer k, viewed inside Q(sqrt(d)).
  static QuadInt integer(const Integer& d, const Integer& k);

  const Integer& d() const noexcept { return d_; }
  const Integer& x() const noexcept { return x_; }
  const Integer& y() const noexcept { return y_; }

  QuadInt conj() const;
  Integer norm() const;   // (x^2 - y^2 d) / 4
  Integer trace() const;  // x
  bool is_unit() const;
  bool is_rational() const { return y_ == 0; }

  QuadInt pow(unsigned long n) const;

  QuadInt operator-() const;
  friend QuadInt operator+(const QuadInt& a, const QuadInt& b);
  friend QuadInt operator-(const QuadInt& a, const QuadInt& b);
  friend QuadInt operator*(const QuadInt& a, const QuadInt& b);
  friend QuadInt operator*(const Integer& k, const QuadInt& a);

  friend bool operator==(const QuadInt& a, const QuadInt& b) = default;

  // Canonical literal: "a+b*sqrt(d)" or "(x+y*sqrt(d))/2" when x, y are odd.
  std::string to_string() const;
  // Mathematical form for tables, e.g. "2+sqrt(3)" or "(1+sqrt(5))/2".
  std::string pretty() const;

 private:
  QuadInt(Integer d, Integer x, Integer y) : d_(std::move(d)), x_(std::move(x)), y_(std::move(y)) {}

  Integer d_;
  Integer x_;
  Integer y_;
};

QuadInt add(const QuadInt& a, const QuadInt& b);
QuadInt mul(const QuadInt& a, const QuadInt& b);
QuadInt pow(const QuadInt& a, unsigned long n);
inline QuadInt conj(const QuadInt& q) { return q.conj(); }
inline Integer norm(const QuadInt& q) { return q.norm(); }
inline Integer trace(const QuadInt& q) { return q.trace(); }

// X^2 - trace*X + norm
struct MinPoly {
  Integer trace;
  Integer norm;

  friend bool operator==(const MinPoly&, const MinPoly&) = default;
};

MinPoly min_poly(const QuadInt& q);

// Exact sign of q - p/r using integer arithmetic only. Requires r > 0.
std::strong_ordering compare_to_rational(const QuadInt& q, const Integer& p, const Integer& r = 1);
std::strong_ordering compare_to_rational(const QuadInt& q, const Rational& value);
inline std::strong_ordering compare_to_rational(const QuadInt& q, long value) {
  return compare_to_rational(q, Integer(value), Integer(1));
}
// Exact ordering of two elements of the same field.
std::strong_ordering compare(const QuadInt& a, const QuadInt& b);

Real real_value(const QuadInt& q, unsigned digits = Real::kDefaultDigits);

// Unit literal grammar, whitespace allowed between tokens:
//   [sign] a (+|-) b*sqrt(d)
//   ( [sign] x (+|-) y*sqrt(d) ) / 2
// Errors carry the 0-based column of the offending character.
QuadInt parse_quad(std::string_view text);

// Names accepted by the CLI --named flag: golden, silver, golden-squared.
QuadInt named_unit(std::string_view name);

}  // namespace lehmer
