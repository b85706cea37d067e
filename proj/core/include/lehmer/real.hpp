#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

namespace lehmer {

// Arbitrary-precision binary float backed by MPFR. Precision is tracked
// per value in decimal digits; binary operations round to the larger of
// the two operand precisions.
class Real {
 public:
  static constexpr unsigned kDefaultDigits = 50;

  Real() : Real(kDefaultDigits) {}
  explicit Real(unsigned digits);
  Real(long value, unsigned digits);
  Real(const mpz_class& value, unsigned digits);
  Real(const mpq_class& value, unsigned digits);

  // Parses a decimal literal such as "1.55724" or "-3e-5".
  static Real parse(std::string_view decimal, unsigned digits = kDefaultDigits);
  static Real pi(unsigned digits = kDefaultDigits);
  static Real euler_e(unsigned digits = kDefaultDigits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  unsigned digits() const noexcept { return digits_; }
  Real with_digits(unsigned digits) const;

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  // Nearest rounding to `significant` decimal digits, positional notation.
  std::string to_string(unsigned significant) const;
  std::string to_string() const { return to_string(digits_); }
  // Fixed number of digits after the decimal point.
  std::string to_fixed(unsigned decimals) const;

  Real operator-() const;
  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

  friend Real log(const Real& x);
  friend Real exp(const Real& x);
  friend Real sqrt(const Real& x);
  friend Real abs(const Real& x);
  friend Real log1p(const Real& x);

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

 private:
  unsigned digits_;
  mpfr_t value_;
};

mpfr_prec_t bits_for_digits(unsigned digits);

}  // namespace lehmer
