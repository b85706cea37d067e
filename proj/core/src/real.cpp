#include "lehmer/real.hpp"

#include <algorithm>
#include <memory>
#include <string>

#include "lehmer/error.hpp"

namespace lehmer {

mpfr_prec_t bits_for_digits(unsigned digits) {
  // log2(10) ~ 3.3219; a few guard bits on top.
  return static_cast<mpfr_prec_t>(digits * 3.3219280948873623 + 16);
}

Real::Real(unsigned digits) : digits_(digits) {
  mpfr_init2(value_, bits_for_digits(digits));
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, unsigned digits) : digits_(digits) {
  mpfr_init2(value_, bits_for_digits(digits));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const mpz_class& value, unsigned digits) : digits_(digits) {
  mpfr_init2(value_, bits_for_digits(digits));
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const mpq_class& value, unsigned digits) : digits_(digits) {
  mpfr_init2(value_, bits_for_digits(digits));
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real Real::parse(std::string_view decimal, unsigned digits) {
  Real r(digits);
  std::string s(decimal);
  char* end = nullptr;
  if (mpfr_strtofr(r.value_, s.c_str(), &end, 10, MPFR_RNDN) != 0 && end == s.c_str()) {
    throw Error(ErrorCode::ParseError, "not a decimal number: " + s);
  }
  if (end == s.c_str() || *end != '\0') {
    throw Error(ErrorCode::ParseError, "not a decimal number: " + s);
  }
  return r;
}

Real Real::pi(unsigned digits) {
  Real r(digits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

Real Real::euler_e(unsigned digits) {
  Real one(1L, digits);
  return exp(one);
}

Real::Real(const Real& other) : digits_(other.digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : digits_(other.digits_) {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    digits_ = other.digits_;
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  std::swap(digits_, other.digits_);
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::with_digits(unsigned digits) const {
  Real r(digits);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

namespace {

// Widen `target` in place so that it can hold results at the precision of `rhs`.
void widen(Real& target, unsigned& digits, const Real& rhs) {
  if (rhs.digits() > digits) {
    mpfr_prec_round(target.get(), bits_for_digits(rhs.digits()), MPFR_RNDN);
    digits = rhs.digits();
  }
}

}  // namespace

Real& Real::operator+=(const Real& rhs) {
  widen(*this, digits_, rhs);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  widen(*this, digits_, rhs);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  widen(*this, digits_, rhs);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  widen(*this, digits_, rhs);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Real log(const Real& x) {
  Real r(x.digits_);
  mpfr_log(r.value_, x.value_, MPFR_RNDN);
  return r;
}

Real log1p(const Real& x) {
  Real r(x.digits_);
  mpfr_log1p(r.value_, x.value_, MPFR_RNDN);
  return r;
}

Real exp(const Real& x) {
  Real r(x.digits_);
  mpfr_exp(r.value_, x.value_, MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  Real r(x.digits_);
  mpfr_sqrt(r.value_, x.value_, MPFR_RNDN);
  return r;
}

Real abs(const Real& x) {
  Real r(x.digits_);
  mpfr_abs(r.value_, x.value_, MPFR_RNDN);
  return r;
}

std::string Real::to_string(unsigned significant) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return mpfr_sgn(value_) < 0 ? "-inf" : "inf";
  if (mpfr_zero_p(value_)) return "0";
  significant = std::max(significant, 1u);
  mpfr_exp_t exponent = 0;
  std::unique_ptr<char, void (*)(char*)> raw(
      mpfr_get_str(nullptr, &exponent, 10, significant, value_, MPFR_RNDN), mpfr_free_str);
  std::string mantissa(raw.get());
  std::string out;
  if (!mantissa.empty() && mantissa.front() == '-') {
    out.push_back('-');
    mantissa.erase(0, 1);
  }
  // value = 0.mantissa * 10^exponent
  if (exponent <= 0) {
    out += "0.";
    out.append(static_cast<std::size_t>(-exponent), '0');
    out += mantissa;
  } else if (static_cast<std::size_t>(exponent) >= mantissa.size()) {
    out += mantissa;
    out.append(static_cast<std::size_t>(exponent) - mantissa.size(), '0');
    out += ".0";
  } else {
    out += mantissa.substr(0, static_cast<std::size_t>(exponent));
    out += '.';
    out += mantissa.substr(static_cast<std::size_t>(exponent));
  }
  // Trailing zeros after the point carry no information.
  while (out.size() > 2 && out.back() == '0' && out[out.size() - 2] != '.') out.pop_back();
  return out;
}

std::string Real::to_fixed(unsigned decimals) const {
  char* buffer = nullptr;
  if (mpfr_asprintf(&buffer, "%.*RNf", static_cast<int>(decimals), value_) < 0) {
    return "nan";
  }
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

}  // namespace lehmer
