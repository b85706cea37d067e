#include "lehmer/quadring.hpp"

#include "lehmer/error.hpp"
#include "lehmer/factorint.hpp"

namespace lehmer {

namespace {

bool is_odd(const Integer& v) { return mpz_odd_p(v.get_mpz_t()) != 0; }

bool d_is_1_mod_4(const Integer& d) { return mpz_fdiv_ui(d.get_mpz_t(), 4) == 1; }

void require_same_field(const QuadInt& a, const QuadInt& b) {
  if (a.d() != b.d()) {
    throw Error(ErrorCode::MixedFields,
                "operands live in Q(sqrt(" + a.d().get_str() + ")) and Q(sqrt(" + b.d().get_str() + "))");
  }
}

Integer half(const Integer& v) {
  Integer r;
  mpz_divexact_ui(r.get_mpz_t(), v.get_mpz_t(), 2);
  return r;
}

int sgn(const Integer& v) { return mpz_sgn(v.get_mpz_t()); }

std::strong_ordering from_sign(int s) {
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string signed_term(const Integer& coefficient, const std::string& surd, bool omit_one) {
  std::string out = sgn(coefficient) < 0 ? "-" : "+";
  const Integer mag = abs(coefficient);
  if (omit_one && mag == 1) return out + surd;
  return out + mag.get_str() + "*" + surd;
}

}  // namespace

QuadInt QuadInt::make(const Integer& d, const Integer& x, const Integer& y) {
  if (d <= 1 || !is_squarefree(d)) {
    throw Error(ErrorCode::NonSquarefreeD, "d = " + d.get_str() + " is not a squarefree integer > 1");
  }
  if (d_is_1_mod_4(d)) {
    if (is_odd(x) != is_odd(y)) {
      throw Error(ErrorCode::ParityViolation,
                  "(" + x.get_str() + " + " + y.get_str() + "*sqrt(" + d.get_str() +
                      "))/2 needs x = y (mod 2) when d = 1 (mod 4)");
    }
  } else if (is_odd(x) || is_odd(y)) {
    throw Error(ErrorCode::ParityViolation,
                "(" + x.get_str() + " + " + y.get_str() + "*sqrt(" + d.get_str() +
                    "))/2 needs even x and y when d != 1 (mod 4)");
  }
  return QuadInt(d, x, y);
}

QuadInt QuadInt::integer(const Integer& d, const Integer& k) { return make(d, 2 * k, 0); }

QuadInt QuadInt::conj() const { return QuadInt(d_, x_, -y_); }

Integer QuadInt::norm() const {
  Integer n = x_ * x_ - y_ * y_ * d_;
  mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), 4);
  return n;
}

Integer QuadInt::trace() const { return x_; }

bool QuadInt::is_unit() const {
  const Integer n = norm();
  return n == 1 || n == -1;
}

QuadInt QuadInt::operator-() const { return QuadInt(d_, -x_, -y_); }

QuadInt operator+(const QuadInt& a, const QuadInt& b) {
  require_same_field(a, b);
  return QuadInt(a.d_, a.x_ + b.x_, a.y_ + b.y_);
}

QuadInt operator-(const QuadInt& a, const QuadInt& b) {
  require_same_field(a, b);
  return QuadInt(a.d_, a.x_ - b.x_, a.y_ - b.y_);
}

QuadInt operator*(const QuadInt& a, const QuadInt& b) {
  require_same_field(a, b);
  // ((x1 x2 + y1 y2 d) + (x1 y2 + x2 y1) sqrt d) / 4, re-expressed over 2.
  return QuadInt(a.d_, half(a.x_ * b.x_ + a.y_ * b.y_ * a.d_), half(a.x_ * b.y_ + b.x_ * a.y_));
}

QuadInt operator*(const Integer& k, const QuadInt& a) { return QuadInt(a.d_, k * a.x_, k * a.y_); }

QuadInt QuadInt::pow(unsigned long n) const {
  QuadInt result(d_, 2, 0);
  QuadInt base = *this;
  while (n != 0) {
    if (n & 1UL) result = result * base;
    n >>= 1;
    if (n != 0) base = base * base;
  }
  return result;
}

std::string QuadInt::to_string() const {
  const std::string surd = "sqrt(" + d_.get_str() + ")";
  if (is_odd(x_)) {
    return "(" + x_.get_str() + signed_term(y_, surd, false) + ")/2";
  }
  return half(x_).get_str() + signed_term(half(y_), surd, false);
}

std::string QuadInt::pretty() const {
  const std::string surd = "sqrt(" + d_.get_str() + ")";
  if (is_odd(x_)) {
    return "(" + x_.get_str() + signed_term(y_, surd, true) + ")/2";
  }
  if (y_ == 0) return half(x_).get_str();
  return half(x_).get_str() + signed_term(half(y_), surd, true);
}

QuadInt add(const QuadInt& a, const QuadInt& b) { return a + b; }
QuadInt mul(const QuadInt& a, const QuadInt& b) { return a * b; }
QuadInt pow(const QuadInt& a, unsigned long n) { return a.pow(n); }

MinPoly min_poly(const QuadInt& q) {
  if (q.is_rational()) {
    throw Error(ErrorCode::RationalElement, q.to_string() + " is rational; its minimal polynomial is linear");
  }
  return {q.trace(), q.norm()};
}

std::strong_ordering compare_to_rational(const QuadInt& q, const Integer& p, const Integer& r) {
  if (r <= 0) throw Error(ErrorCode::PreconditionViolated, "denominator must be positive");
  // sign((x + y sqrt d)/2 - p/r) = sign(A + B sqrt d), A = r x - 2p, B = r y.
  const Integer a = r * q.x() - 2 * p;
  const Integer b = r * q.y();
  const int sa = sgn(a);
  const int sb = sgn(b);
  if (sb == 0) return from_sign(sa);
  if (sa == 0) return from_sign(sb);
  if (sa == sb) return from_sign(sa);
  // Opposite signs: compare A^2 with B^2 d. Equality is impossible (d squarefree > 1).
  const int magnitude = sgn(Integer(a * a - b * b * q.d()));
  return from_sign(sa > 0 ? magnitude : -magnitude);
}

std::strong_ordering compare_to_rational(const QuadInt& q, const Rational& value) {
  return compare_to_rational(q, value.get_num(), value.get_den());
}

std::strong_ordering compare(const QuadInt& a, const QuadInt& b) { return compare_to_rational(a - b, 0, 1); }

Real real_value(const QuadInt& q, unsigned digits) {
  Real root = sqrt(Real(q.d(), digits));
  Real value = Real(q.x(), digits) + Real(q.y(), digits) * root;
  return value / Real(2L, digits);
}

QuadInt named_unit(std::string_view name) {
  if (name == "golden") return QuadInt::make(5, 1, 1);
  if (name == "golden-squared") return QuadInt::make(5, 3, 1);
  if (name == "silver") return QuadInt::make(2, 2, 2);
  throw Error(ErrorCode::ParseError,
              "unknown named unit '" + std::string(name) + "' (expected golden, golden-squared or silver)");
}

}  // namespace lehmer
