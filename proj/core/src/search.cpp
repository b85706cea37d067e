#include "lehmer/search.hpp"

#include <algorithm>
#include <string>

#include "lehmer/cyclo.hpp"
#include "lehmer/error.hpp"
#include "lehmer/factorint.hpp"

namespace lehmer {

namespace {

constexpr unsigned kMaxDigits = 1600;

Real guard_for(unsigned digits) {
  // 1e-20 at the default 50 digits; proportionally tighter above.
  const unsigned exponent = digits > 30 ? digits - 30 : 1;
  return Real::parse("1e-" + std::to_string(exponent), digits);
}

Real ln_zeta2(unsigned digits) {
  const Real pi = Real::pi(digits);
  return log(pi * pi / Real(6L, digits));
}

// Meissel-Mertens constant: gamma + sum_p (log(1 - 1/p) + 1/p). The tail
// beyond 10^6 is below 1e-7.
Real mertens_constant(unsigned digits) {
  Real gamma(digits);
  mpfr_const_euler(gamma.get(), MPFR_RNDN);
  Real sum(digits);
  const Real one(1L, digits);
  for (std::uint32_t p : small_primes()) {
    const Real inv = one / Real(static_cast<long>(p), digits);
    sum += log1p(-inv) + inv;
  }
  return gamma + sum;
}

// -log(1 - 1/u) for u = (a + sqrt 5) / 2
Real tail_log(long a, unsigned digits) {
  const Real u = (Real(a, digits) + sqrt(Real(5L, digits))) / Real(2L, digits);
  return -log1p(-(Real(1L, digits) / u));
}

Real reciprocal_gap(long a, unsigned digits) {
  const Real u = (Real(a, digits) + sqrt(Real(5L, digits))) / Real(2L, digits);
  const Real one(1L, digits);
  return one / (one - one / u);
}

}  // namespace

BoundConstants BoundConstants::published(unsigned digits) {
  return BoundConstants{
      Real::parse("1.55724", digits), Real::parse("2.51966", digits), Real::parse("5.03933", digits),
      Real::parse("1.26899", digits), Real::parse("1.76669", digits), Real::parse("2.02819", digits),
      Real::parse("2.71072", digits), Real::parse("0.2614972128", digits), ln_zeta2(digits),
  };
}

bool ConstantDerivation::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ConstantCheck& c) { return c.within_tolerance && c.rounds_up; });
}

ConstantDerivation recompute_constants(unsigned digits) {
  const BoundConstants pub = BoundConstants::published(digits);
  const Real tolerance = Real::parse("1e-5", digits);
  const Real two(2L, digits);
  const Real lz = ln_zeta2(digits);
  const Real mertens = mertens_constant(digits);

  ConstantDerivation out{pub, {}};
  auto add = [&](std::string name, const Real& stored, const Real& recomputed, const Real& exact, bool bound) {
    ConstantCheck c{std::move(name), stored, recomputed, exact, bound, false, true};
    c.within_tolerance = abs(stored - recomputed) <= tolerance;
    if (bound) c.rounds_up = stored >= exact;
    out.checks.push_back(std::move(c));
  };

  // Norm +1: |S| < 2 u/(u-1) * (-log(1 - 1/u)) at u = (3 + sqrt 5)/2, printed
  // with the coefficient 3.23607.
  const Real coeff1_exact = two * reciprocal_gap(3, digits);
  const Real coeff1 = Real::parse("3.23607", digits);
  add("coefficient_norm1", coeff1, coeff1_exact, coeff1_exact, true);
  const Real s1_exact = coeff1_exact * tail_log(3, digits);
  add("s_norm1", pub.s_norm1, coeff1 * tail_log(3, digits), s1_exact, true);

  // Norm -1: |S_i| < u/(u-1) * (-log(1 - 1/u)) at u = (1 + sqrt 5)/2, printed
  // with the coefficient 2.61804.
  const Real coeff2_exact = reciprocal_gap(1, digits);
  const Real coeff2 = Real::parse("2.61804", digits);
  add("coefficient_norm_minus1", coeff2, coeff2_exact, coeff2_exact, true);
  const Real si_exact = coeff2_exact * tail_log(1, digits);
  const Real si_printed = coeff2 * tail_log(1, digits);
  add("s_norm_minus1_each", pub.s_norm_minus1_each, si_printed, si_exact, true);
  add("s_norm_minus1_total", pub.s_norm_minus1_total, two * si_printed, two * si_exact, true);

  add("log_zeta2", pub.log_zeta2, lz, lz, false);
  add("mertens_B", pub.mertens_B, mertens, mertens, false);

  // log(phi(n)) + log log u < log(K + 2 log n) <= log(K + 2) + log log n, n > e.
  const Real l357_exact = log(two + s1_exact);
  add("log_357", pub.log_357, log(two + pub.s_norm1), l357_exact, true);
  const Real wz_exact = l357_exact + lz;
  add("with_zeta", pub.with_zeta, pub.log_357 + lz, wz_exact, true);
  add("c_norm1", pub.c_norm1, pub.with_zeta + pub.mertens_B, wz_exact + mertens, true);
  add("c_norm_minus1", pub.c_norm_minus1, log(two + pub.s_norm_minus1_total) + lz + pub.mertens_B,
      log(two + two * si_exact) + lz + mertens, true);
  return out;
}

ConstantDerivation derive_constants(unsigned digits) {
  ConstantDerivation d = recompute_constants(digits);
  for (const auto& c : d.checks) {
    if (!c.within_tolerance || !c.rounds_up) {
      throw Error(ErrorCode::DerivationMismatch, c.name + ": stored " + c.stored.to_string(12) + ", recomputed " +
                                                     c.recomputed.to_string(12) + ", exact " + c.exact.to_string(12));
    }
  }
  return d;
}

Real g(const Real& x) {
  if (x <= Real::euler_e(x.digits())) {
    throw Error(ErrorCode::DomainError, "g is defined on (e, inf); got " + x.to_string(20));
  }
  const Real lx = log(x);
  return lx - Real(2L, x.digits()) * log(lx) - Real(4L, x.digits()) / lx;
}

GuardedComparison guarded_compare(const std::function<Real(unsigned)>& difference, unsigned digits) {
  for (;;) {
    Real margin = difference(digits);
    if (abs(margin) >= guard_for(digits) || digits >= kMaxDigits) {
      return GuardedComparison{margin.sign(), std::move(margin), digits};
    }
    digits *= 2;
  }
}

namespace {

// g(n) < c, resolved with escalating precision.
bool g_below(std::uint64_t n, const Real& c) {
  const auto cmp = guarded_compare(
      [&](unsigned digits) { return g(Real(static_cast<long>(n), digits)) - c.with_digits(std::max(digits, c.digits())); },
      c.digits());
  return cmp.sign < 0;
}

}  // namespace

std::uint64_t solve_g_threshold(const Real& c) {
  if (!g_below(3, c)) return 2;
  std::uint64_t lo = 3;
  std::uint64_t hi = 4;
  while (g_below(hi, c)) {
    lo = hi;
    if (hi > (1ULL << 60)) throw Error(ErrorCode::CapExceeded, "g threshold beyond 2^60");
    hi *= 2;
  }
  // g(lo) < c <= g(hi)
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (g_below(mid, c) ? lo : hi) = mid;
  }
  return lo;
}

GuardedComparison inequality_margin(const QuadInt& u, std::uint64_t n, int norm_sign) {
  if (n == 0) throw Error(ErrorCode::PreconditionViolated, "n must be >= 1");
  const char* k_text = norm_sign > 0 ? "1.55724" : "5.03933";
  const auto totient = static_cast<long>(euler_phi(n));
  return guarded_compare([&](unsigned digits) {
    const Real lhs = Real(totient, digits) * log(real_value(u, digits));
    const Real rhs = Real::parse(k_text, digits) + Real(2L, digits) * log(Real(static_cast<long>(n), digits));
    return lhs - rhs;
  });
}

bool passes_inequality(const QuadInt& u, std::uint64_t n, int norm_sign) {
  return inequality_margin(u, n, norm_sign).sign < 0;
}

Real threshold_constant(const QuadInt& u, int norm_sign, unsigned digits) {
  if (compare_to_rational(u, 1) != std::strong_ordering::greater) {
    throw Error(ErrorCode::NotGreaterThanOne, u.to_string() + " must exceed 1");
  }
  const Real c = Real::parse(norm_sign > 0 ? "2.02819" : "2.71072", digits);
  return c - log(log(real_value(u, digits)));
}

CandidateSet candidate_set(const QuadInt& u, int norm_sign) {
  CandidateSet out{u, norm_sign, threshold_constant(u, norm_sign), 0, {}, {}};
  out.n_max = solve_g_threshold(out.threshold_c);
  if (out.n_max > 10'000) {
    throw Error(ErrorCode::CapExceeded, "threshold " + std::to_string(out.n_max) + " exceeds the index cap");
  }
  for (std::uint64_t n = 7; n <= out.n_max; ++n) {
    if (!passes_inequality(u, n, norm_sign)) continue;
    if (norm_sign < 0 && n % 4 == 2) {
      out.removed_2mod4.push_back(n);
    } else {
      out.members.push_back(n);
    }
  }
  return out;
}

std::vector<QuadInt> enumerate_units(int norm_sign, const Rational& bound) {
  if (bound <= 1) throw Error(ErrorCode::PreconditionViolated, "bound must exceed 1");
  if (norm_sign != 1 && norm_sign != -1) throw Error(ErrorCode::PreconditionViolated, "norm sign must be +1 or -1");
  Integer x_max;
  mpz_fdiv_q(x_max.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  x_max += 1;

  // u = (x + sqrt(x^2 - 4 eps)) / 2 increases with x, so the output is sorted.
  std::vector<QuadInt> units;
  for (Integer x = 1; x <= x_max; ++x) {
    const Integer disc = x * x - 4 * norm_sign;  // y^2 d
    if (disc <= 0) continue;
    const Factorization f = factorize(disc);
    Integer d = 1, y = 1;
    for (const auto& [p, e] : f.factors) {
      if (e % 2 == 1) d *= p;
      Integer pk;
      mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e / 2);
      y *= pk;
    }
    if (d == 1) continue;
    const QuadInt u = QuadInt::make(d, x, y);
    if (u.norm() != norm_sign) continue;
    if (compare_to_rational(u, 1) != std::strong_ordering::greater) continue;
    if (compare_to_rational(u, bound) == std::strong_ordering::greater) continue;
    units.push_back(u);
  }
  return units;
}

MertensScan mertens_scan(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 7) throw Error(ErrorCode::PreconditionViolated, "Mertens bound is checked from n = 7");
  constexpr unsigned kDigits = Real::kDefaultDigits;
  const Real B = Real::parse("0.2614972128", kDigits);
  const Real one(1L, kDigits);
  const Real four(4L, kDigits);
  const auto& primes = small_primes();
  if (hi > primes.back()) throw Error(ErrorCode::CapExceeded, "Mertens scan limited to n < 10^6");

  MertensScan scan;
  Real sum(kDigits);
  std::size_t next = 0;
  bool first = true;
  for (std::uint64_t n = 2; n <= hi; ++n) {
    while (next < primes.size() && primes[next] <= n) {
      sum += one / Real(static_cast<long>(primes[next]), kDigits);
      ++next;
    }
    if (n < lo) continue;
    const Real ln = log(Real(static_cast<long>(n), kDigits));
    const Real margin = log(ln) + B + four / ln - sum;
    if (first || margin < scan.min_margin) {
      scan.min_margin = margin;
      scan.argmin = n;
      first = false;
    }
    if (margin.sign() <= 0 && scan.holds) {
      scan.holds = false;
      scan.first_failure = n;
    }
  }
  return scan;
}

bool mertens_check(std::uint64_t n) { return mertens_scan(n, n).holds; }

std::uint64_t crossover_bound(int norm_sign) {
  for (std::uint64_t c = 2;; ++c) {
    const CandidateSet set = candidate_set(QuadInt::integer(5, Integer(static_cast<unsigned long>(c))), norm_sign);
    if (set.members.empty()) return c;
  }
}

}  // namespace lehmer
