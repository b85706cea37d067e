#include "lehmer/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "lehmer/error.hpp"
#include "lehmer/factorint.hpp"
#include "lehmer/seqkit.hpp"

namespace lehmer {

int mobius(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::PreconditionViolated, "mobius(0)");
  int result = 1;
  for (const auto& [p, e] : factor_small(n)) {
    if (e > 1) return 0;
    result = -result;
  }
  return result;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::PreconditionViolated, "euler_phi(0)");
  std::uint64_t result = n;
  for (const auto& [p, e] : factor_small(n)) result = result / p * (p - 1);
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : factor_small(n)) {
    const std::size_t existing = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < existing; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntPoly::IntPoly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::x_pow_minus_one(std::uint64_t n) {
  std::vector<Integer> c(n + 1, 0);
  c[0] = -1;
  c[n] = 1;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
  if (divisor.is_zero() || divisor.coeffs_.back() != 1) {
    throw Error(ErrorCode::PreconditionViolated, "divisor must be monic");
  }
  if (degree() < divisor.degree()) {
    if (is_zero()) return {};
    throw Error(ErrorCode::PreconditionViolated, "division leaves a remainder");
  }
  std::vector<Integer> rem = coeffs_;
  const std::size_t dd = static_cast<std::size_t>(divisor.degree());
  std::vector<Integer> quotient(rem.size() - dd, 0);
  for (std::size_t i = rem.size(); i-- > dd;) {
    const Integer lead = rem[i];
    if (lead == 0) continue;
    const std::size_t shift = i - dd;
    quotient[shift] = lead;
    for (std::size_t j = 0; j <= dd; ++j) rem[shift + j] -= lead * divisor.coeffs_[j];
  }
  for (std::size_t i = 0; i < dd; ++i) {
    if (rem[i] != 0) throw Error(ErrorCode::PreconditionViolated, "division leaves a remainder");
  }
  return IntPoly(std::move(quotient));
}

Integer IntPoly::evaluate(const Integer& at) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

QuadInt IntPoly::evaluate(const QuadInt& at) const {
  QuadInt acc = QuadInt::integer(at.d(), 0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * at + QuadInt::integer(at.d(), *it);
  }
  return acc;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (long k = degree(); k >= 0; --k) {
    const Integer& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || k == 0) out += mag.get_str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

namespace {

struct CyclotomicMemo {
  std::shared_mutex mutex;
  std::map<std::uint64_t, IntPoly> table;
};

CyclotomicMemo& memo() {
  static CyclotomicMemo instance;
  return instance;
}

}  // namespace

IntPoly cyclotomic_poly(std::uint64_t n, std::uint64_t cap) {
  if (n == 0) throw Error(ErrorCode::PreconditionViolated, "cyclotomic_poly(0)");
  if (n > cap) {
    throw Error(ErrorCode::CapExceeded, "cyclotomic index " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  auto& m = memo();
  {
    std::shared_lock lock(m.mutex);
    if (auto it = m.table.find(n); it != m.table.end()) return it->second;
  }
  IntPoly poly = IntPoly::x_pow_minus_one(n);
  for (std::uint64_t d : divisors(n)) {
    if (d == n) break;
    poly = poly.divide_exact(cyclotomic_poly(d, cap));
  }
  std::unique_lock lock(m.mutex);
  return m.table.emplace(n, std::move(poly)).first->second;
}

Integer norm_cyclotomic(const QuadInt& u, std::uint64_t n) {
  require_unit_above_one(u);
  if (n == 0) throw Error(ErrorCode::PreconditionViolated, "norm_cyclotomic index must be >= 1");

  const Integer by_evaluation = cyclotomic_poly(n).evaluate(u).norm();

  const DeltaSeq seq(u, std::max<std::uint64_t>(n, kDefaultIndexCap));
  Integer numerator = 1;
  Integer denominator = 1;
  for (std::uint64_t d : divisors(n)) {
    const int mu = mobius(n / d);
    if (mu == 1) numerator *= seq[d];
    if (mu == -1) denominator *= seq[d];
  }
  if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t())) {
    throw Error(ErrorCode::OracleMismatch,
                "Moebius product for n = " + std::to_string(n) + " of " + u.to_string() + " is not an integer");
  }
  const Integer by_mobius = numerator / denominator;
  if (by_mobius != by_evaluation) {
    throw Error(ErrorCode::OracleMismatch, "N(phi_" + std::to_string(n) + "(" + u.to_string() +
                                               ")): evaluation gives " + by_evaluation.get_str() +
                                               ", Moebius product gives " + by_mobius.get_str());
  }
  return by_evaluation;
}

bool divides_n_squared(const QuadInt& u, std::uint64_t n) {
  if (n <= 6) {
    throw Error(ErrorCode::PreconditionViolated, "the divisibility criterion needs n > 6, got " + std::to_string(n));
  }
  if (u.norm() == -1 && n % 4 == 2) {
    throw Error(ErrorCode::PreconditionViolated,
                "n = " + std::to_string(n) + " is 2 mod 4, excluded for norm -1 units");
  }
  const Integer value = abs(norm_cyclotomic(u, n));
  const Integer n_squared = Integer(static_cast<unsigned long>(n)) * static_cast<unsigned long>(n);
  return mpz_divisible_p(n_squared.get_mpz_t(), value.get_mpz_t()) != 0;
}

}  // namespace lehmer
