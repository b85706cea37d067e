#include "lehmer/seqkit.hpp"

#include <mutex>
#include <string>

#include "lehmer/error.hpp"

namespace lehmer {

void require_unit_above_one(const QuadInt& u) {
  if (!u.is_unit()) {
    throw Error(ErrorCode::NotAUnit, u.to_string() + " has norm " + u.norm().get_str());
  }
  if (compare_to_rational(u, 1) != std::strong_ordering::greater) {
    throw Error(ErrorCode::NotGreaterThanOne, u.to_string() + " is not greater than 1");
  }
}

TraceSeq::TraceSeq(const MinPoly& poly) : poly_(poly) {
  terms_.push_back(2);
  terms_.push_back(poly_.trace);
}

Integer TraceSeq::operator[](unsigned long n) const {
  {
    std::shared_lock lock(mutex_);
    if (n < terms_.size()) return terms_[n];
  }
  std::unique_lock lock(mutex_);
  while (terms_.size() <= n) {
    const std::size_t k = terms_.size();
    terms_.push_back(poly_.trace * terms_[k - 1] - poly_.norm * terms_[k - 2]);
  }
  return terms_[n];
}

DeltaSeq::DeltaSeq(const QuadInt& unit, unsigned long cap)
    : unit_(unit), norm_sign_(0), cap_(cap), traces_((require_unit_above_one(unit), min_poly(unit))) {
  norm_sign_ = unit_.norm() > 0 ? 1 : -1;
}

Integer DeltaSeq::operator[](unsigned long n) const {
  if (n == 0) throw Error(ErrorCode::PreconditionViolated, "Delta is indexed from 1");
  if (n > cap_) {
    throw Error(ErrorCode::CapExceeded, "index " + std::to_string(n) + " exceeds cap " + std::to_string(cap_));
  }
  const int eps_n = (norm_sign_ < 0 && (n & 1UL)) ? -1 : 1;
  return eps_n - traces_[n] + 1;
}

Integer delta(const QuadInt& u, unsigned long n) { return DeltaSeq(u, std::max(n, kDefaultIndexCap))[n]; }

Integer delta_direct(const QuadInt& u, unsigned long n) {
  require_unit_above_one(u);
  if (n == 0) throw Error(ErrorCode::PreconditionViolated, "Delta is indexed from 1");
  return (u.pow(n) - QuadInt::integer(u.d(), 1)).norm();
}

std::optional<unsigned long> delta_prime_index(unsigned long n) {
  if (n == 0) throw Error(ErrorCode::PreconditionViolated, "Delta is indexed from 1");
  if (n % 4 == 2) return std::nullopt;
  return n - (n + 2) / 4;
}

unsigned long delta_index_from_prime(unsigned long k) {
  if (k == 0) throw Error(ErrorCode::PreconditionViolated, "Delta' is indexed from 1");
  // Each block of four indices keeps three: 1, 3, 4 | 5, 7, 8 | ...
  const unsigned long block = (k - 1) / 3;
  static constexpr unsigned long kOffsets[] = {1, 3, 4};
  return 4 * block + kOffsets[(k - 1) % 3];
}

std::pair<Integer, Integer> skipped_square_identity(const QuadInt& u, unsigned long k) {
  require_unit_above_one(u);
  if (u.norm() != -1) throw Error(ErrorCode::NotNormMinusOne, u.to_string() + " has norm +1");
  if (k % 2 == 0) throw Error(ErrorCode::KNotOdd, "k = " + std::to_string(k) + " is even");
  const DeltaSeq seq(u, std::max(2 * k, kDefaultIndexCap));
  const Integer dk = seq[k];
  return {seq[2 * k], -(dk * dk)};
}

}  // namespace lehmer
