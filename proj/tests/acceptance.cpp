// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "catalog.hpp"
#include "lehmer/lehmer.hpp"
#include "oracles.hpp"

using namespace lehmer;

namespace {

using Indices = std::vector<std::uint64_t>;

struct Row {
  std::uint64_t n;
  long delta;
  std::vector<long> primes;
};

struct Table {
  QuadInt unit;
  std::vector<Row> rows;
};

std::vector<Table> published_tables() {
  return {
      {QuadInt::make(3, 4, 2),
       {{1, -2, {2}}, {2, -12, {2, 3}}, {3, -50, {2, 5}}, {4, -192, {2, 3}}, {5, -722, {2, 19}}, {6, -2700, {2, 3, 5}}}},
      {QuadInt::make(2, 6, 4),
       {{1, -4, {2}},
        {2, -32, {2}},
        {3, -196, {2, 7}},
        {4, -1152, {2, 3}},
        {5, -6724, {2, 41}},
        {6, -39200, {2, 5, 7}}}},
      {QuadInt::make(21, 5, 1),
       {{1, -3, {3}},
        {2, -21, {3, 7}},
        {3, -108, {2, 3}},
        {4, -525, {3, 5, 7}},
        {5, -2523, {3, 29}},
        {6, -12096, {2, 3, 7}}}},
      {QuadInt::make(5, 3, 1),
       {{1, -1, {}},
        {2, -5, {5}},
        {3, -16, {2}},
        {4, -45, {3, 5}},
        {5, -121, {11}},
        {6, -320, {2, 5}},
        {7, -841, {29}},
        {8, -2205, {3, 5, 7}},
        {9, -5776, {2, 19}},
        {10, -15125, {5, 11}},
        {11, -39601, {199}},
        {12, -103680, {2, 3, 5}}}},
      {QuadInt::make(2, 2, 2), {{1, -2, {2}}, {3, -14, {2, 7}}, {4, -32, {2}}, {5, -82, {2, 41}}}},
      {QuadInt::make(5, 1, 1),
       {{1, -1, {}},
        {3, -4, {2}},
        {4, -5, {5}},
        {5, -11, {11}},
        {7, -29, {29}},
        {8, -45, {3, 5}},
        {9, -76, {2, 19}},
        {11, -199, {199}},
        {12, -320, {2, 5}},
        {13, -521, {521}},
        {15, -1364, {2, 11, 31}},
        {16, -2205, {3, 5, 7}},
        {17, -3571, {3571}},
        {19, -9349, {9349}},
        {20, -15125, {5, 11}},
        {21, -24476, {2, 19, 211}},
        {23, -64079, {139, 461}},
        {24, -103680, {2, 3, 5}}}},
  };
}

std::string join(const Indices& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

// Each check appends human-readable problems; an empty list is a pass.
using Problems = std::vector<std::string>;

Problems table_reproduction() {
  Problems p;
  for (const Table& t : published_tables()) {
    const PpdReport report = ppd_report(t.unit, t.rows.back().n);
    for (const Row& row : t.rows) {
      const PpdRecord& rec = report.records[row.n - 1];
      const std::vector<Integer> primes(row.primes.begin(), row.primes.end());
      if (rec.delta != row.delta || rec.primes != primes) {
        std::string got, want;
        for (const Integer& q : rec.primes) got += (got.empty() ? "" : ",") + q.get_str();
        for (long q : row.primes) want += (want.empty() ? "" : ",") + std::to_string(q);
        p.push_back(t.unit.to_string() + " row " + std::to_string(row.n) + ": computed " + rec.delta.get_str() + " | " +
                    got + ", published " + std::to_string(row.delta) + " | " + want);
      }
    }
  }
  return p;
}

Problems classification(const ClassificationReport& r) {
  Problems p = r.mismatches;
  for (const ClaimCheck& c : r.claims) {
    if (!c.ok) p.push_back(c.unit + ": expected " + join(c.expected_failing) + ", got " + join(c.actual_failing));
  }
  return p;
}

Problems search_bounds() {
  Problems p;
  auto expect_eq = [&](const std::string& what, const Indices& got, const Indices& want) {
    if (got != want) p.push_back(what + ": got " + join(got) + ", want " + join(want));
  };
  const std::uint64_t t1 = solve_g_threshold(Real::parse("2.06650"));
  const std::uint64_t t2 = solve_g_threshold(Real::parse("3.44217"));
  if (t1 != 604) p.push_back("threshold 2.06650 -> " + std::to_string(t1));
  if (t2 != 3375) p.push_back("threshold 3.44217 -> " + std::to_string(t2));

  expect_eq("(3+sqrt5)/2", candidate_set(QuadInt::make(5, 3, 1), 1).members, {8, 9, 10, 12, 14, 18, 24, 30});
  expect_eq("3+2sqrt2", candidate_set(QuadInt::make(2, 6, 4), 1).members, {});
  expect_eq("(5+sqrt21)/2", candidate_set(QuadInt::make(21, 5, 1), 1).members, {12});
  expect_eq("2+sqrt3", candidate_set(QuadInt::make(3, 4, 2), 1).members, {8, 10, 12});
  expect_eq("1+sqrt2", candidate_set(QuadInt::make(2, 2, 2), -1).members, {7, 8, 9, 11, 12, 15, 16, 20, 21, 24, 28, 36});

  const ZsigmondyCertificate golden = zsigmondy(QuadInt::make(5, 1, 1));
  Indices residual;
  for (const CandidateCheck& c : golden.candidate_checks) {
    if (c.disposition == Disposition::NeedsFactoring) residual.push_back(c.n);
  }
  expect_eq("golden residual", residual, {12, 20, 24});

  std::uint64_t cutoff = 0;
  for (std::uint64_t n = 7; n <= 3375; ++n) {
    if (passes_inequality(QuadInt::make(5, 1, 1), n, -1)) cutoff = n;
  }
  if (cutoff != 90) p.push_back("norm -1 cutoff " + std::to_string(cutoff));
  return p;
}

Problems constants() {
  Problems p;
  const ConstantDerivation d = recompute_constants();
  for (const ConstantCheck& c : d.checks) {
    if (!c.within_tolerance || (c.is_upper_bound && !c.rounds_up)) {
      p.push_back(c.name + ": stored " + c.stored.to_string(12) + ", recomputed " + c.recomputed.to_string(12) +
                  ", exact " + c.exact.to_string(12));
    }
  }
  return p;
}

Problems oracle_equivalence() {
  Problems p;
  for (const QuadInt& u : testdata::all_units()) {
    DeltaSeq seq(u);
    for (unsigned long n = 1; n <= 200; ++n) {
      if (seq[n] != delta_direct(u, n)) p.push_back(u.to_string() + ": delta differs at " + std::to_string(n));
    }
    for (std::uint64_t n = 1; n <= 60; ++n) {
      Integer product = 1;
      for (std::uint64_t d : divisors(n)) product *= norm_cyclotomic(u, d);
      if (product != seq[n]) p.push_back(u.to_string() + ": cyclotomic product differs at " + std::to_string(n));
    }
    for (std::uint64_t n = 61; n <= 90; ++n) {
      try {
        norm_cyclotomic(u, n);
      } catch (const Error& e) {
        p.push_back(u.to_string() + ": " + e.what());
      }
    }
    if (u.norm() == -1) {
      for (unsigned long k = 1; k <= 45; k += 2) {
        const auto [twice, square] = skipped_square_identity(u, k);
        if (twice != square) p.push_back(u.to_string() + ": square identity fails at k = " + std::to_string(k));
      }
    }
  }
  for (int eps : {1, -1}) {
    for (long bound = 2; bound <= 20; ++bound) {
      std::set<std::tuple<long, long, long>> expected, actual;
      for (const auto& t : oracle::brute_force_units(eps, bound)) expected.insert(t);
      for (const QuadInt& u : enumerate_units(eps, bound)) actual.emplace(u.d().get_si(), u.x().get_si(), u.y().get_si());
      if (expected != actual) p.push_back("enumeration differs: norm " + std::to_string(eps) + " B = " + std::to_string(bound));
    }
  }
  return p;
}

Problems analytic_suites() {
  Problems p;
  Real previous = g(Real(4L, Real::kDefaultDigits));
  for (long n = 5; n <= 10000; ++n) {
    const Real current = g(Real(n, Real::kDefaultDigits));
    if (!(current > previous)) p.push_back("g not increasing at " + std::to_string(n));
    previous = current;
  }
  const MertensScan scan = mertens_scan(7, 10000);
  if (!scan.holds) p.push_back("Mertens bound fails at " + std::to_string(scan.first_failure));

  // log |N(phi_n(u))| > phi(n) log u - K
  const BoundConstants k = BoundConstants::published();
  for (const QuadInt& u : testdata::all_units()) {
    const bool plus = u.norm() == 1;
    const Real& K = plus ? k.s_norm1 : k.s_norm_minus1_total;
    const Real log_u = log(real_value(u));
    for (std::uint64_t n = 1; n <= 100; ++n) {
      const Integer value = abs(norm_cyclotomic(u, n));
      const Real lhs = log(Real(value, Real::kDefaultDigits));
      const Real rhs = Real(static_cast<long>(euler_phi(n)), Real::kDefaultDigits) * log_u - K;
      if (!(lhs > rhs)) p.push_back(u.to_string() + ": lower bound fails at n = " + std::to_string(n));
    }
  }
  return p;
}

Problems factorization() {
  Problems p;
  auto check = [&](const Integer& n) {
    const Factorization f = factorize(n);
    if (f.value() != n) p.push_back("reconstruction fails for " + n.get_str());
    if (!f.complete) p.push_back("incomplete for " + n.get_str());
    for (const PrimePower& pp : f.factors) {
      if (pp.prime < 2 || !is_prime(pp.prime)) p.push_back("non-prime factor of " + n.get_str());
    }
    if (f.cofactor != 1 && is_prime(f.cofactor)) p.push_back("prime cofactor for " + n.get_str());
    if (!(factorize(n) == f)) p.push_back("nondeterministic for " + n.get_str());
  };
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 10000; ++i) {
    std::uint64_t v = rng();
    if (v == 0) v = 1;
    Integer n;
    mpz_import(n.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
    check(n);
  }
  for (const Table& t : published_tables()) {
    for (const Row& row : t.rows) {
      check(Integer(row.delta));
    }
  }
  return p;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<Problems()> run;
  };

  const std::vector<Criterion> criteria = {
      {1, "table reproduction", table_reproduction},
      {2, "norm +1 classification",
       [] { return classification(verify_norm_plus_classification()); }},
      {3, "norm -1 classification",
       [] { return classification(verify_norm_minus_classification()); }},
      {4, "search bounds", search_bounds},
      {5, "constants within 1e-5", constants},
      {6, "oracle equivalence", oracle_equivalence},
      {7, "analytic property suites", analytic_suites},
      {8, "factorization invariants", factorization},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Problems problems;
    try {
      problems = c.run();
    } catch (const std::exception& e) {
      problems.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (problems.empty() ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << std::fixed
              << std::setprecision(1) << seconds << " s)\n";
    for (std::size_t i = 0; i < problems.size() && i < 20; ++i) std::cout << "    " << problems[i] << "\n";
    if (!problems.empty()) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
