#include <gtest/gtest.h>

#include <set>

#include "catalog.hpp"
#include "lehmer/cyclo.hpp"
#include "lehmer/ppd.hpp"
#include "lehmer/seqkit.hpp"
#include "lehmer/serialize.hpp"

using namespace lehmer;

namespace {

using Indices = std::vector<std::uint64_t>;

int sign_of(const QuadInt& u) { return u.norm() == 1 ? 1 : -1; }

}  // namespace

TEST(PpdReport, NormPlusOneExamples) {
  EXPECT_EQ(ppd_report(QuadInt::make(3, 4, 2), 6).failing(), (Indices{4, 6}));
  EXPECT_EQ(ppd_report(QuadInt::make(2, 6, 4), 6).failing(), (Indices{2}));

  const PpdReport r = ppd_report(QuadInt::make(5, 3, 1), 12);
  EXPECT_EQ(r.failing(), (Indices{6, 10, 12}));
  EXPECT_EQ(r.records[0].status, PpdStatus::UnitTerm);
  EXPECT_TRUE(r.records[0].primes.empty());
  // Table prime sets, n = 2 .. 12.
  const std::vector<std::vector<long>> table = {{5},    {2},    {3, 5}, {11},   {2, 5},   {29},
                                                {3, 5, 7}, {2, 19}, {5, 11}, {199}, {2, 3, 5}};
  for (std::size_t i = 0; i < table.size(); ++i) {
    EXPECT_EQ(r.records[i + 1].primes, std::vector<Integer>(table[i].begin(), table[i].end())) << "n = " << i + 2;
  }
}

TEST(PpdReport, NormMinusOneExamples) {
  const PpdReport silver = ppd_report(QuadInt::make(2, 2, 2), 36);
  EXPECT_EQ(silver.failing(), (Indices{4}));
  EXPECT_EQ(silver.failing_prime_indices(), (Indices{3}));

  const PpdReport golden = ppd_report(QuadInt::make(5, 1, 1), 24);
  EXPECT_EQ(golden.failing(), (Indices{12, 20, 24}));
  EXPECT_EQ(golden.failing_prime_indices(), (Indices{9, 15, 18}));
  EXPECT_EQ(golden.records[22].primes, (std::vector<Integer>{139, 461}));
  // 24476 = 2^2 * 29 * 211
  EXPECT_EQ(golden.records[20].primes, (std::vector<Integer>{2, 29, 211}));
  EXPECT_TRUE(golden.records[1].skipped());
  EXPECT_EQ(golden.records[3].prime_index, 3u);
}

TEST(PpdReport, PrimitivityIsSound) {
  for (const QuadInt& u : testdata::all_units()) {
    const PpdReport r = ppd_report(u, 30);
    DeltaSeq seq(u);
    for (const PpdRecord& rec : r.records) {
      EXPECT_EQ(rec.status == PpdStatus::UnitTerm, abs(rec.delta) == 1);
      for (const Integer& p : rec.primitive) {
        EXPECT_NE(std::find(rec.primes.begin(), rec.primes.end(), p), rec.primes.end());
        for (std::uint64_t m = 1; m < rec.n; ++m) {
          ASSERT_NE(seq[m] % p, 0) << u.to_string() << " p = " << p.get_str() << " n = " << rec.n << " m = " << m;
        }
      }
      if (rec.status == PpdStatus::NoPpd) EXPECT_TRUE(rec.primitive.empty());
    }
  }
}

TEST(PpdReport, FailuresSatisfyTheCriterion) {
  for (const QuadInt& u : testdata::all_units()) {
    const int eps = sign_of(u);
    const PpdReport r = ppd_report(u, 36);
    for (const PpdRecord& rec : r.records) {
      if (rec.n <= 6 || rec.status != PpdStatus::NoPpd) continue;
      if (eps == -1 && rec.n % 4 == 2) continue;
      EXPECT_TRUE(divides_n_squared(u, rec.n)) << u.to_string() << " n = " << rec.n;
    }
  }
}

TEST(PpdReport, SkippedTermsAddNoPrimes) {
  for (const QuadInt& u : testdata::norm_minus_units()) {
    const PpdReport r = ppd_report(u, 34);
    for (std::uint64_t k = 1; k <= 17; k += 2) {
      const PpdRecord& twice = r.records[2 * k - 1];
      ASSERT_TRUE(twice.skipped());
      std::set<Integer> earlier;
      for (std::uint64_t m = 1; m < 2 * k; ++m) {
        for (const Integer& p : r.records[m - 1].primes) earlier.insert(p);
      }
      for (const Integer& p : twice.primes) EXPECT_TRUE(earlier.count(p)) << u.to_string() << " k = " << k;
      EXPECT_TRUE(twice.primitive.empty());
    }
  }
}

TEST(Zsigmondy, Examples) {
  const ZsigmondyCertificate a = zsigmondy(QuadInt::make(21, 5, 1));
  EXPECT_EQ(a.z, 6u);
  EXPECT_EQ(a.failing_n, (Indices{6}));
  ASSERT_EQ(a.candidate_checks.size(), 1u);
  EXPECT_EQ(a.candidate_checks[0].n, 12u);
  EXPECT_EQ(a.candidate_checks[0].disposition, Disposition::EliminatedByCriterion);

  const ZsigmondyCertificate golden = zsigmondy(QuadInt::make(5, 1, 1));
  EXPECT_EQ(golden.sequence, "Delta'");
  EXPECT_EQ(golden.z, 18u);
  EXPECT_EQ(golden.failing_prime_index, (Indices{9, 15, 18}));
  EXPECT_EQ(golden.failing_n, (Indices{12, 20, 24}));

  const ZsigmondyCertificate silver = zsigmondy(QuadInt::make(2, 2, 2));
  EXPECT_EQ(silver.z, 3u);
  EXPECT_EQ(silver.failing_prime_index, (Indices{3}));

  const ZsigmondyCertificate plain = zsigmondy(QuadInt::make(5, 4, 2));
  EXPECT_EQ(plain.z, 1u);
  EXPECT_TRUE(plain.failing_n.empty());
  EXPECT_FALSE(plain.z_convention.empty());
}

TEST(Zsigmondy, EveryCandidateHasADisposition) {
  for (const QuadInt& u : testdata::all_units()) {
    const ZsigmondyCertificate c = zsigmondy(u);
    ASSERT_TRUE(c.complete);
    ASSERT_EQ(c.candidate_checks.size(), c.candidates.size());
    std::set<std::uint64_t> factored;
    for (const FactorCheck& f : c.factor_checks) factored.insert(f.n);
    for (std::uint64_t n = 1; n <= 6; ++n) EXPECT_TRUE(factored.count(n)) << u.to_string() << " n = " << n;
    for (const CandidateCheck& cc : c.candidate_checks) {
      if (cc.disposition == Disposition::NeedsFactoring) EXPECT_TRUE(factored.count(cc.n));
      EXPECT_EQ(cc.disposition == Disposition::EliminatedByCriterion, !cc.divides_n_squared);
    }
  }
}

TEST(Zsigmondy, CertificatesReplayIdentically) {
  for (const QuadInt& u : {QuadInt::make(5, 3, 1), QuadInt::make(5, 1, 1), QuadInt::make(85, 9, 1)}) {
    EXPECT_EQ(to_json(zsigmondy(u)), to_json(zsigmondy(u)));
  }
}
