#include <gtest/gtest.h>

#include "catalog.hpp"
#include "lehmer/error.hpp"
#include "lehmer/seqkit.hpp"

using namespace lehmer;

namespace {

std::vector<Integer> first_terms(const QuadInt& u, unsigned long count) {
  DeltaSeq seq(u);
  std::vector<Integer> out;
  for (unsigned long n = 1; n <= count; ++n) out.push_back(seq[n]);
  return out;
}

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(DeltaSeq, PublishedTables) {
  EXPECT_EQ(first_terms(QuadInt::make(3, 4, 2), 6), ints({-2, -12, -50, -192, -722, -2700}));
  EXPECT_EQ(first_terms(QuadInt::make(2, 6, 4), 6), ints({-4, -32, -196, -1152, -6724, -39200}));
  EXPECT_EQ(first_terms(QuadInt::make(21, 5, 1), 6), ints({-3, -21, -108, -525, -2523, -12096}));
  EXPECT_EQ(first_terms(QuadInt::make(5, 3, 1), 12),
            ints({-1, -5, -16, -45, -121, -320, -841, -2205, -5776, -15125, -39601, -103680}));
}

TEST(DeltaSeq, NormMinusOneTables) {
  DeltaSeq silver(QuadInt::make(2, 2, 2));
  EXPECT_EQ(silver[1], -2);
  EXPECT_EQ(silver[3], -14);
  EXPECT_EQ(silver[4], -32);
  EXPECT_EQ(silver[5], -82);

  DeltaSeq golden(QuadInt::make(5, 1, 1));
  const std::vector<std::pair<unsigned long, long>> rows = {
      {1, -1},     {3, -4},     {4, -5},      {5, -11},     {7, -29},     {8, -45},
      {9, -76},    {11, -199},  {12, -320},   {13, -521},   {15, -1364},  {16, -2205},
      {17, -3571}, {19, -9349}, {20, -15125}, {21, -24476}, {23, -64079}, {24, -103680}};
  for (const auto& [n, value] : rows) EXPECT_EQ(golden[n], value) << "n = " << n;
}

TEST(DeltaSeq, ClosedFormMatchesRingNorm) {
  for (const QuadInt& u : testdata::all_units()) {
    DeltaSeq seq(u);
    for (unsigned long n = 1; n <= 200; ++n) {
      ASSERT_EQ(seq[n], delta_direct(u, n)) << u.to_string() << " n = " << n;
    }
  }
}

TEST(DeltaSeq, DivisibilityLadder) {
  for (const QuadInt& u : testdata::all_units()) {
    DeltaSeq seq(u);
    for (unsigned long m = 1; m <= 40; ++m) {
      for (unsigned long n = m; n <= 120; n += m) {
        ASSERT_EQ(seq[n] % seq[m], 0) << u.to_string() << " " << m << " | " << n;
      }
    }
  }
}

TEST(DeltaSeq, RejectsBadUnitsAndIndices) {
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::OracleMismatch;
  };
  EXPECT_EQ(code_of([] { DeltaSeq s(QuadInt::make(3, 8, 2)); }), ErrorCode::NotAUnit);
  EXPECT_EQ(code_of([] { DeltaSeq s(QuadInt::make(3, 4, -2)); }), ErrorCode::NotGreaterThanOne);
  EXPECT_EQ(code_of([] { DeltaSeq s(QuadInt::make(5, -1, 1)); }), ErrorCode::NotGreaterThanOne);
  DeltaSeq small(QuadInt::make(2, 2, 2), 50);
  EXPECT_EQ(code_of([&] { (void)small[51]; }), ErrorCode::CapExceeded);
  EXPECT_THROW((void)small[0], Error);
}

TEST(DeltaPrime, IndexMapping) {
  EXPECT_EQ(delta_prime_index(1), 1u);
  EXPECT_EQ(delta_prime_index(2), std::nullopt);
  EXPECT_EQ(delta_prime_index(3), 2u);
  EXPECT_EQ(delta_prime_index(4), 3u);
  EXPECT_EQ(delta_prime_index(6), std::nullopt);
  EXPECT_EQ(delta_prime_index(12), 9u);
  EXPECT_EQ(delta_prime_index(20), 15u);
  EXPECT_EQ(delta_prime_index(24), 18u);
  for (unsigned long k = 1; k <= 5000; ++k) {
    const unsigned long n = delta_index_from_prime(k);
    ASSERT_NE(n % 4, 2u);
    ASSERT_EQ(delta_prime_index(n), k);
  }
}

TEST(DeltaPrime, SkippedTermsAreNegativeSquares) {
  for (const QuadInt& u : testdata::norm_minus_units()) {
    for (unsigned long k = 1; k <= 61; k += 2) {
      const auto [twice, square] = skipped_square_identity(u, k);
      ASSERT_EQ(twice, square) << u.to_string() << " k = " << k;
    }
  }
  try {
    skipped_square_identity(QuadInt::make(3, 4, 2), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNormMinusOne);
  }
  try {
    skipped_square_identity(QuadInt::make(2, 2, 2), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::KNotOdd);
  }
}
