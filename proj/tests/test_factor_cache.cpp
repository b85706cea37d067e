#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "lehmer/factor_cache.hpp"

using namespace lehmer;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("lehmer_test_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST(FactorCache, EncodeDecodeRoundTrip) {
  const Factorization f = factorize(39601);
  const std::string line = FactorCache::encode(39601, f);
  EXPECT_EQ(line, R"({"value":"39601","factors":[["199","2"]],"complete":true})");
  const auto back = FactorCache::decode(line);
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(back->first, 39601);
  EXPECT_EQ(back->second, f);
}

TEST(FactorCache, RejectsBadRecords) {
  EXPECT_FALSE(FactorCache::decode("not json"));
  EXPECT_FALSE(FactorCache::decode(R"({"value":"39601","factors":[["199","1"]],"complete":true})"));
  EXPECT_FALSE(FactorCache::decode(R"({"value":"12","factors":[["4","1"],["3","1"]],"complete":true})"));
  EXPECT_FALSE(FactorCache::decode(R"({"value":"15","factors":[["5","1"],["3","1"]],"complete":true})"));
  EXPECT_FALSE(FactorCache::decode(R"({"value":"15","complete":true})"));
}

TEST(FactorCache, PersistsAndAppliesSign) {
  const auto path = temp_file("persist");
  {
    FactorCache cache(path);
    EXPECT_EQ(cache.size(), 0u);
    const Factorization f = factorize_cached(-2700, {}, &cache);
    EXPECT_EQ(f.sign, -1);
    EXPECT_EQ(cache.size(), 1u);
    factorize_cached(2700, {}, &cache);
    EXPECT_EQ(cache.size(), 1u);
  }
  FactorCache reloaded(path);
  EXPECT_EQ(reloaded.size(), 1u);
  const auto hit = reloaded.lookup(-2700);
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(hit->sign, -1);
  EXPECT_EQ(hit->value(), -2700);
  EXPECT_EQ(reloaded.lookup(2700)->sign, 1);
  EXPECT_FALSE(reloaded.lookup(2701).has_value());
  std::filesystem::remove(path);
}

TEST(FactorCache, SkipsCorruptLines) {
  const auto path = temp_file("corrupt");
  {
    std::ofstream out(path);
    out << R"({"value":"39601","factors":[["199","2"]],"complete":true})" << "\n";
    out << "{garbage\n";
    out << R"({"value":"10","factors":[["2","1"],["7","1"]],"complete":true})" << "\n";
    out << R"({"value":"2700","factors":[["2","2"],["3","3"],["5","2"]],"complete":true})" << "\n";
  }
  testing::internal::CaptureStderr();
  FactorCache cache(path);
  const std::string warnings = testing::internal::GetCapturedStderr();
  EXPECT_EQ(cache.size(), 2u);
  EXPECT_EQ(cache.skipped_lines(), 2u);
  EXPECT_NE(warnings.find("corrupt"), std::string::npos);
  EXPECT_TRUE(cache.lookup(-39601).has_value());
  EXPECT_FALSE(cache.lookup(10).has_value());
  std::filesystem::remove(path);
}

TEST(FactorCache, IncompleteResultsAreNotStored) {
  const auto path = temp_file("incomplete");
  FactorCache cache(path);
  FactorBudget tiny;
  tiny.rho_iterations = 10;
  const Integer n = Integer("1000000000039") * Integer("1000000000061");
  const Factorization f = factorize_cached(n, tiny, &cache);
  EXPECT_FALSE(f.complete);
  EXPECT_EQ(cache.size(), 0u);
  std::filesystem::remove(path);
}
