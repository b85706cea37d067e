#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>

#include "lehmer/factorint.hpp"

namespace lehmer {

inline constexpr const char* kFactorCacheEnv = "LEHMER_FACTOR_CACHE";

// Append-only store of complete factorizations, one JSON object per line:
//
//   {"value":"39601","factors":[["199","2"]],"complete":true}
//
// Keys are absolute values. Lines that fail to parse or whose factors do not
// multiply back to the value are skipped with a warning on stderr.
class FactorCache {
 public:
  explicit FactorCache(std::filesystem::path path);

  // The sign of `n` is applied to the cached record.
  std::optional<Factorization> lookup(const Integer& n) const;
  // Only complete factorizations are persisted; repeated values are ignored.
  void record(const Integer& n, const Factorization& f);

  std::size_t size() const;
  std::size_t skipped_lines() const { return skipped_; }
  const std::filesystem::path& path() const { return path_; }

  static std::optional<std::filesystem::path> path_from_env();

  static std::string encode(const Integer& abs_value, const Factorization& f);
  // nullopt for a corrupt line.
  static std::optional<std::pair<Integer, Factorization>> decode(const std::string& line);

 private:
  std::filesystem::path path_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, Factorization> entries_;
  std::size_t skipped_ = 0;
};

// factorize() with a read-through cache; `cache` may be null.
Factorization factorize_cached(const Integer& n, const FactorBudget& budget, FactorCache* cache,
                               std::span<const Integer> hints = {});

}  // namespace lehmer
