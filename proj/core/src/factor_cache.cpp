#include "lehmer/factor_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>

#include <json.hpp>

namespace lehmer {

namespace {

bool parse_decimal(const std::string& s, Integer& out) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) return false;
  return out.set_str(s, 10) == 0;
}

}  // namespace

FactorCache::FactorCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto decoded = decode(line);
    if (!decoded) {
      ++skipped_;
      std::cerr << "warning: " << path_.string() << ":" << line_no << ": skipping corrupt factor record\n";
      continue;
    }
    if (!decoded->second.complete) continue;
    entries_.emplace(decoded->first.get_str(), std::move(decoded->second));
  }
}

std::optional<std::filesystem::path> FactorCache::path_from_env() {
  const char* env = std::getenv(kFactorCacheEnv);
  if (env == nullptr || *env == '\0') return std::nullopt;
  return std::filesystem::path(env);
}

std::string FactorCache::encode(const Integer& abs_value, const Factorization& f) {
  nlohmann::ordered_json j;
  j["value"] = abs_value.get_str();
  auto factors = nlohmann::ordered_json::array();
  for (const auto& pp : f.factors) {
    factors.push_back({pp.prime.get_str(), std::to_string(pp.exponent)});
  }
  j["factors"] = std::move(factors);
  j["complete"] = f.complete;
  return j.dump();
}

std::optional<std::pair<Integer, Factorization>> FactorCache::decode(const std::string& line) {
  nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  if (!j.contains("value") || !j["value"].is_string()) return std::nullopt;
  if (!j.contains("factors") || !j["factors"].is_array()) return std::nullopt;
  if (!j.contains("complete") || !j["complete"].is_boolean()) return std::nullopt;

  Integer value;
  if (!parse_decimal(j["value"].get<std::string>(), value) || value == 0) return std::nullopt;

  Factorization f;
  f.complete = j["complete"].get<bool>();
  Integer product = 1;
  Integer previous = 1;
  for (const auto& entry : j["factors"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() || !entry[1].is_string()) {
      return std::nullopt;
    }
    Integer p, e;
    if (!parse_decimal(entry[0].get<std::string>(), p) || !parse_decimal(entry[1].get<std::string>(), e)) {
      return std::nullopt;
    }
    if (p <= previous || e < 1 || !e.fits_uint_p() || !is_prime(p)) return std::nullopt;
    previous = p;
    const unsigned exponent = static_cast<unsigned>(e.get_ui());
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), exponent);
    product *= pe;
    f.factors.push_back({p, exponent});
    if (primality(p) == Primality::ProbablePrime) f.probabilistic = true;
  }
  if (f.complete) {
    if (product != value) return std::nullopt;
  } else {
    if (value % product != 0) return std::nullopt;
    f.cofactor = value / product;
    if (f.cofactor == 1) return std::nullopt;
  }
  return std::make_pair(value, std::move(f));
}

std::optional<Factorization> FactorCache::lookup(const Integer& n) const {
  std::shared_lock lock(mutex_);
  const Integer key = abs(n);
  auto it = entries_.find(key.get_str());
  if (it == entries_.end()) return std::nullopt;
  Factorization f = it->second;
  f.sign = n < 0 ? -1 : 1;
  return f;
}

void FactorCache::record(const Integer& n, const Factorization& f) {
  if (!f.complete) return;
  const Integer key = abs(n);
  std::unique_lock lock(mutex_);
  auto [it, inserted] = entries_.emplace(key.get_str(), f);
  if (!inserted) return;
  it->second.sign = 1;
  std::ofstream out(path_, std::ios::app);
  if (!out) {
    std::cerr << "warning: cannot append to factor cache " << path_.string() << "\n";
    return;
  }
  out << encode(key, f) << '\n';
}

std::size_t FactorCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

Factorization factorize_cached(const Integer& n, const FactorBudget& budget, FactorCache* cache,
                               std::span<const Integer> hints) {
  if (cache != nullptr) {
    if (auto hit = cache->lookup(n)) return *hit;
  }
  Factorization f = factorize(n, budget, hints);
  if (cache != nullptr) cache->record(n, f);
  return f;
}

}  // namespace lehmer
