#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <vector>

#include "dyck/path.hpp"

namespace dyck {

/// Deterministic bit source: mt19937_64 from a 64-bit seed. Same seed, same
/// stream, on every platform.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t next_word() { return engine_(); }

  /// Uniform in [0, bound) by rejection from the next power of two.
  mpz_class uniform_below(const mpz_class& bound);
  std::uint64_t uniform_below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

/// W_c(l, y): walks of length l from height y to 0 staying within [0, c].
class WalkTable {
 public:
  WalkTable(int cap, int max_length);

  int cap() const noexcept { return cap_; }
  int max_length() const noexcept { return max_length_; }
  /// Zero outside 0 <= y <= cap.
  const mpz_class& at(int length, int y) const;

 private:
  int cap_;
  int max_length_;
  std::vector<mpz_class> cells_;  // (max_length + 1) x (cap + 1), row = length
};

/// Exact tables for sampling rushed paths of semilength n by the recursive
/// method. Height counts are computed eagerly from walk counts and checked
/// against the series route; the full walk table for a given cap is built on
/// first use and cached. Logically immutable and safe to share across threads.
class SamplerTables {
 public:
  explicit SamplerTables(int n);

  int n() const noexcept { return n_; }
  /// r[n, h] for h = 0..n.
  const std::vector<mpz_class>& height_counts() const noexcept { return by_height_; }
  const mpz_class& total() const noexcept { return total_; }

  /// The walk table for cap h-1, used after the initial u^h d.
  std::shared_ptr<const WalkTable> walks_for_height(int h) const;
  std::size_t cached_tables() const;

 private:
  int n_;
  std::vector<mpz_class> by_height_;
  std::vector<mpz_class> cumulative_;  // cumulative_[h] = sum_{k <= h} r[n, k]
  mpz_class total_;

  mutable std::mutex mutex_;
  mutable std::map<int, std::shared_ptr<const WalkTable>> walks_;

  friend Path sample_rushed(const SamplerTables&, RandomSource&);
};

SamplerTables build_tables(int n);

/// Uniform rushed path of semilength tables.n(). One uniform draw in [0, r_n)
/// is decoded into the height and then each step, comparing the residual
/// rank with exact suffix counts; no floating point is involved.
Path sample_rushed(const SamplerTables& tables, RandomSource& rng);

/// G applied to a uniform rushed path: uniform over progressive paths.
Path sample_progressive(const SamplerTables& tables, RandomSource& rng);

}  // namespace dyck
