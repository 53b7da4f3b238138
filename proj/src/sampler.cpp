#include "dyck/sampler.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "dyck/bijections.hpp"
#include "dyck/enumeration.hpp"

namespace dyck {

mpz_class RandomSource::uniform_below(const mpz_class& bound) {
  if (bound <= 0) throw std::invalid_argument("uniform_below: bound must be positive");
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  std::vector<std::uint64_t> buf(words);
  mpz_class x;
  for (;;) {
    // most significant word first
    for (auto& w : buf) w = engine_();
    if (const std::size_t spare = words * 64 - bits; spare > 0) buf[0] &= ~std::uint64_t{0} >> spare;
    mpz_import(x.get_mpz_t(), words, 1, sizeof(std::uint64_t), 0, 0, buf.data());
    if (x < bound) return x;
  }
}

std::uint64_t RandomSource::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
  const int bits = std::bit_width(bound - 1);
  const std::uint64_t mask = bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
  for (;;) {
    std::uint64_t x = engine_() & mask;
    if (x < bound) return x;
  }
}

WalkTable::WalkTable(int cap, int max_length) : cap_(cap), max_length_(max_length) {
  if (cap < 0 || max_length < 0) throw std::invalid_argument("WalkTable: cap and length must be nonnegative");
  const auto width = static_cast<std::size_t>(cap) + 1;
  cells_.resize((static_cast<std::size_t>(max_length) + 1) * width);
  cells_[0] = 1;
  for (std::size_t l = 1; l <= static_cast<std::size_t>(max_length); ++l) {
    const mpz_class* prev = &cells_[(l - 1) * width];
    mpz_class* cur = &cells_[l * width];
    for (std::size_t y = 0; y < width; ++y) {
      if (y + 1 < width) cur[y] += prev[y + 1];
      if (y >= 1) cur[y] += prev[y - 1];
    }
  }
}

namespace {
const mpz_class kNoWalks = 0;

// Walks of `length` steps from 0 to `target` inside [0, cap]; by reversal
// this equals W_cap(length, target). Rolling rows, O(cap) memory.
mpz_class bounded_walks(int cap, int length, int target) {
  if (cap < 0 || target < 0 || target > cap) return 0;
  std::vector<mpz_class> cur(static_cast<std::size_t>(cap) + 1), next(cur.size());
  cur[0] = 1;
  for (int l = 1; l <= length; ++l) {
    const int remaining = length - l;
    const int lo = std::max(0, target - remaining);
    const int hi = std::min({cap, l, target + remaining});
    for (auto& v : next) v = 0;
    for (int y = lo; y <= hi; ++y) {
      auto k = static_cast<std::size_t>(y);
      if (y >= 1) next[k] += cur[k - 1];
      if (y + 1 <= cap) next[k] += cur[k + 1];
    }
    std::swap(cur, next);
  }
  return cur[static_cast<std::size_t>(target)];
}

}  // namespace

const mpz_class& WalkTable::at(int length, int y) const {
  if (length < 0 || length > max_length_ || y < 0 || y > cap_) return kNoWalks;
  return cells_[static_cast<std::size_t>(length) * (static_cast<std::size_t>(cap_) + 1) + static_cast<std::size_t>(y)];
}

SamplerTables::SamplerTables(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("SamplerTables: n must be at least 1");
  by_height_.resize(static_cast<std::size_t>(n) + 1);
  for (int h = 1; h <= n; ++h) by_height_[static_cast<std::size_t>(h)] = bounded_walks(h - 1, 2 * n - h - 1, h - 1);

  const auto series_row = rushed_height_row(n);
  for (int h = 0; h <= n; ++h)
    if (series_row[static_cast<std::size_t>(h)] != by_height_[static_cast<std::size_t>(h)])
      throw std::logic_error("SamplerTables: walk count for height " + std::to_string(h) +
                             " disagrees with the series coefficient at n=" + std::to_string(n));

  cumulative_.resize(by_height_.size());
  mpz_class acc;
  for (std::size_t h = 0; h < by_height_.size(); ++h) {
    acc += by_height_[h];
    cumulative_[h] = acc;
  }
  total_ = acc;
}

std::shared_ptr<const WalkTable> SamplerTables::walks_for_height(int h) const {
  if (h < 1 || h > n_) throw std::out_of_range("walks_for_height: height out of range");
  std::lock_guard lock(mutex_);
  auto& slot = walks_[h];
  if (!slot) slot = std::make_shared<const WalkTable>(h - 1, 2 * n_ - h - 1);
  return slot;
}

std::size_t SamplerTables::cached_tables() const {
  std::lock_guard lock(mutex_);
  return walks_.size();
}

SamplerTables build_tables(int n) { return SamplerTables(n); }

Path sample_rushed(const SamplerTables& tables, RandomSource& rng) {
  mpz_class rank = rng.uniform_below(tables.total_);
  const auto& cum = tables.cumulative_;
  const auto h = static_cast<int>(std::upper_bound(cum.begin(), cum.end(), rank) - cum.begin());
  if (h > 0) rank -= cum[static_cast<std::size_t>(h - 1)];

  Path p;
  p.append(Step::Up, static_cast<std::size_t>(h));
  p.push_back(Step::Down);
  auto walks = tables.walks_for_height(h);
  int y = h - 1;
  for (int remaining = 2 * tables.n() - h - 1; remaining > 0; --remaining) {
    const mpz_class& up = walks->at(remaining - 1, y + 1);
    if (rank < up) {
      p.push_back(Step::Up);
      ++y;
    } else {
      rank -= up;
      p.push_back(Step::Down);
      --y;
    }
  }
  return p;
}

Path sample_progressive(const SamplerTables& tables, RandomSource& rng) { return apply_g(sample_rushed(tables, rng)); }

}  // namespace dyck
