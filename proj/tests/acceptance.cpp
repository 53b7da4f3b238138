// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Brute-force references come from oracles.hpp.

#include <boost/math/distributions/chi_squared.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "dyck/animals.hpp"
#include "dyck/asymptotics.hpp"
#include "dyck/bijections.hpp"
#include "dyck/enumeration.hpp"
#include "dyck/path.hpp"
#include "dyck/sampler.hpp"
#include "oracles.hpp"

using namespace dyck;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string fmt(double v, int digits = 4) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

// Exhaustive rushed and progressive sets, lexicographic, from the string oracle.
struct Exhaustive {
  std::vector<std::vector<std::string>> all, rushed, progressive;
  explicit Exhaustive(int max_n) : all(max_n + 1), rushed(max_n + 1), progressive(max_n + 1) {
    for (int n = 0; n <= max_n; ++n) {
      all[n] = oracle::all_dyck(n);
      for (const auto& w : all[n]) {
        if (oracle::rushed(w)) rushed[n].push_back(w);
        if (oracle::progressive(w)) progressive[n].push_back(w);
      }
    }
  }
};

const Exhaustive& exhaustive() {
  static const Exhaustive e(12);
  return e;
}

Outcome ac1() {
  const auto& e = exhaustive();
  for (int n = 0; n <= 12; ++n) {
    if (e.rushed[n].size() != e.progressive[n].size())
      return {false, "counts differ at n=" + std::to_string(n)};
    if (enumerate_dyck(n, is_rushed).size() != e.rushed[n].size() ||
        enumerate_dyck(n, is_progressive).size() != e.progressive[n].size())
      return {false, "library enumeration differs from the oracle at n=" + std::to_string(n)};
  }
  return {true, "n<=12, r_12 = p_12 = " + std::to_string(e.rushed[12].size())};
}

Outcome ac2() {
  const auto& e = exhaustive();
  std::size_t f_checked = 0;
  for (int n = 0; n <= 10; ++n) {
    std::vector<Path> image;
    for (const auto& w : e.rushed[n]) {
      const Path p = parse_path(w);
      const Path q = apply_g(p);
      if (invert_g(q) != p) return {false, "G^-1(G(p)) != p for " + w};
      image.push_back(q);
    }
    // Path order is U < D, the oracle's order
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end()) return {false, "G not injective at n=" + std::to_string(n)};
    std::vector<std::string> rendered;
    for (const Path& q : image) rendered.push_back(render_path(q));
    if (rendered != e.progressive[n]) return {false, "G image != progressive set at n=" + std::to_string(n)};
    for (const auto& w : e.progressive[n])
      if (render_path(apply_g(invert_g(parse_path(w)))) != w) return {false, "G(G^-1(q)) != q for " + w};

    std::map<int, std::vector<Path>> by_height;
    for (const auto& w : e.all[n]) {
      const Path p = parse_path(w);
      const Path q = apply_f(p);
      if (invert_f(q) != p) return {false, "F^-1(F(p)) != p for " + w};
      by_height[oracle::top(w)].push_back(q);
    }
    for (auto& [h, img] : by_height) {
      std::sort(img.begin(), img.end());
      if (std::adjacent_find(img.begin(), img.end()) != img.end()) return {false, "F not injective"};
      const auto target = enumerate_progressive_culminating(2 * n + h + 1, h + 1);
      if (img != target) return {false, "F image mismatch at (n,h)=(" + std::to_string(n) + "," + std::to_string(h) + ")"};
      for (const Path& q : target)
        if (apply_f(invert_f(q)) != q) return {false, "F(F^-1(q)) != q for " + render_path(q)};
      f_checked += img.size();
    }
  }
  return {true, "n<=10, G on " + std::to_string(e.rushed[10].size()) + " paths at n=10, F on " + std::to_string(f_checked) + " paths"};
}

Outcome ac3() {
  const auto& e = exhaustive();
  const int N = 12;
  const PowerSeries total = total_series(N);
  std::size_t cells = 0;
  for (int n = 0; n <= N; ++n) {
    std::map<int, long> r, p;
    for (const auto& w : e.rushed[n]) ++r[oracle::top(w)];
    for (const auto& w : e.progressive[n]) ++p[oracle::top(w)];
    for (int h = 0; h <= n; ++h) {
      mpz_class rs = rushed_by_height_series(h, N)[n];
      mpz_class ps = h == 0 ? mpz_class(n == 0 ? 1 : 0) : progressive_by_height_series(h, N)[n];
      if (rs != r[h] || ps != p[h])
        return {false, "per-height series mismatch at (n,h)=(" + std::to_string(n) + "," + std::to_string(h) + ")"};
      ++cells;
    }
    if (total[n] != static_cast<long>(e.rushed[n].size())) return {false, "total series mismatch at n=" + std::to_string(n)};
  }
  return {true, std::to_string(cells) + " (n,h) cells and 13 totals agree"};
}

Outcome ac4() {
  const CountTable t = count_table(60);
  std::size_t checked = 0;
  double worst = 0;
  for (int n = 3; n <= 60; ++n)
    for (int h = 3; h <= n; ++h) {
      TrigCount c;
      try {
        c = rushed_trig_count(n, h, 256);
      } catch (const PrecisionError& err) {
        return {false, std::string("precision failure: ") + err.what()};
      }
      if (c.value != t.rushed(n, h - 1))
        return {false, "mismatch at (n,h)=(" + std::to_string(n) + "," + std::to_string(h) + ")"};
      worst = std::max(worst, c.residual);
      ++checked;
    }
  return {true, std::to_string(checked) + " points, 3<=h<=n<=60, max residual " + fmt(worst, 3)};
}

Outcome ac5() {
  const CountTable t = count_table(500);
  const BigFloat ln4 = log(BigFloat(4L, kAsymptoticPrecision));
  std::vector<double> xs, ys;
  for (int n = 100; n <= 500; ++n) {
    BigFloat y = log_of(t.rushed_total(n)) - BigFloat(static_cast<long>(n), kAsymptoticPrecision) * ln4 +
                 BigFloat(mpq_class(5, 6), kAsymptoticPrecision) * log(BigFloat(static_cast<long>(n), kAsymptoticPrecision));
    xs.push_back(std::cbrt(static_cast<double>(n)));
    ys.push_back(y.to_double());
  }
  const double k = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  const double nu = constants().nu.to_double();
  const bool slope_ok = std::abs(slope + nu) <= 0.1 * nu;
  const double e125 = std::abs((log_of(t.rushed_total(125)) - log_estimate(125)).to_double());
  const double e500 = std::abs((log_of(t.rushed_total(500)) - log_estimate(500)).to_double());
  return {slope_ok && e500 < e125, "slope " + fmt(slope, 5) + " vs -nu = " + fmt(-nu, 5) + ", |log error| " + fmt(e125) +
                                        " (n=125) -> " + fmt(e500) + " (n=500)"};
}

Outcome ac6() {
  const CountTable t = count_table(512);
  const double mu = constants().mu.to_double();
  std::vector<double> ratios;
  for (int n : {64, 216, 512}) ratios.push_back(height_stats(n, t).mean.get_d() / std::cbrt(static_cast<double>(n)));
  bool monotone = true;
  for (std::size_t i = 1; i < ratios.size(); ++i)
    monotone = monotone && std::abs(ratios[i] - mu) < std::abs(ratios[i - 1] - mu) &&
               (ratios[i] - ratios[i - 1]) * (mu - ratios[i - 1]) > 0;
  const double skew = height_stats(500, t).skewness;
  const bool skew_ok = std::abs(skew) < 0.5;
  return {monotone && skew_ok, "mean/n^(1/3) = " + fmt(ratios[0]) + ", " + fmt(ratios[1]) + ", " + fmt(ratios[2]) + " toward mu = " +
                                   fmt(mu) + (monotone ? " (monotone)" : " (NOT monotone)") + "; skewness at n=500 = " +
                                   fmt(skew) + (skew_ok ? " < 0.5" : " >= 0.5")};
}

constexpr std::uint64_t kDSeed = 20261014;
constexpr std::uint64_t kChiSeed = 8;

Outcome ac7() {
  for (int n = 0; n <= 12; ++n)
    if (d_empirical(n, DMode::Exhaustive).min_value() < 0) return {false, "negative drop at n=" + std::to_string(n)};
  const DDistribution d = d_empirical(500, DMode::Sampled, 100000, kDSeed);
  const double target0 = d_zero_probability();
  const bool ok = std::abs(d.mean() - 3.0) <= 0.3 && std::abs(d.probability(0) - target0) <= 0.03 && d.min_value() >= 0;
  return {ok, "n=500, 1e5 samples, seed " + std::to_string(kDSeed) + ": mean " + fmt(d.mean()) + " (target 3), P(D=0) " +
                  fmt(d.probability(0)) + " (target " + fmt(target0) + "); exhaustive n<=12 nonnegative"};
}

Outcome ac8() {
  const auto& e = exhaustive();
  const auto& cells = e.rushed[8];
  std::map<std::string, std::uint64_t> observed;
  for (const auto& w : cells) observed[w] = 0;
  const SamplerTables tables(8);
  RandomSource rng(kChiSeed);
  const std::uint64_t draws = 100000;
  for (std::uint64_t k = 0; k < draws; ++k) {
    const std::string w = render_path(sample_rushed(tables, rng));
    if (!oracle::rushed(w)) return {false, "sample is not rushed: " + w};
    ++observed[w];
  }
  if (observed.size() != cells.size()) return {false, "sample outside the enumerated set"};
  const double expected = static_cast<double>(draws) / static_cast<double>(cells.size());
  double chi2 = 0;
  for (auto [w, c] : observed) chi2 += (c - expected) * (c - expected) / expected;
  const boost::math::chi_squared dist(static_cast<double>(cells.size() - 1));
  const double p = boost::math::cdf(boost::math::complement(dist, chi2));
  return {p > 0.001, std::to_string(cells.size()) + " cells, 1e5 samples, seed " + std::to_string(kChiSeed) + ": chi2 = " +
                         fmt(chi2, 5) + ", p = " + fmt(p)};
}

Outcome ac9() {
  const CountTable t = count_table(9);
  for (int s = 1; s <= 9; ++s)
    if (count_acute_half_animals(s) != t.progressive_total(s).get_ui())
      return {false, "count mismatch at s=" + std::to_string(s)};
  std::vector<Site> fig{{0, 0}, {1, 0}, {1, 1}, {2, 1}, {3, 1}, {3, 2}, {4, 0}, {5, 0}, {5, 1}, {5, 2}, {5, 3}, {6, 1}};
  const SiteSet a = normalize(fig);
  if (!is_half_animal(a) || !is_acute(a)) return {false, "the 12-site example is rejected"};
  return {true, "s<=9 counts match p_s (p_9 = " + t.progressive_total(9).get_str() + "); 12-site example accepted"};
}

Outcome ac10() {
  const auto& e = exhaustive();
  std::string dyck, rushed, progressive;
  for (int n = 0; n <= 10; ++n) {
    for (const auto& w : e.all[n]) dyck += w + '\n';
    for (const auto& w : e.rushed[n]) rushed += w + '\n';
    for (const auto& w : e.progressive[n]) progressive += w + '\n';
  }
  const std::string bin = cli::binary();
  struct Trip {
    const char* name;
    std::string there, back;
    const std::string* corpus;
  };
  const Trip trips[] = {{"f", "f", "f-inv", &dyck}, {"g", "g", "g-inv", &rushed}, {"g-inv", "g-inv", "g", &progressive}};
  for (const auto& t : trips) {
    auto r = cli::run_shell(bin + " map -b " + t.there + " | " + bin + " map -b " + t.back, *t.corpus);
    if (r.status != 0 || !r.err.empty() || r.out != *t.corpus) return {false, std::string("round trip through ") + t.name + " is not the identity"};
  }
  auto v = cli::run("verify --max-n 8");
  if (v.status != 0) return {false, "verify --max-n 8 exited " + std::to_string(v.status)};
  return {true, "f|f-inv, g|g-inv, g-inv|g byte-identical on n<=10 corpora; verify --max-n 8 exits 0"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1 equinumerosity", ac1},     {"AC2 bijection soundness", ac2}, {"AC3 three-way counts", ac3},
      {"AC4 trigonometric sum", ac4},  {"AC5 stretched exponential", ac5}, {"AC6 height law", ac6},
      {"AC7 height-drop law", ac7},    {"AC8 sampler uniformity", ac8},  {"AC9 acute half-animals", ac9},
      {"AC10 CLI round trips", ac10},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.passed ? "PASS " : "FAIL ") << name << ": " << o.detail << " [" << fmt(secs, 3) << " s]" << std::endl;
    failures += !o.passed;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria pass" << std::endl;
  return failures == 0 ? 0 : 1;
}
