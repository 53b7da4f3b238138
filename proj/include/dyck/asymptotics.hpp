#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>

#include "dyck/bigfloat.hpp"
#include "dyck/enumeration.hpp"

namespace dyck {

/// Working precision for the asymptotic constants and log-domain comparisons
/// (about 77 decimal digits).
inline constexpr mpfr_prec_t kAsymptoticPrecision = 256;

struct AsymptoticConstants {
  BigFloat lambda;  // (4 pi)^{5/6} (ln 2)^{1/3} / sqrt 3
  BigFloat nu;      // 3 (pi ln 2 / 2)^{2/3}
  BigFloat mu;      // (2 pi^2 / ln 2)^{1/3}
  BigFloat sigma;   // (2 pi^2)^{1/6} / ((ln 2)^{2/3} sqrt 3)
};

AsymptoticConstants constants(mpfr_prec_t precision = kAsymptoticPrecision);

/// ln lambda + n ln 4 - nu n^{1/3} - (5/6) ln n: the log of the leading term
/// of r_n = p_n.
BigFloat log_estimate(int n, mpfr_prec_t precision = kAsymptoticPrecision);

/// Natural log of a positive big integer.
BigFloat log_of(const mpz_class& v, mpfr_prec_t precision = kAsymptoticPrecision);

struct HeightStats {
  int n = 0;
  mpq_class mean;
  mpq_class variance;
  mpq_class third_central_moment;
  /// (mean - mu n^{1/3}) / (sigma n^{1/6})
  double standardized_mean = 0;
  /// sqrt(variance) / (sigma n^{1/6})
  double standardized_sd = 0;
  double skewness = 0;
};

/// Exact moments of the height of a uniform path, given the counts by height.
HeightStats height_stats_from_row(int n, std::span<const mpz_class> counts_by_height);
/// Rushed paths of semilength n, from the exact table.
HeightStats height_stats(int n, const CountTable& table);
HeightStats progressive_height_stats(int n, const CountTable& table);

/// E[u^D] = (1/u)(1 + ((u-1)/(2-u)) 2^{u/(2-u)+1}) for 0 <= u < 2. At u = 0 the
/// value is the limit P(D = 0). Throws std::domain_error outside [0, 2).
double d_pgf(double u);
BigFloat d_pgf(const BigFloat& u);

/// Closed forms read off the pgf: P(D=0) = (1 - ln 2)/2 and E[D] = 3.
double d_zero_probability();
double d_mean();

/// Empirical or exact law of h(p) - h(G(p)) over uniform rushed p.
struct DDistribution {
  std::map<int, std::uint64_t> counts;
  std::uint64_t total = 0;

  double probability(int d) const;
  double mean() const;
  int min_value() const;
};

enum class DMode { Exhaustive, Sampled };

/// Exhaustive mode walks every rushed path (n <= 14). Sampled mode draws
/// `samples` uniform rushed paths with the given seed.
DDistribution d_empirical(int n, DMode mode, std::uint64_t samples = 0, std::uint64_t seed = 0);

/// CSV with header `d,probability`.
void write_distribution_csv(std::ostream& os, const DDistribution& dist);

}  // namespace dyck
