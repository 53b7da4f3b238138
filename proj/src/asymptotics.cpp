#include "dyck/asymptotics.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "dyck/bijections.hpp"
#include "dyck/sampler.hpp"

namespace dyck {

namespace {

BigFloat rational(long num, long den, mpfr_prec_t precision) {
  return BigFloat(num, precision) / BigFloat(den, precision);
}

}  // namespace

AsymptoticConstants constants(mpfr_prec_t precision) {
  const BigFloat pi = BigFloat::pi(precision);
  const BigFloat ln2 = BigFloat::ln2(precision);
  const BigFloat sqrt3 = sqrt(BigFloat(3, precision));
  const BigFloat two_pi_sq = BigFloat(2, precision) * pi * pi;
  return AsymptoticConstants{
      pow(BigFloat(4, precision) * pi, rational(5, 6, precision)) * pow(ln2, rational(1, 3, precision)) / sqrt3,
      BigFloat(3, precision) * pow(pi * ln2 / BigFloat(2, precision), rational(2, 3, precision)),
      pow(two_pi_sq / ln2, rational(1, 3, precision)),
      pow(two_pi_sq, rational(1, 6, precision)) / (pow(ln2, rational(2, 3, precision)) * sqrt3),
  };
}

BigFloat log_of(const mpz_class& v, mpfr_prec_t precision) {
  if (v <= 0) throw std::domain_error("log_of: argument must be positive");
  return log(BigFloat(v, precision));
}

BigFloat log_estimate(int n, mpfr_prec_t precision) {
  if (n < 1) throw std::domain_error("log_estimate: n must be at least 1");
  const auto c = constants(precision);
  const BigFloat nn(n, precision);
  return log(c.lambda) + nn * log(BigFloat(4, precision)) - c.nu * pow(nn, rational(1, 3, precision)) -
         rational(5, 6, precision) * log(nn);
}

HeightStats height_stats_from_row(int n, std::span<const mpz_class> counts_by_height) {
  mpz_class total, s1, s2, s3;
  for (std::size_t h = 0; h < counts_by_height.size(); ++h) {
    const mpz_class& c = counts_by_height[h];
    const mpz_class hh = static_cast<unsigned long>(h);
    total += c;
    s1 += hh * c;
    s2 += hh * hh * c;
    s3 += hh * hh * hh * c;
  }
  if (total == 0) throw std::domain_error("height_stats: no paths of this semilength");

  HeightStats st;
  st.n = n;
  st.mean = mpq_class(s1, total);
  st.mean.canonicalize();
  mpq_class m2(s2, total), m3(s3, total);
  m2.canonicalize();
  m3.canonicalize();
  st.variance = m2 - st.mean * st.mean;
  st.third_central_moment = m3 - 3 * st.mean * m2 + 2 * st.mean * st.mean * st.mean;

  if (n >= 1) {
    constexpr mpfr_prec_t prec = kAsymptoticPrecision;
    const auto c = constants(prec);
    const BigFloat nn(n, prec);
    const BigFloat scale = c.sigma * pow(nn, rational(1, 6, prec));
    st.standardized_mean = ((BigFloat(st.mean, prec) - c.mu * pow(nn, rational(1, 3, prec))) / scale).to_double();
    st.standardized_sd = (sqrt(BigFloat(st.variance, prec)) / scale).to_double();
  }
  if (st.variance > 0) {
    constexpr mpfr_prec_t prec = kAsymptoticPrecision;
    const BigFloat var(st.variance, prec);
    st.skewness = (BigFloat(st.third_central_moment, prec) / (var * sqrt(var))).to_double();
  }
  return st;
}

HeightStats height_stats(int n, const CountTable& table) {
  if (n < 0 || n > table.max_n()) throw std::out_of_range("height_stats: n outside the table");
  return height_stats_from_row(n, table.rushed_row(n));
}

HeightStats progressive_height_stats(int n, const CountTable& table) {
  if (n < 0 || n > table.max_n()) throw std::out_of_range("progressive_height_stats: n outside the table");
  return height_stats_from_row(n, table.progressive_row(n));
}

// With g(u) = ((u-1)/(2-u)) 2^{u/(2-u)+1}, the pgf is (1 + g(u))/u and
// g(0) = -1, so u = 0 is a 0/0. Expanding at 0: g'(0) = 1/2 - (ln 2)/2, which
// is the limit P(D = 0). Near 0 the cancellation in 1 + g costs about
// log2(1/u) bits, which the evaluation precision absorbs.
BigFloat d_pgf(const BigFloat& u) {
  const mpfr_prec_t base = u.precision();
  if (mpfr_sgn(u.get()) < 0 || mpfr_cmp_si(u.get(), 2) >= 0) throw std::domain_error("d_pgf: u must lie in [0, 2)");
  if (mpfr_zero_p(u.get())) {
    return (BigFloat(1, base) - BigFloat::ln2(base)) / BigFloat(2, base);
  }
  const long exp2 = mpfr_get_exp(u.get());
  const mpfr_prec_t prec = base + (exp2 < 0 ? -exp2 : 0) + 16;
  BigFloat x(prec);
  mpfr_set(x.get(), u.get(), MPFR_RNDN);
  const BigFloat one(1, prec), two(2, prec);
  const BigFloat g = (x - one) / (two - x) * pow(two, x / (two - x) + one);
  BigFloat out = (one + g) / x;
  mpfr_prec_round(out.get(), base, MPFR_RNDN);
  return out;
}

double d_pgf(double u) {
  if (!(u >= 0.0 && u < 2.0)) throw std::domain_error("d_pgf: u must lie in [0, 2)");
  return d_pgf(BigFloat(u, 128)).to_double();
}

double d_zero_probability() { return (1.0 - std::log(2.0)) / 2.0; }

// pgf'(1) = g'(1) - (1 + g(1)) = 4 - 1
double d_mean() { return 3.0; }

double DDistribution::probability(int d) const {
  auto it = counts.find(d);
  return it == counts.end() || total == 0 ? 0.0 : static_cast<double>(it->second) / static_cast<double>(total);
}

double DDistribution::mean() const {
  if (total == 0) return 0.0;
  long double acc = 0;
  for (auto [d, c] : counts) acc += static_cast<long double>(d) * static_cast<long double>(c);
  return static_cast<double>(acc / static_cast<long double>(total));
}

int DDistribution::min_value() const {
  if (counts.empty()) throw std::logic_error("DDistribution: empty");
  return counts.begin()->first;
}

DDistribution d_empirical(int n, DMode mode, std::uint64_t samples, std::uint64_t seed) {
  DDistribution dist;
  auto record = [&dist](const Path& p) {
    ++dist.counts[max_height(p) - max_height(apply_g(p))];
    ++dist.total;
  };
  if (mode == DMode::Exhaustive) {
    if (n < 0 || n > 14) throw std::invalid_argument("d_empirical: exhaustive mode requires 0 <= n <= 14");
    for_each_dyck(n, [&](const Path& p) {
      if (is_rushed(p)) record(p);
    });
    return dist;
  }
  if (n < 1) throw std::invalid_argument("d_empirical: sampled mode requires n >= 1");
  const SamplerTables tables(n);
  RandomSource rng(seed);
  for (std::uint64_t k = 0; k < samples; ++k) record(sample_rushed(tables, rng));
  return dist;
}

void write_distribution_csv(std::ostream& os, const DDistribution& dist) {
  os << "d,probability\n";
  char buf[64];
  for (auto [d, c] : dist.counts) {
    std::snprintf(buf, sizeof buf, "%.17g", static_cast<double>(c) / static_cast<double>(dist.total));
    os << d << ',' << buf << '\n';
  }
}

}  // namespace dyck
