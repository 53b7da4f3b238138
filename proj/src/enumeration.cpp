#include "dyck/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "dyck/bigfloat.hpp"

namespace dyck {

namespace {

// F_0..F_top in one pass.
std::vector<IntPolynomial> fibonacci_polynomials(int top) {
  std::vector<IntPolynomial> f;
  f.reserve(static_cast<std::size_t>(std::max(top, 1)) + 1);
  f.push_back(IntPolynomial::constant(1));
  f.push_back(IntPolynomial::constant(1));
  for (int h = 2; h <= top; ++h) {
    const auto k = static_cast<std::size_t>(h);
    f.push_back(f[k - 1] - f[k - 2].shifted(1));
  }
  f.resize(static_cast<std::size_t>(std::max(top, 0)) + 1);
  return f;
}

std::size_t as_size(int v) { return static_cast<std::size_t>(v); }

}  // namespace

IntPolynomial fibonacci_polynomial(int h) {
  if (h < 0) throw std::invalid_argument("fibonacci_polynomial: h must be nonnegative");
  return fibonacci_polynomials(h).back();
}

PowerSeries catalan_series(std::size_t order) {
  // c = 1 + q satisfies c = 1 + z c^2
  std::vector<mpz_class> c(order + 1);
  c[0] = 1;
  for (std::size_t n = 1; n <= order; ++n)
    for (std::size_t i = 0; i < n; ++i) mpz_addmul(c[n].get_mpz_t(), c[i].get_mpz_t(), c[n - 1 - i].get_mpz_t());
  c[0] = 0;
  return PowerSeries(std::move(c), order);
}

PowerSeries rushed_by_height_series(int h, std::size_t order) {
  if (h < 0) throw std::invalid_argument("rushed_by_height_series: h must be nonnegative");
  return PowerSeries(shifted_reciprocal(fibonacci_polynomial(h), as_size(h), order), order);
}

PowerSeries progressive_by_height_series(int h, std::size_t order) {
  if (h < 1) throw std::invalid_argument("progressive_by_height_series: h must be at least 1");
  auto f = fibonacci_polynomials(h + 1);
  IntPolynomial denom = f[as_size(h - 1)] * f[as_size(h)] * f[as_size(h + 1)];
  return PowerSeries(shifted_reciprocal(denom, as_size(2 * h - 1), order), order);
}

PowerSeries total_series(std::size_t order) {
  const PowerSeries q = catalan_series(order);
  const PowerSeries one = PowerSeries::one(order);
  const PowerSeries ratio = (one + q).shifted(1);  // q/(1+q) = z(1+q)
  const PowerSeries numer = one - q;

  PowerSeries total(order);
  PowerSeries ratio_pow = one;
  PowerSeries q_pow = q;  // q^{h+1}
  for (std::size_t h = 0; h <= order; ++h) {
    total += (ratio_pow * numer).divided_by(one - q_pow);
    ratio_pow *= ratio;
    q_pow *= q;
  }
  return total;
}

CountTable::CountTable(std::vector<std::vector<mpz_class>> rushed, std::vector<std::vector<mpz_class>> progressive)
    : rushed_(std::move(rushed)), progressive_(std::move(progressive)) {
  if (rushed_.size() != progressive_.size()) throw std::invalid_argument("CountTable: row count mismatch");
  for (std::size_t n = 0; n < rushed_.size(); ++n) {
    if (rushed_[n].size() != n + 1 || progressive_[n].size() != n + 1)
      throw std::invalid_argument("CountTable: row " + std::to_string(n) + " must have n+1 entries");
    mpz_class r, p;
    for (std::size_t h = 0; h <= n; ++h) {
      if (rushed_[n][h] < 0 || progressive_[n][h] < 0) throw std::invalid_argument("CountTable: negative count");
      r += rushed_[n][h];
      p += progressive_[n][h];
    }
    if (r != p)
      throw std::logic_error("CountTable: rushed and progressive totals differ at n=" + std::to_string(n) + " (" +
                             r.get_str() + " vs " + p.get_str() + ")");
    rushed_totals_.push_back(std::move(r));
    progressive_totals_.push_back(std::move(p));
  }
}

namespace {
const mpz_class kZero = 0;
}

const mpz_class& CountTable::rushed(int n, int h) const {
  const auto& row = rushed_.at(as_size(n));
  return h < 0 || as_size(h) >= row.size() ? kZero : row[as_size(h)];
}

const mpz_class& CountTable::progressive(int n, int h) const {
  const auto& row = progressive_.at(as_size(n));
  return h < 0 || as_size(h) >= row.size() ? kZero : row[as_size(h)];
}

CountTable count_table(int max_n) {
  if (max_n < 0) throw std::invalid_argument("count_table: max_n must be nonnegative");
  const auto top = as_size(max_n);
  auto f = fibonacci_polynomials(max_n + 2);

  std::vector<std::vector<mpz_class>> r(top + 1), p(top + 1);
  for (std::size_t n = 0; n <= top; ++n) {
    r[n].resize(n + 1);
    p[n].resize(n + 1);
  }
  for (std::size_t h = 0; h <= top; ++h) {
    auto col = shifted_reciprocal(f[h], h, top);
    for (std::size_t n = h; n <= top; ++n) r[n][h] = std::move(col[n]);
  }
  // the empty path is the only progressive path of height 0
  p[0][0] = 1;
  for (std::size_t h = 1; 2 * h - 1 <= top; ++h) {
    auto col = shifted_reciprocal(f[h - 1] * f[h] * f[h + 1], 2 * h - 1, top);
    for (std::size_t n = 2 * h - 1; n <= top; ++n) p[n][h] = std::move(col[n]);
  }
  return CountTable(std::move(r), std::move(p));
}

std::vector<mpz_class> rushed_height_row(int n) {
  if (n < 0) throw std::invalid_argument("rushed_height_row: n must be nonnegative");
  const auto top = as_size(n);
  auto f = fibonacci_polynomials(n);
  std::vector<mpz_class> row(top + 1);
  for (std::size_t h = 0; h <= top; ++h) row[h] = shifted_reciprocal(f[h], h, top)[top];
  return row;
}

void write_count_table_csv(std::ostream& os, const CountTable& table) {
  os << "n,h,rushed,progressive\n";
  for (int n = 0; n <= table.max_n(); ++n)
    for (int h = 0; h <= n; ++h)
      os << n << ',' << h << ',' << table.rushed(n, h).get_str() << ',' << table.progressive(n, h).get_str() << '\n';
}

TrigCount rushed_trig_count(int n, int h, mpfr_prec_t precision) {
  if (n < 1 || h < 1) throw std::invalid_argument("rushed_trig_count: requires n >= 1 and h >= 1");
  const BigFloat pi = BigFloat::pi(precision);
  const BigFloat hh(h, precision);
  BigFloat sum(precision);
  for (int j = 1; j <= (h - 1) / 2; ++j) {
    BigFloat angle = pi * BigFloat(j, precision) / hh;
    BigFloat s = sin(angle);
    BigFloat term = s * s * pow(cos(angle), static_cast<long>(2 * n - h));
    if (j % 2 == 1)
      sum += term;
    else
      sum -= term;
  }
  // 4^{n+1} / (2^h h) = 2^{2n+2-h} / h
  BigFloat scale(1L, precision);
  mpfr_mul_2si(scale.get(), scale.get(), 2L * n + 2 - h, MPFR_RNDN);
  BigFloat value = scale * sum / hh;

  // Each term is at most 1 and carries a relative error of about (2n + 8)
  // ulps once the angle error is raised to the power 2n - h.
  const long terms = std::max(1, (h - 1) / 2);
  BigFloat bound(static_cast<long>(terms) * (2L * n + 8), precision);
  mpfr_mul_2si(bound.get(), bound.get(), 2L * n + 2 - h - precision, MPFR_RNDU);
  bound = bound / hh;

  TrigCount out;
  out.value = value.round();
  out.residual = abs(value - BigFloat(out.value, precision)).to_double();
  out.error_bound = bound.to_double();
  out.precision = precision;
  if (out.error_bound > 0.25)
    throw PrecisionError("rushed_trig_count: " + std::to_string(precision) + " bits cannot resolve the sum (n=" +
                         std::to_string(n) + ", h=" + std::to_string(h) + ")");
  if (out.residual > 0.25)
    throw PrecisionError("rushed_trig_count: residual " + std::to_string(out.residual) + " at " +
                         std::to_string(precision) + " bits (n=" + std::to_string(n) + ", h=" + std::to_string(h) + ")");
  return out;
}

TrigCount rushed_trig_count_adaptive(int n, int h, mpfr_prec_t precision, mpfr_prec_t max_precision) {
  for (;;) {
    try {
      return rushed_trig_count(n, h, precision);
    } catch (const PrecisionError&) {
      if (precision * 2 > max_precision) throw;
      precision *= 2;
    }
  }
}

}  // namespace dyck
