#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "dyck/series.hpp"

namespace dyck {

/// F_0 = F_1 = 1, F_h = F_{h-1} - z F_{h-2}.
IntPolynomial fibonacci_polynomial(int h);

/// q with q = z(1+q)^2, truncated at `order`; 1+q is the Catalan series.
PowerSeries catalan_series(std::size_t order);

/// z^h / F_h: coefficient of z^n counts rushed paths of semilength n and
/// height exactly h. The variable marks semilength.
PowerSeries rushed_by_height_series(int h, std::size_t order);

/// z^{2h-1} / (F_{h-1} F_h F_{h+1}) for h >= 1: progressive paths of height h.
PowerSeries progressive_by_height_series(int h, std::size_t order);

/// sum_{h>=0} (q/(1+q))^h (1-q)/(1-q^{h+1}), exact up to `order`.
PowerSeries total_series(std::size_t order);

/// Exact counts r[n,h] (rushed) and p[n,h] (progressive) for n <= max_n.
class CountTable {
 public:
  CountTable(std::vector<std::vector<mpz_class>> rushed, std::vector<std::vector<mpz_class>> progressive);

  int max_n() const noexcept { return static_cast<int>(rushed_.size()) - 1; }
  /// Zero for h > n.
  const mpz_class& rushed(int n, int h) const;
  const mpz_class& progressive(int n, int h) const;
  const mpz_class& rushed_total(int n) const { return rushed_totals_.at(static_cast<std::size_t>(n)); }
  const mpz_class& progressive_total(int n) const { return progressive_totals_.at(static_cast<std::size_t>(n)); }
  /// Entries h = 0..n.
  std::span<const mpz_class> rushed_row(int n) const { return rushed_.at(static_cast<std::size_t>(n)); }
  std::span<const mpz_class> progressive_row(int n) const { return progressive_.at(static_cast<std::size_t>(n)); }

 private:
  std::vector<std::vector<mpz_class>> rushed_, progressive_;
  std::vector<mpz_class> rushed_totals_, progressive_totals_;
};

/// Builds both tables from the per-height series. Throws std::logic_error if
/// the rushed and progressive row sums ever disagree.
CountTable count_table(int max_n);

/// r[n, 0..n] only, from the rushed series.
std::vector<mpz_class> rushed_height_row(int n);

/// CSV with header `n,h,rushed,progressive`, rows sorted by (n, h), h <= n.
void write_count_table_csv(std::ostream& os, const CountTable& table);

class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TrigCount {
  mpz_class value;
  double residual = 0;     // |sum - value| before rounding
  double error_bound = 0;  // a priori bound on the rounding error of the sum
  mpfr_prec_t precision = 0;
};

/// Number of rushed paths of semilength n and height h-1 via the alternating
/// trigonometric sum, evaluated at `precision` bits and rounded. Throws
/// PrecisionError when the error bound or the residual exceeds 1/4. The sum is empty for h <= 2,
/// so the result there is 0 regardless of the true count.
TrigCount rushed_trig_count(int n, int h, mpfr_prec_t precision);

/// Starts at `precision` and doubles until the residual is below 1/4.
TrigCount rushed_trig_count_adaptive(int n, int h, mpfr_prec_t precision = 256, mpfr_prec_t max_precision = 1 << 16);

}  // namespace dyck
