#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dyck {

/// Polynomial with arbitrary-precision integer coefficients, index = degree.
/// Always canonical: no trailing zero coefficient, zero is the empty vector.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coefficients);

  static IntPolynomial constant(long c);
  /// c * z^k
  static IntPolynomial monomial(long c, std::size_t k);

  const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  mpz_class operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : mpz_class(0); }

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  /// Multiplies by z^k.
  IntPolynomial shifted(std::size_t k) const;

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  bool operator==(const IntPolynomial&) const = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

class SeriesError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Truncated power series: coefficients of z^0 .. z^order, all exact. Binary
/// operations require equal orders; nothing widens precision implicitly.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order);
  PowerSeries(std::vector<mpz_class> coefficients, std::size_t order);
  static PowerSeries from_polynomial(const IntPolynomial& p, std::size_t order);
  static PowerSeries one(std::size_t order);

  std::size_t order() const noexcept { return order_; }
  const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }
  const mpz_class& operator[](std::size_t k) const { return coeffs_.at(k); }
  mpz_class& operator[](std::size_t k) { return coeffs_.at(k); }

  PowerSeries& operator+=(const PowerSeries& rhs);
  PowerSeries& operator-=(const PowerSeries& rhs);
  PowerSeries& operator*=(const PowerSeries& rhs);
  /// Multiplies by z^k, dropping terms beyond the order.
  PowerSeries shifted(std::size_t k) const;
  /// Exact quotient; the divisor must have constant term 1.
  PowerSeries divided_by(const PowerSeries& divisor) const;

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const PowerSeries& b) { return a *= b; }
  bool operator==(const PowerSeries&) const = default;

 private:
  void check_order(const PowerSeries& rhs, const char* op) const;
  std::vector<mpz_class> coeffs_;
  std::size_t order_;
};

/// Coefficients of z^0..z^order of z^shift / divisor, where divisor has
/// constant term 1. Works directly off the linear recurrence, so it costs
/// O(order * deg(divisor)).
std::vector<mpz_class> shifted_reciprocal(const IntPolynomial& divisor, std::size_t shift, std::size_t order);

}  // namespace dyck
