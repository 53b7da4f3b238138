#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace dyck {

/// Owning wrapper over an MPFR value. Precision is fixed at construction,
/// results of binary operators take the larger operand precision.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits = 256);
  BigFloat(double v, mpfr_prec_t bits);
  BigFloat(long v, mpfr_prec_t bits);
  BigFloat(int v, mpfr_prec_t bits) : BigFloat(static_cast<long>(v), bits) {}
  BigFloat(const mpz_class& v, mpfr_prec_t bits);
  BigFloat(const mpq_class& v, mpfr_prec_t bits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat pi(mpfr_prec_t bits);
  static BigFloat ln2(mpfr_prec_t bits);

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Nearest integer, ties away from zero.
  mpz_class round() const;
  /// Fixed-point decimal rendering with `digits` significant digits.
  std::string to_string(int digits) const;

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);
  BigFloat operator-() const;

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }

 private:
  mpfr_t value_;
};

BigFloat log(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat abs(const BigFloat& x);
BigFloat pow(const BigFloat& x, const BigFloat& y);
BigFloat pow(const BigFloat& x, long k);

}  // namespace dyck
