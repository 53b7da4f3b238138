#include "dyck/bigfloat.hpp"

#include <algorithm>
#include <vector>

namespace dyck {

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(double v, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_d(value_, v, MPFR_RNDN);
}

BigFloat::BigFloat(long v, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const mpz_class& v, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, v.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& v, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, v.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::pi(mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::ln2(mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_const_log2(r.value_, MPFR_RNDN);
  return r;
}

mpz_class BigFloat::round() const {
  BigFloat r(*this);
  mpfr_round(r.value_, value_);
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), r.value_, MPFR_RNDN);
  return out;
}

std::string BigFloat::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  int n = mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, value_);
  if (n >= static_cast<int>(buf.size())) {
    buf.resize(static_cast<std::size_t>(n) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, value_);
  }
  return std::string(buf.data());
}

namespace {

// Widens lhs to cover rhs precision before an in-place operation.
void widen(mpfr_ptr lhs, mpfr_srcptr rhs) {
  if (mpfr_get_prec(rhs) > mpfr_get_prec(lhs)) mpfr_prec_round(lhs, mpfr_get_prec(rhs), MPFR_RNDN);
}

}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  widen(value_, rhs.value_);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  widen(value_, rhs.value_);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  widen(value_, rhs.value_);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  widen(value_, rhs.value_);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

#define DYCK_UNARY(name, fn)             \
  BigFloat name(const BigFloat& x) {     \
    BigFloat r(x.precision());           \
    fn(r.get(), x.get(), MPFR_RNDN);     \
    return r;                            \
  }

DYCK_UNARY(log, mpfr_log)
DYCK_UNARY(exp, mpfr_exp)
DYCK_UNARY(sqrt, mpfr_sqrt)
DYCK_UNARY(sin, mpfr_sin)
DYCK_UNARY(cos, mpfr_cos)
DYCK_UNARY(abs, mpfr_abs)

#undef DYCK_UNARY

BigFloat pow(const BigFloat& x, const BigFloat& y) {
  BigFloat r(std::max(x.precision(), y.precision()));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& x, long k) {
  BigFloat r(x.precision());
  mpfr_pow_si(r.get(), x.get(), k, MPFR_RNDN);
  return r;
}

}  // namespace dyck
