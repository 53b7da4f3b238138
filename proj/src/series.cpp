#include "dyck/series.hpp"

#include <algorithm>
#include <sstream>

namespace dyck {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial IntPolynomial::constant(long c) { return IntPolynomial({mpz_class(c)}); }

IntPolynomial IntPolynomial::monomial(long c, std::size_t k) {
  std::vector<mpz_class> v(k + 1);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial IntPolynomial::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<mpz_class> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) mpz_addmul(v[i + k].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[k].get_mpz_t());
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const mpz_class& c = coeffs_[k];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << "z";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1), order_(order) {}

PowerSeries::PowerSeries(std::vector<mpz_class> coefficients, std::size_t order)
    : coeffs_(std::move(coefficients)), order_(order) {
  coeffs_.resize(order + 1);
}

PowerSeries PowerSeries::from_polynomial(const IntPolynomial& p, std::size_t order) {
  PowerSeries s(order);
  for (std::size_t k = 0; k <= order && k < p.coefficients().size(); ++k) s.coeffs_[k] = p.coefficients()[k];
  return s;
}

PowerSeries PowerSeries::one(std::size_t order) {
  PowerSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

void PowerSeries::check_order(const PowerSeries& rhs, const char* op) const {
  if (rhs.order_ != order_)
    throw SeriesError(std::string("PowerSeries ") + op + ": order mismatch (" + std::to_string(order_) + " vs " +
                      std::to_string(rhs.order_) + ")");
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
  check_order(rhs, "+");
  for (std::size_t k = 0; k <= order_; ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
  check_order(rhs, "-");
  for (std::size_t k = 0; k <= order_; ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const PowerSeries& rhs) {
  check_order(rhs, "*");
  std::vector<mpz_class> out(order_ + 1);
  for (std::size_t i = 0; i <= order_; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t k = 0; i + k <= order_; ++k)
      mpz_addmul(out[i + k].get_mpz_t(), coeffs_[i].get_mpz_t(), rhs.coeffs_[k].get_mpz_t());
  }
  coeffs_ = std::move(out);
  return *this;
}

PowerSeries PowerSeries::shifted(std::size_t k) const {
  PowerSeries s(order_);
  for (std::size_t i = 0; i + k <= order_; ++i) s.coeffs_[i + k] = coeffs_[i];
  return s;
}

PowerSeries PowerSeries::divided_by(const PowerSeries& divisor) const {
  check_order(divisor, "/");
  if (divisor.coeffs_[0] != 1) throw SeriesError("PowerSeries /: divisor must have constant term 1");
  // solve divisor * out = this coefficient by coefficient
  std::vector<mpz_class> out(order_ + 1);
  for (std::size_t n = 0; n <= order_; ++n) {
    mpz_class acc = coeffs_[n];
    for (std::size_t k = 1; k <= n; ++k)
      if (divisor.coeffs_[k] != 0) mpz_submul(acc.get_mpz_t(), divisor.coeffs_[k].get_mpz_t(), out[n - k].get_mpz_t());
    out[n] = std::move(acc);
  }
  return PowerSeries(std::move(out), order_);
}

std::vector<mpz_class> shifted_reciprocal(const IntPolynomial& divisor, std::size_t shift, std::size_t order) {
  if (divisor.is_zero() || divisor[0] != 1) throw SeriesError("shifted_reciprocal: divisor must have constant term 1");
  std::vector<mpz_class> out(order + 1);
  if (shift > order) return out;
  const auto& d = divisor.coefficients();
  const std::size_t len = order - shift + 1;
  std::vector<mpz_class> inv(len);
  inv[0] = 1;
  for (std::size_t n = 1; n < len; ++n) {
    mpz_class acc;
    const std::size_t top = std::min(n, d.size() - 1);
    for (std::size_t k = 1; k <= top; ++k) mpz_submul(acc.get_mpz_t(), d[k].get_mpz_t(), inv[n - k].get_mpz_t());
    inv[n] = std::move(acc);
  }
  std::move(inv.begin(), inv.end(), out.begin() + static_cast<std::ptrdiff_t>(shift));
  return out;
}

}  // namespace dyck
