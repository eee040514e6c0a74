#include "overrank/series.hpp"

#include <algorithm>
#include <sstream>

namespace overrank {

namespace {

void require_order(int trunc) {
  if (trunc < 0) throw std::invalid_argument("truncation order must be nonnegative");
}

}  // namespace

QSeries::QSeries(int trunc) {
  require_order(trunc);
  coeffs_.assign(static_cast<std::size_t>(trunc) + 1, 0);
}

QSeries::QSeries(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("QSeries needs at least the constant coefficient");
}

QSeries::QSeries(std::initializer_list<Coeff> coeffs, int trunc) : QSeries(trunc) {
  std::size_t i = 0;
  for (Coeff c : coeffs) {
    if (i >= coeffs_.size()) break;
    coeffs_[i++] = c;
  }
}

QSeries QSeries::constant(Coeff c, int trunc) {
  QSeries r(trunc);
  r.coeffs_[0] = c;
  return r;
}

QSeries QSeries::monomial(Coeff c, int exponent, int trunc) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  QSeries r(trunc);
  if (exponent <= trunc) r.coeffs_[static_cast<std::size_t>(exponent)] = c;
  return r;
}

int QSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return -1;
}

QSeries QSeries::truncated(int trunc) const {
  require_order(trunc);
  if (trunc > trunc_order()) throw std::invalid_argument("cannot raise truncation order");
  return QSeries(std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() + trunc + 1));
}

QSeries& QSeries::operator+=(const QSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], other.coeffs_[i]);
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_sub(coeffs_[i], other.coeffs_[i]);
  return *this;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  QSeries r = a;
  r += b;
  return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  QSeries r = a;
  r -= b;
  return r;
}

QSeries operator-(const QSeries& a) { return QSeries(a.trunc_order()) - a; }

QSeries operator*(Coeff c, const QSeries& a) {
  std::vector<Coeff> out(a.coeffs().begin(), a.coeffs().end());
  for (Coeff& x : out) x = checked_mul(c, x);
  return QSeries(std::move(out));
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const int trunc = std::min(a.trunc_order(), b.trunc_order());
  std::vector<Coeff> out(static_cast<std::size_t>(trunc) + 1, 0);
  auto ac = a.coeffs();
  auto bc = b.coeffs();
  for (int i = 0; i <= trunc; ++i) {
    if (ac[i] == 0) continue;
    for (int j = 0; i + j <= trunc; ++j) {
      if (bc[j] == 0) continue;
      out[i + j] = checked_add(out[i + j], checked_mul(ac[i], bc[j]));
    }
  }
  return QSeries(std::move(out));
}

QSeries inverse(const QSeries& a) {
  const Coeff a0 = a[0];
  if (a0 != 1 && a0 != -1) throw NonUnitConstantTerm(a0);
  const int trunc = a.trunc_order();
  std::vector<Coeff> r(static_cast<std::size_t>(trunc) + 1, 0);
  // a0 is its own inverse, so r_n = -a0 * sum_{i=1}^{n} a_i r_{n-i}.
  r[0] = a0;
  for (int n = 1; n <= trunc; ++n) {
    Coeff acc = 0;
    for (int i = 1; i <= n; ++i) {
      if (a[i] == 0) continue;
      acc = checked_add(acc, checked_mul(a[i], r[n - i]));
    }
    r[n] = checked_mul(-a0, acc);
  }
  return QSeries(std::move(r));
}

QSeries finite_pochhammer(Coeff c, int exponent, int step, int count, int trunc) {
  if (exponent < 0 || step < 1 || count < 0) throw std::invalid_argument("bad pochhammer parameters");
  QSeries r = QSeries::constant(1, trunc);
  // Multiply in place by (1 - c q^e) from the top down.
  std::vector<Coeff> buf(r.coeffs().begin(), r.coeffs().end());
  for (int i = 0; i < count; ++i) {
    const long e = exponent + static_cast<long>(i) * step;
    if (e > trunc) break;
    for (int n = trunc; n >= e; --n) buf[n] = checked_sub(buf[n], checked_mul(c, buf[n - e]));
  }
  return QSeries(std::move(buf));
}

QSeries geometric(Coeff c, int exponent, int trunc) {
  if (exponent < 1) throw std::invalid_argument("geometric series needs a positive exponent");
  QSeries r(trunc);
  std::vector<Coeff> buf(r.coeffs().begin(), r.coeffs().end());
  Coeff power = 1;
  for (int n = 0; n <= trunc; n += exponent) {
    buf[n] = power;
    if (n + exponent <= trunc) power = checked_mul(power, c);
  }
  return QSeries(std::move(buf));
}

QSeries substitute_power(const QSeries& a, int d) { return substitute_power(a, d, a.trunc_order() * d); }

QSeries substitute_power(const QSeries& a, int d, int trunc) {
  if (d < 1) throw std::invalid_argument("substitution power must be positive");
  trunc = std::min(trunc, a.trunc_order() * d);
  std::vector<Coeff> out(static_cast<std::size_t>(trunc) + 1, 0);
  for (int i = 0; i * d <= trunc; ++i) out[i * d] = a[i];
  return QSeries(std::move(out));
}

QSeries shift(const QSeries& a, int s) {
  if (s < 0) throw std::invalid_argument("negative shift");
  const int trunc = a.trunc_order();
  std::vector<Coeff> out(static_cast<std::size_t>(trunc) + 1, 0);
  for (int i = 0; i + s <= trunc; ++i) out[i + s] = a[i];
  return QSeries(std::move(out));
}

std::string to_string(const QSeries& a) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= a.trunc_order(); ++i) {
    const Coeff c = a[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const Coeff mag = c < 0 ? -c : c;
    if (mag != 1 || i == 0) os << mag;
    if (i > 0) os << (mag != 1 ? "*" : "") << "q" << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  if (first) os << "0";
  os << " + O(q^" << a.trunc_order() + 1 << ")";
  return os.str();
}

}  // namespace overrank
