#pragma once

#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "overrank/checked.hpp"

namespace overrank {

class NonUnitConstantTerm : public std::domain_error {
 public:
  explicit NonUnitConstantTerm(Coeff c)
      : std::domain_error("series constant term " + std::to_string(c) + " is not a unit") {}
};

/**
 * Truncated formal power series in q with exact integer coefficients.
 *
 * Holds the coefficients of q^0 .. q^T, where T is the (inclusive)
 * truncation order. Binary operations return a series truncated at the
 * smaller of the two operand orders.
 */
class QSeries {
 public:
  /// The zero series at truncation order `trunc`.
  explicit QSeries(int trunc);
  /// Coefficients of q^0..q^{size-1}; `coeffs` must be non-empty.
  explicit QSeries(std::vector<Coeff> coeffs);
  QSeries(std::initializer_list<Coeff> coeffs, int trunc);

  static QSeries constant(Coeff c, int trunc);
  /// c * q^exponent, vanishing if exponent > trunc.
  static QSeries monomial(Coeff c, int exponent, int trunc);

  int trunc_order() const { return static_cast<int>(coeffs_.size()) - 1; }
  Coeff operator[](int exponent) const { return coeffs_.at(static_cast<std::size_t>(exponent)); }
  std::span<const Coeff> coeffs() const { return coeffs_; }

  /// Lowest exponent with a nonzero coefficient, or -1 for the zero series.
  int valuation() const;
  bool is_zero() const { return valuation() < 0; }

  /// Drops coefficients above `trunc`; `trunc` must not exceed trunc_order().
  QSeries truncated(int trunc) const;

  QSeries& operator+=(const QSeries& other);
  QSeries& operator-=(const QSeries& other);

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  std::vector<Coeff> coeffs_;
};

QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a);
QSeries operator*(const QSeries& a, const QSeries& b);
QSeries operator*(Coeff c, const QSeries& a);

/// Multiplicative inverse; throws NonUnitConstantTerm unless a[0] is +1 or -1.
QSeries inverse(const QSeries& a);

/// prod_{i=0}^{count-1} (1 - c q^{exponent + i*step}) truncated at `trunc`.
QSeries finite_pochhammer(Coeff c, int exponent, int step, int count, int trunc);

/// 1 / (1 - c q^exponent) expanded to `trunc`; exponent >= 1.
QSeries geometric(Coeff c, int exponent, int trunc);

/// q -> q^d. The result has order trunc_order()*d, or `trunc` if given and smaller.
QSeries substitute_power(const QSeries& a, int d);
QSeries substitute_power(const QSeries& a, int d, int trunc);

/// Multiplication by q^s; terms pushed past the truncation order are dropped.
QSeries shift(const QSeries& a, int s);

std::string to_string(const QSeries& a);

}  // namespace overrank
