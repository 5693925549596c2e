#ifndef QSERIES_FORMAL_SERIES_HPP
#define QSERIES_FORMAL_SERIES_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qseries {

using Rational = mpq_class;

/// Truncated power series in one formal variable with exact rational
/// coefficients. A series of order N carries the coefficients of
/// q^0 ... q^{N-1}; everything at or beyond q^N is discarded.
///
/// Binary operations require both operands to have the same order and
/// throw OrderMismatch otherwise. Division requires an invertible divisor
/// (non-zero constant term) and throws NotInvertible otherwise.
class FormalSeries {
 public:
  /// Zero series of the given order (order >= 1).
  explicit FormalSeries(std::size_t order = 1);

  static FormalSeries constant(const Rational& c, std::size_t order);
  /// c * q^power mod q^order.
  static FormalSeries monomial(const Rational& c, std::size_t power, std::size_t order);
  /// The formal variable itself.
  static FormalSeries variable(std::size_t order) { return monomial(1, 1, order); }
  static FormalSeries from_coefficients(std::vector<Rational> coeffs);

  std::size_t order() const { return coeffs_.size(); }

  /// k-th coefficient; throws OrderExceeded when k >= order().
  const Rational& coeff(std::size_t k) const;
  void set_coeff(std::size_t k, Rational value);
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  /// Index of the first non-zero coefficient, empty for the zero series.
  std::optional<std::size_t> valuation() const;

  /// y with x*y = 1 mod q^N.
  FormalSeries inverse() const;

  FormalSeries& operator+=(const FormalSeries& rhs);
  FormalSeries& operator-=(const FormalSeries& rhs);
  FormalSeries& operator*=(const FormalSeries& rhs);
  FormalSeries& operator/=(const FormalSeries& rhs);
  FormalSeries& operator*=(const Rational& c);

  FormalSeries operator-() const;

  friend FormalSeries operator+(FormalSeries lhs, const FormalSeries& rhs) { return lhs += rhs; }
  friend FormalSeries operator-(FormalSeries lhs, const FormalSeries& rhs) { return lhs -= rhs; }
  friend FormalSeries operator*(const FormalSeries& lhs, const FormalSeries& rhs);
  friend FormalSeries operator/(const FormalSeries& lhs, const FormalSeries& rhs) {
    return lhs * rhs.inverse();
  }
  friend FormalSeries operator*(FormalSeries lhs, const Rational& c) { return lhs *= c; }
  friend FormalSeries operator*(const Rational& c, FormalSeries rhs) { return rhs *= c; }

  friend bool operator==(const FormalSeries& lhs, const FormalSeries& rhs);
  friend bool operator!=(const FormalSeries& lhs, const FormalSeries& rhs) { return !(lhs == rhs); }

  /// Human-readable form, e.g. "1 - 3*q + 5*q^3 + O(q^8)".
  std::string to_string() const;

 private:
  void check_order(const FormalSeries& other) const;

  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const FormalSeries& s);

/// (a; q)_inf expanded mod q^order for a rational constant a, with q the
/// formal variable: the product of (1 - a q^k) over k < order.
FormalSeries formal_qpoch_infinite(const Rational& a, std::size_t order);

/// Parses "p", "p/q" or a terminating decimal such as "-0.25" into a rational.
Rational parse_rational(const std::string& text);

}  // namespace qseries

#endif  // QSERIES_FORMAL_SERIES_HPP
