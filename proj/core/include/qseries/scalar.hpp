#ifndef QSERIES_SCALAR_HPP
#define QSERIES_SCALAR_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <utility>

#include "qseries/formal_series.hpp"

namespace qseries {

using Complex = std::complex<double>;

// Everything mode-specific about a scalar lives here; the q-calculus
// templates only talk to a scalar through these hooks and the ring operators.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;

  static Complex zero_like(const Complex&) { return 0.0; }
  static Complex from_int(const Complex&, long n) { return static_cast<double>(n); }
  static Complex from_double(const Complex&, double x) { return x; }

  static bool is_zero(const Complex& x) { return x == 0.0; }
  static double magnitude(const Complex& x) { return std::abs(x); }

  // |term| < tol * max(1, |partial|)
  static bool negligible(const Complex& term, const Complex& partial, double tol) {
    return std::abs(term) < tol * std::max(1.0, std::abs(partial));
  }
  static bool near_zero(const Complex& x, double margin) { return std::abs(x) < margin; }
};

template <>
struct ScalarTraits<FormalSeries> {
  static constexpr bool exact = true;

  static FormalSeries zero_like(const FormalSeries& like) { return FormalSeries(like.order()); }
  static FormalSeries from_int(const FormalSeries& like, long n) {
    return FormalSeries::constant(n, like.order());
  }

  static bool is_zero(const FormalSeries& x) { return x.is_zero(); }
  // Only the constant term has a meaningful size in exact mode.
  static double magnitude(const FormalSeries& x) { return std::abs(x.coeff(0).get_d()); }

  static bool negligible(const FormalSeries& term, const FormalSeries&, double) {
    return term.is_zero();
  }
  // A factor is a pole in exact mode iff it cannot be inverted.
  static bool near_zero(const FormalSeries& x, double) { return sgn(x.coeff(0)) == 0; }
};

template <class S>
concept Scalar = requires(S x, const S& y) {
  { x + y } -> std::convertible_to<S>;
  { x - y } -> std::convertible_to<S>;
  { x * y } -> std::convertible_to<S>;
  { x / y } -> std::convertible_to<S>;
  { -x } -> std::convertible_to<S>;
  { ScalarTraits<S>::is_zero(y) } -> std::convertible_to<bool>;
};

template <Scalar S>
S zero_like(const S& like) {
  return ScalarTraits<S>::zero_like(like);
}

template <Scalar S>
S one_like(const S& like) {
  return ScalarTraits<S>::from_int(like, 1);
}

template <Scalar S>
S int_like(const S& like, long n) {
  return ScalarTraits<S>::from_int(like, n);
}

/// x^n by repeated squaring; negative n inverts first.
template <Scalar S>
S ipow(S x, long n) {
  if (n < 0) {
    x = one_like(x) / x;
    n = -n;
  }
  S result = one_like(x);
  while (n > 0) {
    if (n & 1) {
      result = result * x;
    }
    n >>= 1;
    if (n > 0) {
      x = x * x;
    }
  }
  return result;
}

}  // namespace qseries

#endif  // QSERIES_SCALAR_HPP
