#ifndef QSERIES_QCORE_HPP
#define QSERIES_QCORE_HPP

// Scalar-generic q-calculus primitives. Every template here works for both
// Complex (numeric mode) and FormalSeries (exact mode, q the formal variable
// or a rational multiple of it).

#include <cmath>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "qseries/errors.hpp"
#include "qseries/parameter_point.hpp"
#include "qseries/scalar.hpp"
#include "qseries/truncation.hpp"

namespace qseries {

enum class FactorRole { numerator, denominator };

namespace detail {

inline bool finite(const Complex& x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); }
inline bool finite(const FormalSeries&) { return true; }

template <Scalar S>
void require_base(const S& q) {
  if constexpr (ScalarTraits<S>::exact) {
    if (sgn(q.coeff(0)) != 0) {
      throw NonConvergent("exact mode needs a base with zero constant term");
    }
  } else {
    if (!(std::abs(q) < 1.0)) {
      throw NonConvergent("|q| must be < 1, got " + std::to_string(std::abs(q)));
    }
  }
}

template <Scalar S>
void check_factor(const S& factor, FactorRole role, const TruncationPolicy& policy) {
  if (role == FactorRole::denominator && ScalarTraits<S>::near_zero(factor, policy.pole_margin)) {
    throw PoleError("denominator factor within pole margin of zero");
  }
}

}  // namespace detail

/// Sums next(0), next(1), ... until three consecutive terms are negligible
/// relative to max(1, |partial sum|). next is called with increasing n and
/// may keep state between calls.
template <Scalar S, class Next>
S sum_series(const S& like, const TruncationPolicy& policy, Next&& next) {
  S partial = zero_like(like);
  int small_run = 0;
  for (int n = 0; n < policy.max_terms; ++n) {
    S term = next(n);
    if (!detail::finite(term)) {
      throw NonConvergent("series term " + std::to_string(n) + " is not finite");
    }
    partial = partial + term;
    if (ScalarTraits<S>::negligible(term, partial, policy.tail_tol)) {
      if (++small_run == 3) {
        return partial;
      }
    } else {
      small_run = 0;
    }
  }
  throw NonConvergent("series did not converge within " + std::to_string(policy.max_terms) +
                      " terms");
}

/// (a; q)_n, the n-factor product; n = 0 gives 1.
template <Scalar S>
S qpoch(const S& a, const S& q, long n) {
  S result = one_like(q);
  S aqk = a;
  for (long k = 0; k < n; ++k) {
    result = result * (one_like(q) - aqk);
    aqk = aqk * q;
  }
  return result;
}

/// prod_{k<n} (y - x q^k), i.e. (x/y; q)_n y^n without dividing by y.
template <Scalar S>
S qpoch_scaled(const S& x, const S& y, const S& q, long n) {
  S result = one_like(q);
  S xqk = x;
  for (long k = 0; k < n; ++k) {
    result = result * (y - xqk);
    xqk = xqk * q;
  }
  return result;
}

/// (a; q)_inf. Numeric mode stops at the first K with |a q^K| <= 1/2 and
/// 2|a||q|^K / (1 - |q|) < tail_tol; exact mode stops once a q^K vanishes
/// modulo the series order.
template <Scalar S>
S qpoch_infinite(const S& a, const S& q, const TruncationPolicy& policy,
                 FactorRole role = FactorRole::numerator) {
  detail::require_base(q);
  S result = one_like(q);
  S aqk = a;
  for (int k = 0; k < policy.max_factors; ++k) {
    if constexpr (ScalarTraits<S>::exact) {
      if (aqk.is_zero()) {
        return result;
      }
    } else {
      const double m = std::abs(aqk);
      if (m <= 0.5 && 2.0 * m / (1.0 - std::abs(q)) < policy.tail_tol) {
        return result;
      }
    }
    S factor = one_like(q) - aqk;
    detail::check_factor(factor, role, policy);
    result = result * factor;
    aqk = aqk * q;
  }
  throw NonConvergent("infinite product needs more than " + std::to_string(policy.max_factors) +
                      " factors");
}

/// (a_1, ..., a_m; q)_n
template <Scalar S>
S qpoch_multi(std::span<const S> as, const S& q, long n) {
  S result = one_like(q);
  for (const S& a : as) {
    result = result * qpoch(a, q, n);
  }
  return result;
}

/// (a_1, ..., a_m; q)_inf
template <Scalar S>
S qpoch_multi_infinite(std::span<const S> as, const S& q, const TruncationPolicy& policy,
                       FactorRole role = FactorRole::numerator) {
  S result = one_like(q);
  for (const S& a : as) {
    result = result * qpoch_infinite(a, q, policy, role);
  }
  return result;
}

/// (num...; q)_inf / (den...; q)_inf with pole checks on the denominator.
template <Scalar S>
S qpoch_ratio(std::initializer_list<S> num, std::initializer_list<S> den, const S& q,
              const TruncationPolicy& policy) {
  S top = qpoch_multi_infinite(std::span<const S>(num.begin(), num.size()), q, policy);
  S bottom = qpoch_multi_infinite(std::span<const S>(den.begin(), den.size()), q, policy,
                                  FactorRole::denominator);
  return top / bottom;
}

/// Gaussian binomial coefficient [n choose k]_q.
template <Scalar S>
S qbinomial(long n, long k, const S& q) {
  if (k < 0 || n < 0 || k > n) {
    throw DomainError("q-binomial needs 0 <= k <= n, got n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
  }
  if (k > n - k) {
    k = n - k;
  }
  // prod_{j<k} (1 - q^{n-j}) / (1 - q^{j+1}); every partial quotient is itself
  // a q-binomial, hence a polynomial in q.
  S result = one_like(q);
  for (long j = 0; j < k; ++j) {
    result = result * (one_like(q) - ipow(q, n - j));
    result = result / (one_like(q) - ipow(q, j + 1));
  }
  return result;
}

/// r phi s (num; den; q, z) with the ((-1)^n q^{n(n-1)/2})^{1+s-r} normalizer.
/// Shapes with r > s + 1 are rejected.
template <Scalar S>
S phi_series(std::span<const S> num, std::span<const S> den, const S& q, const S& z,
             const TruncationPolicy& policy) {
  const long r = static_cast<long>(num.size());
  const long s = static_cast<long>(den.size());
  if (r > s + 1) {
    throw DomainError("phi series with " + std::to_string(r) + " numerator and " +
                      std::to_string(s) + " denominator parameters diverges");
  }
  detail::require_base(q);
  const long shift = 1 + s - r;
  S term = one_like(q);
  S qn = one_like(q);
  return sum_series(q, policy, [&](int n) {
    if (n > 0) {
      // advance term from index n-1 to n; qn holds q^{n-1}
      S ratio = z;
      for (const S& a : num) {
        ratio = ratio * (one_like(q) - a * qn);
      }
      S denom = one_like(q) - qn * q;
      for (const S& b : den) {
        S factor = one_like(q) - b * qn;
        detail::check_factor(factor, FactorRole::denominator, policy);
        denom = denom * factor;
      }
      for (long e = 0; e < shift; ++e) {
        ratio = -(ratio * qn);
      }
      term = term * ratio / denom;
      qn = qn * q;
    }
    return term;
  });
}

template <Scalar S>
S phi_series(std::initializer_list<S> num, std::initializer_list<S> den, const S& q, const S& z,
             const TruncationPolicy& policy) {
  return phi_series(std::span<const S>(num.begin(), num.size()),
                    std::span<const S>(den.begin(), den.size()), q, z, policy);
}

/// Delta(u, v) = v (q, u/v, qv/u; q)_inf.
template <Scalar S>
S delta_theta(const S& u, const S& v, const S& q, const TruncationPolicy& policy) {
  if (ScalarTraits<S>::is_zero(u) || ScalarTraits<S>::is_zero(v)) {
    throw DomainError("Delta(u, v) needs uv != 0");
  }
  return v * qpoch_infinite(q, q, policy) * qpoch_infinite(u / v, q, policy) *
         qpoch_infinite(q * v / u, q, policy);
}

/// Thomae-Jackson integral (1 - q) sum_n [b f(b q^n) - a f(a q^n)] q^n.
template <Scalar S, class F>
S jackson_integral(F&& f, const S& a, const S& b, const S& q, const TruncationPolicy& policy) {
  detail::require_base(q);
  S qn = one_like(q);
  S sum = sum_series(q, policy, [&](int) {
    S term = (b * f(b * qn) - a * f(a * qn)) * qn;
    qn = qn * q;
    return term;
  });
  return (one_like(q) - q) * sum;
}

/// D_q f(x) = (f(x) - f(qx)) / x.
template <Scalar S, class F>
S q_derivative(F&& f, const S& x, const S& q) {
  if (ScalarTraits<S>::is_zero(x)) {
    throw DomainError("q-derivative at x = 0 is not defined by the difference quotient");
  }
  return (f(x) - f(q * x)) / x;
}

/// q-derivative of a multivariate f with respect to one slot, the other
/// slots held fixed.
template <Scalar S, class F>
S q_partial(F&& f, Slot slot, const ParameterPoint<S>& point) {
  const S& x = point[slot];
  if (ScalarTraits<S>::is_zero(x)) {
    throw DomainError("q-partial derivative needs a non-zero value in slot " +
                      std::string(slot_name(slot)));
  }
  return (f(point) - f(point.with(slot, point.q() * x))) / x;
}

/// Homogeneous Rogers-Szego polynomial h_n(a, b | q) = sum_k [n,k]_q a^k b^{n-k}.
template <Scalar S>
S rogers_szego(long n, const S& a, const S& b, const S& q) {
  if (n < 0) {
    throw DomainError("Rogers-Szego degree must be non-negative");
  }
  S binom = one_like(q);
  S sum = zero_like(q);
  for (long k = 0; k <= n; ++k) {
    if (k > 0) {
      binom = binom * (one_like(q) - ipow(q, n - k + 1)) / (one_like(q) - ipow(q, k));
    }
    sum = sum + binom * ipow(a, k) * ipow(b, n - k);
  }
  return sum;
}

/// Polynomial with Scalar coefficients; the zero polynomial has no coefficients.
template <Scalar S>
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  const std::vector<S>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  S operator()(const S& x) const {
    S acc = zero_like(x);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + *it;
    }
    return acc;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && ScalarTraits<S>::is_zero(coeffs_.back())) {
      coeffs_.pop_back();
    }
  }

  std::vector<S> coeffs_;
};

/// h_n(a, b | q) as a polynomial in a for fixed b.
template <Scalar S>
QPolynomial<S> rogers_szego_polynomial(long n, const S& b, const S& q) {
  std::vector<S> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n + 1));
  for (long k = 0; k <= n; ++k) {
    coeffs.push_back(qbinomial(n, k, q) * ipow(b, n - k));
  }
  return QPolynomial<S>(std::move(coeffs));
}

// The theta-dependent functions are numeric only.

/// H_n(cos theta | q) = sum_k [n,k]_q e^{i(n-2k) theta}.
Complex q_hermite(long n, double theta, const Complex& q);

/// H_n(x | q) in the power basis of x = cos theta, via
/// H_{n+1} = 2x H_n - (1 - q^n) H_{n-1}.
QPolynomial<Complex> q_hermite_polynomial(long n, const Complex& q);

/// h(cos theta; a_1, ..., a_m) = prod_j prod_k (1 - 2 a_j q^k cos theta + a_j^2 q^{2k}).
Complex hprod(double theta, std::span<const Complex> params, const Complex& q,
              const TruncationPolicy& policy);

inline Complex hprod(double theta, std::initializer_list<Complex> params, const Complex& q,
                     const TruncationPolicy& policy) {
  return hprod(theta, std::span<const Complex>(params.begin(), params.size()), q, policy);
}

}  // namespace qseries

#endif  // QSERIES_QCORE_HPP
