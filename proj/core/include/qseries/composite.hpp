#ifndef QSERIES_COMPOSITE_HPP
#define QSERIES_COMPOSITE_HPP

#include "qseries/parameter_point.hpp"
#include "qseries/qcore.hpp"

namespace qseries {

enum class RhoPath {
  // Every Pochhammer factor and inner series recomputed per outer index.
  reference,
  // Outer Pochhammer products updated one factor at a time.
  incremental,
};

/// The double series rho(a, b, c, d, r, u, v):
///
///   v sum_n (q/du, acuv, bcuv; q)_n (dv)^n / (av, bv, cv; q)_{n+1}
///     * 3phi2(q^{n+1}, v q^{n+1}/r, q/cu; a v q^{n+1}, b v q^{n+1}; q, abcruv/q)
///
/// (q/du; q)_n (dv)^n is formed as prod_k (dv - (qv/u) q^k) so d = 0 is
/// allowed, and the inner series pairs q/cu with its argument so c = 0 is
/// allowed too. When ab = 0 the inner series is identically 1.
template <Scalar S>
S rho(const S& a, const S& b, const S& c, const S& d, const S& r, const S& u, const S& v,
      const S& q, const TruncationPolicy& policy, RhoPath path = RhoPath::reference) {
  detail::require_base(q);
  const S one = one_like(q);
  const bool trivial_inner = ScalarTraits<S>::is_zero(a * b);
  const S qv_over_u = q * v / u;
  const S dv = d * v;
  const S acuv = a * c * u * v;
  const S bcuv = b * c * u * v;

  // Inner 3phi2 with (q/cu; q)_k (abcruv/q)^k written as prod_j (z - abrv q^j).
  auto inner = [&](const S& qn1) {
    if (trivial_inner) {
      return one;
    }
    const S z = a * b * c * r * u * v / q;
    const S paired = a * b * r * v;
    const S num2 = v * qn1 / r;
    const S den1 = a * v * qn1;
    const S den2 = b * v * qn1;
    S term = one;
    S qk = one;
    return sum_series(q, policy, [&](int k) {
      if (k > 0) {
        S f1 = one - den1 * qk;
        S f2 = one - den2 * qk;
        detail::check_factor(f1, FactorRole::denominator, policy);
        detail::check_factor(f2, FactorRole::denominator, policy);
        term = term * (one - qn1 * qk) * (one - num2 * qk) * (z - paired * qk) /
               ((one - qk * q) * f1 * f2);
        qk = qk * q;
      }
      return term;
    });
  };

  auto denominator_check = [&](const S& f) {
    detail::check_factor(f, FactorRole::denominator, policy);
    return f;
  };

  if (path == RhoPath::reference) {
    S qn1 = q;  // q^{n+1}
    S sum = sum_series(q, policy, [&](int n) {
      S num = qpoch_scaled(qv_over_u, dv, q, n) * qpoch(acuv, q, n) * qpoch(bcuv, q, n);
      S den = one;
      for (const S& p : {a * v, b * v, c * v}) {
        S pqk = p;
        for (int k = 0; k <= n; ++k) {
          den = den * denominator_check(one - pqk);
          pqk = pqk * q;
        }
      }
      S term = num / den * inner(qn1);
      qn1 = qn1 * q;
      return term;
    });
    return v * sum;
  }

  S num = one;
  S den = one;
  S qn = one;  // q^n
  S sum = sum_series(q, policy, [&](int n) {
    if (n > 0) {
      num = num * (dv - qv_over_u * qn) * (one - acuv * qn) * (one - bcuv * qn);
      qn = qn * q;
    }
    den = den * denominator_check(one - a * v * qn) * denominator_check(one - b * v * qn) *
          denominator_check(one - c * v * qn);
    return num / den * inner(qn * q);
  });
  return v * sum;
}

template <Scalar S>
S rho(const ParameterPoint<S>& p, const TruncationPolicy& policy,
      RhoPath path = RhoPath::reference) {
  return rho(p[Slot::a], p[Slot::b], p[Slot::c], p[Slot::d], p[Slot::r], p[Slot::u], p[Slot::v],
             p.q(), policy, path);
}

/// L(a, b, u, v, s, t) =
///   (av, bv, abstu/v; q)_inf / (as, at, au, bs, bt, bu; q)_inf
///     * 3phi2(v/s, v/t, v/u; av, bv; q, abstu/v)
template <Scalar S>
S l_function(const S& a, const S& b, const S& u, const S& v, const S& s, const S& t, const S& q,
             const TruncationPolicy& policy) {
  const S z = a * b * s * t * u / v;
  const S prefactor =
      qpoch_ratio<S>({a * v, b * v, z}, {a * s, a * t, a * u, b * s, b * t, b * u}, q, policy);
  return prefactor * phi_series<S>({v / s, v / t, v / u}, {a * v, b * v}, q, z, policy);
}

template <Scalar S>
S l_function(const ParameterPoint<S>& p, const TruncationPolicy& policy) {
  return l_function(p[Slot::a], p[Slot::b], p[Slot::u], p[Slot::v], p[Slot::s], p[Slot::t], p.q(),
                    policy);
}

}  // namespace qseries

#endif  // QSERIES_COMPOSITE_HPP
