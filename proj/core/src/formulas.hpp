#ifndef QSERIES_SRC_FORMULAS_HPP
#define QSERIES_SRC_FORMULAS_HPP

// Left and right sides of every registry identity, written once for both
// scalar realizations. Each struct carries lhs, rhs and the quantities its
// domain is stated in.

#include <cmath>
#include <limits>

#include "qseries/composite.hpp"
#include "qseries/identities.hpp"
#include "qseries/qcore.hpp"

namespace qseries::formulas {

template <Scalar S>
struct Vars {
  explicit Vars(const ParameterPoint<S>& p)
      : q(p.q()),
        a(p[Slot::a]),
        b(p[Slot::b]),
        c(p[Slot::c]),
        d(p[Slot::d]),
        r(p[Slot::r]),
        u(p[Slot::u]),
        v(p[Slot::v]),
        x(p[Slot::x]),
        s(p[Slot::s]),
        t(p[Slot::t]),
        z(p[Slot::z]),
        one(one_like(p.q())) {}

  S q, a, b, c, d, r, u, v, x, s, t, z, one;
};

template <Scalar S>
S ratio(std::initializer_list<S> num, std::initializer_list<S> den, const S& q,
        const TruncationPolicy& pol) {
  return qpoch_ratio(num, den, q, pol);
}

// sum over all integers n of (-1)^n q^{n(n-1)/2} x^n
template <Scalar S>
S theta_sum(const S& x, const S& q, const TruncationPolicy& pol) {
  const S one = one_like(q);
  const S xinv = one / x;
  if constexpr (ScalarTraits<S>::exact) {
    S pos_term = one;  // n >= 0
    S qpow = one;      // q^n
    S pos = sum_series(q, pol, [&](int n) {
      if (n > 0) {
        pos_term = -(pos_term * qpow * x);
        qpow = qpow * q;
      }
      return pos_term;
    });
    S neg_term = one;  // n = -m, m >= 1
    S qm = one;
    S neg = sum_series(q, pol, [&](int m) {
      qm = qm * q;
      neg_term = -(neg_term * qm * xinv);
      return neg_term;
    });
    return pos + neg;
  } else {
    // symmetric cut |n| <= N with |q|^{N(N-1)/2} max(|x|, 1/|x|)^N < tail_tol
    const double log_q = std::log(std::abs(q));
    const double log_m = std::log(std::max(std::abs(x), 1.0 / std::abs(x)));
    const double log_tol = std::log(pol.tail_tol);
    long cut = 1;
    while (0.5 * static_cast<double>(cut * (cut - 1)) * log_q + static_cast<double>(cut) * log_m >=
           log_tol) {
      if (++cut > pol.max_terms) {
        throw NonConvergent("two-sided theta sum needs more than max_terms terms");
      }
    }
    S sum = one;
    S term = one;
    S qpow = one;
    for (long n = 1; n <= cut; ++n) {
      term = -(term * qpow * x);
      qpow = qpow * q;
      sum = sum + term;
    }
    term = one;
    qpow = one;
    for (long m = 1; m <= cut; ++m) {
      qpow = qpow * q;
      term = -(term * qpow * xinv);
      sum = sum + term;
    }
    return sum;
  }
}

struct Jtp {
  template <Scalar S>
  static S lhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    return ratio<S>({w.q, w.x, w.q / w.x}, {}, w.q, pol);
  }
  template <Scalar S>
  static S rhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    return theta_sum(p[Slot::x], p.q(), pol);
  }
  template <Scalar S>
  static Constraints<S> constraints(const ParameterPoint<S>& p) {
    Vars<S> w(p);
    return {{}, {w.x}, {}, {w.x, w.q / w.x}};
  }
};

struct AndrewsAskey {
  template <Scalar S>
  static S lhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    auto f = [&](const S& x) {
      return ratio<S>({w.q * x / w.u, w.q * x / w.v}, {w.a * x, w.b * x}, w.q, pol);
    };
    return jackson_integral(f, w.u, w.v, w.q, pol);
  }
  template <Scalar S>
  static S rhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    return (w.one - w.q) * delta_theta(w.u, w.v, w.q, pol) *
           ratio<S>({w.a * w.b * w.u * w.v}, {w.a * w.u, w.b * w.u, w.a * w.v, w.b * w.v}, w.q,
                    pol);
  }
  template <Scalar S>
  static Constraints<S> constraints(const ParameterPoint<S>& p) {
    Vars<S> w(p);
    return {{w.a * w.u, w.b * w.u, w.a * w.v, w.b * w.v},
            {w.u, w.v},
            {w.a * w.u, w.b * w.u, w.a * w.v, w.b * w.v},
            {w.u / w.v, w.q * w.v / w.u, w.a * w.b * w.u * w.v}};
  }
};

struct AlSalamVerma {
  template <Scalar S>
  static S lhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    const S abcuv = w.a * w.b * w.c * w.u * w.v;
    auto f = [&](const S& x) {
      return ratio<S>({w.q * x / w.u, w.q * x / w.v, abcuv * x}, {w.a * x, w.b * x, w.c * x}, w.q,
                      pol);
    };
    return jackson_integral(f, w.u, w.v, w.q, pol);
  }
  template <Scalar S>
  static S rhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    const S uv = w.u * w.v;
    return (w.one - w.q) * delta_theta(w.u, w.v, w.q, pol) *
           ratio<S>({w.a * w.b * uv, w.a * w.c * uv, w.b * w.c * uv},
                    {w.a * w.u, w.b * w.u, w.c * w.u, w.a * w.v, w.b * w.v, w.c * w.v}, w.q, pol);
  }
  template <Scalar S>
  static Constraints<S> constraints(const ParameterPoint<S>& p) {
    Vars<S> w(p);
    const S uv = w.u * w.v;
    std::vector<S> lin = {w.a * w.u, w.b * w.u, w.c * w.u, w.a * w.v, w.b * w.v, w.c * w.v};
    return {lin,
            {w.u, w.v},
            lin,
            {w.u / w.v, w.q * w.v / w.u, w.a * w.b * uv, w.a * w.c * uv, w.b * w.c * uv}};
  }
};

// 3phi2(cu, cv, cuv/r; acuv, bcuv; q, abr/c), shared by several right sides.
template <Scalar S>
S qint_rhs_phi(const Vars<S>& w, const TruncationPolicy& pol) {
  const S uv = w.u * w.v;
  return phi_series<S>({w.c * w.u, w.c * w.v, w.c * uv / w.r}, {w.a * w.c * uv, w.b * w.c * uv},
                       w.q, w.a * w.b * w.r / w.c, pol);
}

struct Qint6 {
  template <Scalar S>
  static S lhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    const S abr = w.a * w.b * w.r;
    auto f = [&](const S& x) {
      return ratio<S>({w.q * x / w.u, w.q * x / w.v, abr * x}, {w.a * x, w.b * x, w.c * x}, w.q,
                      pol);
    };
    return jackson_integral(f, w.u, w.v, w.q, pol);
  }
  template <Scalar S>
  static S rhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    const S uv = w.u * w.v;
    return (w.one - w.q) * delta_theta(w.u, w.v, w.q, pol) *
           ratio<S>({w.a * w.c * uv, w.b * w.c * uv, w.a * w.b * w.r / w.c},
                    {w.a * w.u, w.a * w.v, w.b * w.u, w.b * w.v, w.c * w.u, w.c * w.v}, w.q, pol) *
           qint_rhs_phi(w, pol);
  }
  template <Scalar S>
  static Constraints<S> constraints(const ParameterPoint<S>& p) {
    Vars<S> w(p);
    const S uv = w.u * w.v;
    const S abr_c = w.a * w.b * w.r / w.c;
    return {{w.a * w.u, w.b * w.u, w.c * w.u, w.a * w.v, w.b * w.v, w.c * w.v, abr_c},
            {w.u, w.v, w.c, w.r},
            {w.a * w.u, w.b * w.u, w.c * w.u, w.a * w.v, w.b * w.v, w.c * w.v, w.a * w.c * uv,
             w.b * w.c * uv},
            {w.u / w.v, w.q * w.v / w.u, w.a * w.c * uv, w.b * w.c * uv, abr_c}};
  }
};

// Eight (p; q)_inf denominators common to the seven-parameter integrals.
template <Scalar S>
std::vector<S> eight_linear(const Vars<S>& w) {
  return {w.a * w.u, w.a * w.v, w.b * w.u, w.b * w.v,
          w.c * w.u, w.c * w.v, w.d * w.u, w.d * w.v};
}

template <Scalar S>
S eight_linear_den(const Vars<S>& w, const TruncationPolicy& pol) {
  auto lin = eight_linear(w);
  return qpoch_multi_infinite(std::span<const S>(lin), w.q, pol, FactorRole::denominator);
}

struct Qint7 {
  template <Scalar S>
  static S lhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    const S acduv = w.a * w.c * w.d * w.u * w.v;
    const S abr = w.a * w.b * w.r;
    const S bduv = w.b * w.d * w.u * w.v;
    auto f = [&](const S& x) {
      return ratio<S>({w.q * x / w.u, w.q * x / w.v, acduv * x, abr * x},
                      {w.a * x, w.b * x, w.c * x, w.d * x}, w.q, pol) *
             phi_series<S>({w.a * w.r, w.a * x, w.c * x}, {acduv * x, abr * x}, w.q, bduv, pol);
    };
    return jackson_integral(f, w.u, w.v, w.q, pol);
  }
  template <Scalar S>
  static S rhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    const S uv = w.u * w.v;
    return (w.one - w.q) * delta_theta(w.u, w.v, w.q, pol) *
           qpoch_multi_infinite<S>(
               std::vector<S>{w.a * w.c * uv, w.a * w.d * uv, w.b * w.c * uv, w.c * w.d * uv,
                              w.a * w.b * w.r / w.c},
               w.q, pol) /
           eight_linear_den(w, pol) * qint_rhs_phi(w, pol);
  }
  template <Scalar S>
  static Constraints<S> constraints(const ParameterPoint<S>& p) {
    Vars<S> w(p);
    const S uv = w.u * w.v;
    const S abr_c = w.a * w.b * w.r / w.c;
    const S acduv = w.a * w.c * w.d * uv;
    const S abr = w.a * w.b * w.r;
    auto poles = eight_linear(w);
    for (const S& e : {w.a * w.c * uv, w.b * w.c * uv, acduv * w.u, acduv * w.v, abr * w.u,
                       abr * w.v}) {
      poles.push_back(e);
    }
    return {{w.a * w.u, w.b * w.u, w.c * w.u, w.a * w.v, w.b * w.v, w.c * w.v, abr_c,
             w.b * w.d * uv},
            {w.u, w.v, w.c, w.r},
            poles,
            {w.u / w.v, w.q * w.v / w.u, w.a * w.c * uv, w.a * w.d * uv, w.b * w.c * uv,
             w.c * w.d * uv, abr_c}};
  }
};

struct Qint7R {
  template <Scalar S>
  static S lhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    const S uv = w.u * w.v;
    const S abcuv = w.a * w.b * w.c * uv;
    const S acduv = w.a * w.c * w.d * uv;
    const S bduv = w.b * w.d * uv;
    auto f = [&](const S& x) {
      return ratio<S>({w.q * x / w.u, w.q * x / w.v, abcuv * x, acduv * x},
                      {w.a * x, w.b * x, w.c * x, w.d * x}, w.q, pol) *
             phi_series<S>({w.a * w.c * uv, w.a * x, w.c * x}, {abcuv * x, acduv * x}, w.q, bduv,
                           pol);
    };
    return jackson_integral(f, w.u, w.v, w.q, pol);
  }
  template <Scalar S>
  static S rhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    const S uv = w.u * w.v;
    return (w.one - w.q) * delta_theta(w.u, w.v, w.q, pol) *
           qpoch_multi_infinite<S>(std::vector<S>{w.a * w.b * uv, w.a * w.c * uv, w.a * w.d * uv,
                                                  w.b * w.c * uv, w.c * w.d * uv},
                                   w.q, pol) /
           eight_linear_den(w, pol);
  }
  template <Scalar S>
  static Constraints<S> constraints(const ParameterPoint<S>& p) {
    Vars<S> w(p);
    const S uv = w.u * w.v;
    const S abcuv = w.a * w.b * w.c * uv;
    const S acduv = w.a * w.c * w.d * uv;
    auto poles = eight_linear(w);
    for (const S& e : {abcuv * w.u, abcuv * w.v, acduv * w.u, acduv * w.v}) {
      poles.push_back(e);
    }
    return {{w.a * w.u, w.b * w.u, w.c * w.u, w.a * w.v, w.b * w.v, w.c * w.v, w.b * w.d * uv},
            {w.u, w.v},
            poles,
            {w.u / w.v, w.q * w.v / w.u, w.a * w.b * uv, w.a * w.c * uv, w.a * w.d * uv,
             w.b * w.c * uv, w.c * w.d * uv}};
  }
};

struct SearsEquiv {
  template <Scalar S>
  static S lhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    const S cduv = w.c * w.d * w.u * w.v;
    const S acduv = w.a * cduv;
    const S bcduv = w.b * cduv;
    const S abr_c = w.a * w.b * w.r / w.c;
    auto f = [&](const S& x) {
      return ratio<S>({w.q * x / w.u, w.q * x / w.v, acduv * x, bcduv * x},
                      {w.a * x, w.b * x, w.c * x, w.d * x}, w.q, pol) *
             phi_series<S>({cduv, cduv * x / w.r, w.c * x}, {acduv * x, bcduv * x}, w.q, abr_c,
                           pol);
    };
    return jackson_integral(f, w.u, w.v, w.q, pol);
  }
  template <Scalar S>
  static S rhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    const S uv = w.u * w.v;
    return (w.one - w.q) * delta_theta(w.u, w.v, w.q, pol) *
           qpoch_multi_infinite<S>(std::vector<S>{w.a * w.c * uv, w.a * w.d * uv, w.b * w.c * uv,
                                                  w.b * w.d * uv, w.c * w.d * uv},
                                   w.q, pol) /
           eight_linear_den(w, pol) * qint_rhs_phi(w, pol);
  }
  template <Scalar S>
  static Constraints<S> constraints(const ParameterPoint<S>& p) {
    Vars<S> w(p);
    const S uv = w.u * w.v;
    const S abr_c = w.a * w.b * w.r / w.c;
    const S acduv = w.a * w.c * w.d * uv;
    const S bcduv = w.b * w.c * w.d * uv;
    auto poles = eight_linear(w);
    for (const S& e : {w.a * w.c * uv, w.b * w.c * uv, acduv * w.u, acduv * w.v, bcduv * w.u,
                       bcduv * w.v}) {
      poles.push_back(e);
    }
    return {{w.a * w.u, w.b * w.u, w.c * w.u, w.a * w.v, w.b * w.v, w.c * w.v, abr_c},
            {w.u, w.v, w.c, w.r},
            poles,
            {w.u / w.v, w.q * w.v / w.u, w.a * w.c * uv, w.a * w.d * uv, w.b * w.c * uv,
             w.b * w.d * uv, w.c * w.d * uv}};
  }
};

// sum_n (-1)^n q^{n(n+1)/2} y^n / (p; q)_{n+1}
template <Scalar S>
S ramanujan_sum(const S& y, const S& p, const S& q, const TruncationPolicy& pol) {
  const S one = one_like(q);
  S f0 = one - p;
  detail::check_factor(f0, FactorRole::denominator, pol);
  S term = one / f0;
  S qn = one;
  return sum_series(q, pol, [&](int n) {
    if (n > 0) {
      qn = qn * q;
      S f = one - p * qn;
      detail::check_factor(f, FactorRole::denominator, pol);
      term = -(term * qn * y) / f;
    }
    return term;
  });
}

struct RamRecip {
  template <Scalar S>
  static S lhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    const S vu = w.v / w.u;
    const S uv = w.u / w.v;
    return (w.one - vu) * ramanujan_sum(vu, w.a * w.v, w.q, pol) +
           (w.one - uv) * ramanujan_sum(uv, w.a * w.u, w.q, pol);
  }
  template <Scalar S>
  static S rhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    return ratio<S>({w.q, w.v / w.u, w.u / w.v}, {w.a * w.u, w.a * w.v}, w.q, pol);
  }
  template <Scalar S>
  static Constraints<S> constraints(const ParameterPoint<S>& p) {
    Vars<S> w(p);
    return {{}, {w.u, w.v}, {w.a * w.u, w.a * w.v}, {w.u / w.v, w.v / w.u}};
  }
};

// v sum_n (q/du, acuv; q)_n (dv)^n / (av, cv; q)_{n+1}
template <Scalar S>
S recip5_half(const Vars<S>& w, const S& u, const S& v, const TruncationPolicy& pol) {
  const S one = w.one;
  const S dv = w.d * v;
  const S lead = w.q * v / u;
  const S acuv = w.a * w.c * u * v;
  const S av = w.a * v;
  const S cv = w.c * v;
  S num = one;
  S den = one;
  S qn = one;
  S sum = sum_series(w.q, pol, [&](int n) {
    if (n > 0) {
      num = num * (dv - lead * qn) * (one - acuv * qn);
      qn = qn * w.q;
    }
    S f1 = one - av * qn;
    S f2 = one - cv * qn;
    detail::check_factor(f1, FactorRole::denominator, pol);
    detail::check_factor(f2, FactorRole::denominator, pol);
    den = den * f1 * f2;
    return num / den;
  });
  return v * sum;
}

struct Recip5 {
  template <Scalar S>
  static S lhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    return recip5_half(w, w.u, w.v, pol) - recip5_half(w, w.v, w.u, pol);
  }
  template <Scalar S>
  static S rhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    const S uv = w.u * w.v;
    return delta_theta(w.u, w.v, w.q, pol) *
           ratio<S>({w.a * w.d * uv, w.a * w.c * uv, w.c * w.d * uv},
                    {w.a * w.u, w.a * w.v, w.c * w.u, w.c * w.v, w.d * w.u, w.d * w.v}, w.q, pol);
  }
  template <Scalar S>
  static Constraints<S> constraints(const ParameterPoint<S>& p) {
    Vars<S> w(p);
    const S uv = w.u * w.v;
    std::vector<S> lin = {w.a * w.u, w.a * w.v, w.c * w.u, w.c * w.v, w.d * w.u, w.d * w.v};
    return {lin,
            {w.u, w.v},
            lin,
            {w.u / w.v, w.q * w.v / w.u, w.a * w.d * uv, w.a * w.c * uv, w.c * w.d * uv}};
  }
};

// sum_n y^n / (1 - p q^n)
template <Scalar S>
S lambert_sum(const S& y, const S& p, const S& q, const TruncationPolicy& pol) {
  const S one = one_like(q);
  S yn = one;
  S pqn = p;
  return sum_series(q, pol, [&](int n) {
    if (n > 0) {
      yn = yn * y;
      pqn = pqn * q;
    }
    S f = one - pqn;
    detail::check_factor(f, FactorRole::denominator, pol);
    return yn / f;
  });
}

struct Lambert {
  template <Scalar S>
  static S lhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    const S cu = w.c * w.u;
    const S cv = w.c * w.v;
    return w.v * lambert_sum(w.q / cu, cv, w.q, pol) - w.u * lambert_sum(w.q / cv, cu, w.q, pol);
  }
  template <Scalar S>
  static S rhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    const S cu = w.c * w.u;
    const S cv = w.c * w.v;
    return w.v * ratio<S>({w.q, w.q, w.u / w.v, w.q * w.v / w.u}, {cu, cv, w.q / cu, w.q / cv},
                          w.q, pol);
  }
  template <Scalar S>
  static Constraints<S> constraints(const ParameterPoint<S>& p) {
    Vars<S> w(p);
    const S cu = w.c * w.u;
    const S cv = w.c * w.v;
    return {{w.q / cu, w.q / cv},
            {w.c, w.u, w.v},
            {cu, cv, w.q / cu, w.q / cv},
            {w.u / w.v, w.q * w.v / w.u}};
  }
};

// Right side of the seven-variable reciprocity formula for a given r.
template <Scalar S>
S recip7_rhs(const Vars<S>& w, const S& r, const TruncationPolicy& pol) {
  const S uv = w.u * w.v;
  const S abr_d = w.a * w.b * r / w.d;
  const S z = w.a * w.b * w.c * r * uv / w.q;
  auto lin = eight_linear(w);
  lin.push_back(z);
  S value = delta_theta(w.u, w.v, w.q, pol) *
            qpoch_multi_infinite<S>(std::vector<S>{w.a * w.c * uv, w.a * w.d * uv,
                                                   w.b * w.c * uv, w.b * w.d * uv,
                                                   w.c * w.d * uv, abr_d},
                                    w.q, pol) /
            qpoch_multi_infinite(std::span<const S>(lin), w.q, pol, FactorRole::denominator);
  return value * phi_series<S>({w.d * w.u, w.d * w.v, w.d * uv / r},
                               {w.a * w.d * uv, w.b * w.d * uv}, w.q, abr_d, pol);
}

template <Scalar S>
S rho_difference(const Vars<S>& w, const S& r, const TruncationPolicy& pol) {
  return rho(w.a, w.b, w.c, w.d, r, w.u, w.v, w.q, pol) -
         rho(w.a, w.b, w.c, w.d, r, w.v, w.u, w.q, pol);
}

struct Recip7 {
  template <Scalar S>
  static S lhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    return rho_difference(w, w.r, pol);
  }
  template <Scalar S>
  static S rhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    return recip7_rhs(w, w.r, pol);
  }
  template <Scalar S>
  static Constraints<S> constraints(const ParameterPoint<S>& p) {
    Vars<S> w(p);
    const S uv = w.u * w.v;
    const S abr_d = w.a * w.b * w.r / w.d;
    const S z = w.a * w.b * w.c * w.r * uv / w.q;
    auto bounded = eight_linear(w);
    bounded.push_back(abr_d);
    bounded.push_back(z);
    auto poles = eight_linear(w);
    poles.push_back(z);
    poles.push_back(w.a * w.d * uv);
    poles.push_back(w.b * w.d * uv);
    return {bounded,
            {w.u, w.v, w.d, w.r},
            poles,
            {w.u / w.v, w.q * w.v / w.u, w.a * w.c * uv, w.a * w.d * uv, w.b * w.c * uv,
             w.b * w.d * uv, w.c * w.d * uv, abr_d}};
  }
};

struct Recip6 {
  template <Scalar S>
  static S lhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    return rho_difference(w, w.d * w.u * w.v, pol);
  }
  template <Scalar S>
  static S rhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    const S uv = w.u * w.v;
    auto den = eight_linear(w);
    den.push_back(w.a * w.b * w.c * w.d * uv * uv / w.q);
    return delta_theta(w.u, w.v, w.q, pol) *
           qpoch_multi_infinite<S>(std::vector<S>{w.a * w.b * uv, w.a * w.c * uv, w.a * w.d * uv,
                                                  w.b * w.c * uv, w.b * w.d * uv, w.c * w.d * uv},
                                   w.q, pol) /
           qpoch_multi_infinite(std::span<const S>(den), w.q, pol, FactorRole::denominator);
  }
  template <Scalar S>
  static Constraints<S> constraints(const ParameterPoint<S>& p) {
    Vars<S> w(p);
    const S uv = w.u * w.v;
    const S z = w.a * w.b * w.c * w.d * uv * uv / w.q;
    auto bounded = eight_linear(w);
    bounded.push_back(z);
    auto poles = eight_linear(w);
    poles.push_back(z);
    return {bounded,
            {w.u, w.v, w.d},
            poles,
            {w.u / w.v, w.q * w.v / w.u, w.a * w.b * uv, w.a * w.c * uv, w.a * w.d * uv,
             w.b * w.c * uv, w.b * w.d * uv, w.c * w.d * uv}};
  }
};

struct QBinomialTheorem {
  template <Scalar S>
  static S lhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    return phi_series<S>({w.a}, {}, w.q, w.z, pol);
  }
  template <Scalar S>
  static S rhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    return ratio<S>({w.a * w.z}, {w.z}, w.q, pol);
  }
  template <Scalar S>
  static Constraints<S> constraints(const ParameterPoint<S>& p) {
    Vars<S> w(p);
    return {{w.z}, {}, {w.z}, {w.a * w.z}};
  }
};

struct QMehler {
  template <Scalar S>
  static S lhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    S zn = w.one;
    S qq = w.one;  // (q; q)_n
    S qn = w.one;
    return sum_series(w.q, pol, [&](int n) {
      if (n > 0) {
        zn = zn * w.z;
        qn = qn * w.q;
        qq = qq * (w.one - qn);
      }
      return rogers_szego(n, w.a, w.b, w.q) * rogers_szego(n, w.s, w.t, w.q) * zn / qq;
    });
  }
  template <Scalar S>
  static S rhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    return ratio<S>({w.a * w.b * w.s * w.t * w.z * w.z},
                    {w.a * w.s * w.z, w.a * w.t * w.z, w.b * w.s * w.z, w.b * w.t * w.z}, w.q, pol);
  }
  template <Scalar S>
  static Constraints<S> constraints(const ParameterPoint<S>& p) {
    Vars<S> w(p);
    std::vector<S> lin = {w.a * w.s * w.z, w.a * w.t * w.z, w.b * w.s * w.z, w.b * w.t * w.z};
    return {lin, {}, lin, {w.a * w.b * w.s * w.t * w.z * w.z}};
  }
};

struct QpdeL {
  template <Scalar S>
  static S lhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    return q_partial([&](const ParameterPoint<S>& pt) { return l_function(pt, pol); }, Slot::a, p);
  }
  template <Scalar S>
  static S rhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    return q_partial([&](const ParameterPoint<S>& pt) { return l_function(pt, pol); }, Slot::b, p);
  }
  template <Scalar S>
  static Constraints<S> constraints(const ParameterPoint<S>& p) {
    Vars<S> w(p);
    std::vector<S> lin = {w.a * w.s, w.a * w.t, w.a * w.u, w.b * w.s, w.b * w.t, w.b * w.u};
    std::vector<S> bounded = lin;
    bounded.push_back(w.a * w.b * w.s * w.t * w.u / w.v);
    std::vector<S> poles = lin;
    poles.push_back(w.a * w.v);
    poles.push_back(w.b * w.v);
    return {bounded,
            {w.a, w.b, w.s, w.t, w.u, w.v},
            poles,
            {w.a * w.v, w.b * w.v, w.a * w.b * w.s * w.t * w.u / w.v}};
  }
};

// Slots: a, b, c hold a1, a2, a3; u, v hold b1, b2.
struct Sears32 {
  template <Scalar S>
  static S lhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    return phi_series<S>({w.a, w.b, w.c}, {w.u, w.v}, w.q, w.u * w.v / (w.a * w.b * w.c), pol);
  }
  template <Scalar S>
  static S rhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    const S b12_a12 = w.u * w.v / (w.a * w.b);
    return ratio<S>({w.v / w.c, b12_a12}, {w.v, b12_a12 / w.c}, w.q, pol) *
           phi_series<S>({w.u / w.a, w.u / w.b, w.c}, {w.u, b12_a12}, w.q, w.v / w.c, pol);
  }
  template <Scalar S>
  static Constraints<S> constraints(const ParameterPoint<S>& p) {
    Vars<S> w(p);
    const S b12_a12 = w.u * w.v / (w.a * w.b);
    return {{b12_a12 / w.c, w.v / w.c},
            {w.a, w.b, w.c},
            {w.u, w.v, b12_a12, b12_a12 / w.c},
            {w.v / w.c, b12_a12}};
  }
};

// The d-dependent pieces of the limiting sums:
//   P_n = (q/d; q)_n d^n = prod_{j=1}^n (d - q^j)
//   Q_n = P_n sum_{k=1}^n q^k / (d - q^k) = sum_k q^k prod_{j != k} (d - q^j)
// Written without dividing by d - q^k so d = 0 and d = q^k are regular.
template <Scalar S>
struct LimitDState {
  explicit LimitDState(const S& q_) : q(q_), qn(one_like(q_)), p(one_like(q_)), qsum(zero_like(q_)) {}

  void advance(const S& d) {
    const S prev = p;
    qn = qn * q;
    p = p * (d - qn);
    qsum = qsum * (d - qn) + qn * prev;
  }

  S q, qn, p, qsum;
};

struct LimitA {
  template <Scalar S>
  static S lhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    LimitDState<S> dstate(w.q);
    const S ac = w.a * w.c;
    S num = w.one;  // (ac; q)_n
    S den = w.one;  // (a, c; q)_{n+1}
    S harmonic = zero_like(w.q);
    S qn = w.one;
    return sum_series(w.q, pol, [&](int n) {
      if (n > 0) {
        num = num * (w.one - ac * qn);
        qn = qn * w.q;
        dstate.advance(w.d);
      }
      const S fa = w.one - w.a * qn;
      const S fc = w.one - w.c * qn;
      detail::check_factor(fa, FactorRole::denominator, pol);
      detail::check_factor(fc, FactorRole::denominator, pol);
      den = den * fa * fc;
      harmonic = harmonic + w.a * qn / fa + w.c * qn / fc;
      const S bracket = (int_like(w.q, n + 1) + harmonic) * dstate.p - dstate.qsum;
      return num / den * bracket;
    });
  }
  template <Scalar S>
  static S rhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    const S qq = qpoch_infinite(w.q, w.q, pol);
    const S acd = ratio<S>({w.a * w.c, w.a * w.d, w.c * w.d}, {w.a, w.c, w.d}, w.q, pol);
    return qq * qq * qq * acd / qpoch_multi_infinite<S>(std::vector<S>{w.a, w.c, w.d}, w.q, pol,
                                                       FactorRole::denominator);
  }
  template <Scalar S>
  static Constraints<S> constraints(const ParameterPoint<S>& p) {
    Vars<S> w(p);
    return {{w.d}, {}, {w.a, w.c, w.d}, {w.a * w.c, w.a * w.d, w.c * w.d}};
  }
};

struct LimitEulerD {
  template <Scalar S>
  static S lhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    LimitDState<S> dstate(w.q);
    return sum_series(w.q, pol, [&](int n) {
      if (n > 0) {
        dstate.advance(w.d);
      }
      return int_like(w.q, n + 1) * dstate.p - dstate.qsum;
    });
  }
  template <Scalar S>
  static S rhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    const S qq = qpoch_infinite(w.q, w.q, pol);
    const S dd = qpoch_infinite(w.d, w.q, pol, FactorRole::denominator);
    return qq * qq * qq / (dd * dd);
  }
  template <Scalar S>
  static Constraints<S> constraints(const ParameterPoint<S>& p) {
    Vars<S> w(p);
    return {{w.d}, {}, {w.d}, {}};
  }
};

struct LimitDNegQ {
  template <Scalar S>
  static S lhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    const S mq = -w.q;
    S mqn = w.one;   // (-q)^n
    S poch = w.one;  // (-q; q)_{n-1}
    S qk = w.one;
    S inner = zero_like(w.q);  // sum_{k=1}^{n-1} q^k / (1 + q^k)
    return sum_series(w.q, pol, [&](int n) {
      if (n == 0) {
        return w.one;
      }
      mqn = mqn * mq;
      if (n >= 2) {
        qk = qk * w.q;  // q^{n-1}
        poch = poch * (w.one + qk);
        inner = inner + qk / (w.one + qk);
      }
      return mqn * poch * (int_like(w.q, 2 * n + 3) + int_like(w.q, 2) * inner);
    });
  }
  template <Scalar S>
  static S rhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    const S qq = qpoch_infinite(w.q, w.q, pol);
    const S mm = qpoch_infinite(-w.q, w.q, pol, FactorRole::denominator);
    return qq * qq * qq / (mm * mm);
  }
  template <Scalar S>
  static Constraints<S> constraints(const ParameterPoint<S>& p) {
    Vars<S> w(p);
    return {{}, {}, {-w.q}, {}};
  }
};

// sum_{n>=1} n y^n / (1 - p q^n)
template <Scalar S>
S weighted_lambert(const S& y, const S& p, const S& q, const TruncationPolicy& pol) {
  const S one = one_like(q);
  S yn = one;
  S pqn = p;
  return sum_series(q, pol, [&](int k) {
    const long n = k + 1;
    yn = yn * y;
    pqn = pqn * q;
    S f = one - pqn;
    detail::check_factor(f, FactorRole::denominator, pol);
    return int_like(q, n) * yn / f;
  });
}

struct Lambert4 {
  template <Scalar S>
  static S lhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    const S qq = qpoch_infinite(w.q, w.q, pol);
    const S den = ratio<S>({}, {w.q * w.a, w.q / w.a}, w.q, pol);
    return qq * qq * qq * qq * den * den;
  }
  template <Scalar S>
  static S rhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    const S ainv = w.one / w.a;
    const S m1 = w.one - w.a;
    const S m2 = w.one - ainv;
    return w.one + m1 * m1 * weighted_lambert(w.q * ainv, w.a, w.q, pol) +
           m2 * m2 * weighted_lambert(w.q * w.a, ainv, w.q, pol);
  }
  template <Scalar S>
  static Constraints<S> constraints(const ParameterPoint<S>& p) {
    Vars<S> w(p);
    return {{w.q / w.a, w.q * w.a}, {w.a}, {w.q * w.a, w.q / w.a}, {}};
  }
};

struct FourSquare {
  template <Scalar S>
  static S lhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    // 1 + 2 sum_{n>=1} q^{n^2}
    S qn2 = w.one;  // q^{n^2}
    S qodd = w.q;   // q^{2n+1}
    S tail = sum_series(w.q, pol, [&](int) {
      qn2 = qn2 * qodd;
      qodd = qodd * w.q * w.q;
      return qn2;
    });
    const S theta = w.one + int_like(w.q, 2) * tail;
    const S sq = theta * theta;
    return sq * sq;
  }
  template <Scalar S>
  static S rhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    const S q4 = ipow(w.q, 4);
    return w.one + int_like(w.q, 8) * weighted_lambert(w.q, w.one, w.q, pol) -
           int_like(w.q, 32) * weighted_lambert(q4, w.one, q4, pol);
  }
  template <Scalar S>
  static Constraints<S> constraints(const ParameterPoint<S>&) {
    return {};
  }
};

struct FourTriangular {
  template <Scalar S>
  static S lhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    S qtri = w.one;  // q^{n(n+1)/2}
    S qn = w.one;
    S sum = sum_series(w.q, pol, [&](int n) {
      if (n > 0) {
        qn = qn * w.q;
        qtri = qtri * qn;
      }
      return qtri;
    });
    const S sq = sum * sum;
    return sq * sq;
  }
  template <Scalar S>
  static S rhs(const ParameterPoint<S>& p, const TruncationPolicy& pol) {
    Vars<S> w(p);
    S qn = w.one;
    S q2n1 = w.q;  // q^{2n+1}
    const S q2 = w.q * w.q;
    return sum_series(w.q, pol, [&](int n) {
      if (n > 0) {
        qn = qn * w.q;
        q2n1 = q2n1 * q2;
      }
      S f = w.one - q2n1;
      detail::check_factor(f, FactorRole::denominator, pol);
      return int_like(w.q, 2 * n + 1) * qn / f;
    });
  }
  template <Scalar S>
  static Constraints<S> constraints(const ParameterPoint<S>&) {
    return {};
  }
};

}  // namespace qseries::formulas

#endif  // QSERIES_SRC_FORMULAS_HPP
