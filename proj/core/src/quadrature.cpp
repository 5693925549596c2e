#include "qseries/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace qseries {

void QuadratureConfig::validate() const {
  if (panel_order < 1 || !(abs_tol > 0.0) || !(rel_tol > 0.0) || max_panels < 1) {
    throw DomainError("invalid quadrature config");
  }
}

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> legendre(int order, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= order; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return {p1, order * (x * p1 - p0) / (x * x - 1.0)};
}

}  // namespace

void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(static_cast<std::size_t>(order), 0.0);
  weights.assign(static_cast<std::size_t>(order), 0.0);
  for (int i = 0; i < (order + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(order, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) {
        break;
      }
    }
    const double dp = legendre(order, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(order - 1 - i);
    nodes[lo] = -x;
    nodes[hi] = x;
    weights[lo] = w;
    weights[hi] = w;
  }
}

namespace {

struct Panel {
  double lo;
  double hi;
  Complex whole;
  Complex left;
  Complex right;
  double err;

  bool operator<(const Panel& other) const { return err < other.err; }
};

}  // namespace

QuadratureResult integrate_theta(const std::function<Complex(double)>& f,
                                 const QuadratureConfig& config, double lo, double hi) {
  config.validate();
  std::vector<double> x;
  std::vector<double> w;
  gauss_legendre(config.panel_order, x, w);

  auto rule = [&](double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    Complex sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      sum += w[i] * f(mid + half * x[i]);
    }
    return half * sum;
  };
  auto make_panel = [&](double a, double b, Complex whole) {
    const double m = 0.5 * (a + b);
    Panel p{a, b, whole, rule(a, m), rule(m, b), 0.0};
    p.err = std::abs(p.whole - p.left - p.right);
    return p;
  };

  std::priority_queue<Panel> queue;
  queue.push(make_panel(lo, hi, rule(lo, hi)));
  Complex value = queue.top().left + queue.top().right;
  double err = queue.top().err;
  int panels = 1;
  while (err > std::max(config.abs_tol, config.rel_tol * std::abs(value))) {
    if (panels + 1 > config.max_panels) {
      throw MaxPanelsExceeded("quadrature needs more than " + std::to_string(config.max_panels) +
                              " panels (estimate " + std::to_string(err) + ")");
    }
    Panel worst = queue.top();
    queue.pop();
    const double m = 0.5 * (worst.lo + worst.hi);
    Panel a = make_panel(worst.lo, m, worst.left);
    Panel b = make_panel(m, worst.hi, worst.right);
    queue.push(a);
    queue.push(b);
    ++panels;
    // re-sum rather than update so rounding does not accumulate
    value = 0.0;
    err = 0.0;
    auto copy = queue;
    while (!copy.empty()) {
      value += copy.top().left + copy.top().right;
      err += copy.top().err;
      copy.pop();
    }
  }
  return {value, err, panels};
}

IntegralCheck make_check(const QuadratureResult& r, Complex reference) {
  IntegralCheck c;
  c.value = r.value;
  c.reference = reference;
  c.err_estimate = r.err_estimate;
  c.abs_err = std::abs(r.value - reference);
  c.rel_err = c.abs_err / std::max({std::abs(r.value), std::abs(reference), 1e-300});
  // the integrals are real for real parameters
  c.imag_ok = std::abs(r.value.imag()) <= 1e-9 * std::abs(r.value.real());
  if (!c.imag_ok) {
    c.diagnostics = "imaginary part above 1e-9 of real part";
  }
  return c;
}

namespace {

void require_unit_disc(std::initializer_list<Complex> params, const char* what) {
  for (const Complex& p : params) {
    if (!(std::abs(p) < 1.0)) {
      throw DomainError(std::string(what) + " needs every parameter modulus < 1");
    }
  }
}

Complex weight(double theta, const Complex& q, const TruncationPolicy& policy) {
  return hprod(2.0 * theta, {Complex(1.0)}, q, policy);
}

}  // namespace

Complex askey_wilson_integrand(double theta, const Complex& a, const Complex& b, const Complex& c,
                               const Complex& d, const Complex& q,
                               const TruncationPolicy& policy) {
  const Complex den = hprod(theta, {a, b, c, d}, q, policy);
  detail::check_factor(den, FactorRole::denominator, policy);
  return weight(theta, q, policy) / den;
}

Complex askey_wilson_closed_form(const Complex& a, const Complex& b, const Complex& c,
                                 const Complex& d, const Complex& q,
                                 const TruncationPolicy& policy) {
  return 2.0 * std::numbers::pi *
         qpoch_ratio<Complex>({a * b * c * d}, {q, a * b, a * c, a * d, b * c, b * d, c * d}, q,
                              policy);
}

QuadratureResult askey_wilson_integral(const Complex& a, const Complex& b, const Complex& c,
                                       const Complex& d, const Complex& q,
                                       const TruncationPolicy& policy,
                                       const QuadratureConfig& config) {
  require_unit_disc({a, b, c, d}, "Askey-Wilson integral");
  detail::require_base(q);
  return integrate_theta(
      [&](double t) { return askey_wilson_integrand(t, a, b, c, d, q, policy); }, config);
}

Complex beta_integrand(double theta, const Complex& a, const Complex& b, const Complex& c,
                       const Complex& d, const Complex& r, const Complex& q,
                       const TruncationPolicy& policy) {
  const Complex e = std::polar(1.0, theta);
  const Complex phi = phi_series<Complex>({c * e, c / e, c / r}, {a * c, b * c}, q,
                                          a * b * r / c, policy);
  return askey_wilson_integrand(theta, a, b, c, d, q, policy) * phi;
}

Complex beta_closed_form(const Complex& a, const Complex& b, const Complex& c, const Complex& d,
                         const Complex& r, const Complex& q, const TruncationPolicy& policy) {
  return 2.0 * std::numbers::pi *
         qpoch_ratio<Complex>({a * b * d * r},
                              {q, a * c, a * d, b * c, b * d, c * d, a * b * r / c}, q, policy);
}

QuadratureResult beta_integral(const Complex& a, const Complex& b, const Complex& c,
                               const Complex& d, const Complex& r, const Complex& q,
                               const TruncationPolicy& policy, const QuadratureConfig& config) {
  if (c == 0.0 || r == 0.0) {
    throw DomainError("beta integral needs cr != 0");
  }
  require_unit_disc({a, b, c, d, a * b * r / c}, "beta integral");
  detail::require_base(q);
  return integrate_theta(
      [&](double t) { return beta_integrand(t, a, b, c, d, r, q, policy); }, config);
}

QuadratureResult qhermite_orthogonality(long m, long n, const Complex& q,
                                        const TruncationPolicy& policy,
                                        const QuadratureConfig& config) {
  if (m < 0 || n < 0 || m > 12 || n > 12) {
    throw DomainError("orthogonality check supports degrees 0..12");
  }
  detail::require_base(q);
  return integrate_theta(
      [&](double t) { return q_hermite(m, t, q) * q_hermite(n, t, q) * weight(t, q, policy); },
      config);
}

Complex qhermite_norm(long m, long n, const Complex& q, const TruncationPolicy& policy) {
  if (m != n) {
    return 0.0;
  }
  return 2.0 * std::numbers::pi * qpoch(q, q, n) /
         qpoch_infinite(q, q, policy, FactorRole::denominator);
}

SideComparison qhermite_gf_check(const Complex& t, double theta, const Complex& q,
                                 const TruncationPolicy& policy, double tolerance) {
  if (!(std::abs(t) < 1.0)) {
    throw DomainError("generating function needs |t| < 1");
  }
  detail::require_base(q);
  const double x = std::cos(theta);
  // H_n by H_{n+1} = 2x H_n - (1 - q^n) H_{n-1}
  Complex h_prev = 0.0;
  Complex h = 1.0;
  Complex qn = 1.0;
  Complex qq = 1.0;  // (q; q)_n
  Complex tn = 1.0;
  const Complex sum = sum_series(t, policy, [&](int n) {
    if (n > 0) {
      // qn holds q^{n-1} here
      const Complex next = 2.0 * x * h - (1.0 - qn) * h_prev;
      h_prev = h;
      h = next;
      qn *= q;
      qq *= 1.0 - qn;
      tn *= t;
    }
    return h * tn / qq;
  });
  SideComparison out;
  out.lhs = sum;
  out.rhs = 1.0 / hprod(theta, {t}, q, policy);
  out.abs_err = std::abs(out.lhs - out.rhs);
  out.rel_err = out.abs_err / std::max({std::abs(out.lhs), std::abs(out.rhs), 1e-300});
  out.pass = out.rel_err <= tolerance;
  return out;
}

}  // namespace qseries
