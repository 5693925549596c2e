#ifndef QSERIES_QUADRATURE_HPP
#define QSERIES_QUADRATURE_HPP

// Numeric-only integration over theta in [0, pi] for the Askey-Wilson type
// integrals and the q-Hermite orthogonality relation.

#include <functional>
#include <numbers>
#include <string>

#include "qseries/qcore.hpp"

namespace qseries {

/// Adaptive bisection with a Gauss-Legendre panel rule.
struct QuadratureConfig {
  int panel_order = 20;
  double abs_tol = 1e-10;
  double rel_tol = 1e-12;
  int max_panels = 4000;

  void validate() const;
};

struct QuadratureResult {
  Complex value;
  double err_estimate = 0.0;
  int panels = 0;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights);

/// Integrates f over [lo, hi], refining the panel with the largest estimate
/// |G(P) - G(L) - G(R)| until the summed estimate is below
/// max(abs_tol, rel_tol * |value|). Throws MaxPanelsExceeded.
QuadratureResult integrate_theta(const std::function<Complex(double)>& f,
                                 const QuadratureConfig& config, double lo = 0.0,
                                 double hi = std::numbers::pi);

/// Value and reference for one integral, plus the imaginary-part diagnostic.
struct IntegralCheck {
  Complex value;
  Complex reference;
  double err_estimate = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  bool imag_ok = true;
  std::string diagnostics;
};

IntegralCheck make_check(const QuadratureResult& r, Complex reference);

/// h(cos 2theta; 1) / h(cos theta; a, b, c, d)
Complex askey_wilson_integrand(double theta, const Complex& a, const Complex& b, const Complex& c,
                               const Complex& d, const Complex& q, const TruncationPolicy& policy);

/// 2 pi (abcd)_inf / (q, ab, ac, ad, bc, bd, cd)_inf
Complex askey_wilson_closed_form(const Complex& a, const Complex& b, const Complex& c,
                                 const Complex& d, const Complex& q,
                                 const TruncationPolicy& policy);

/// Requires max{|a|, |b|, |c|, |d|} < 1 (DomainError otherwise).
QuadratureResult askey_wilson_integral(const Complex& a, const Complex& b, const Complex& c,
                                       const Complex& d, const Complex& q,
                                       const TruncationPolicy& policy,
                                       const QuadratureConfig& config);

/// Askey-Wilson integrand times 3phi2(c e^{i theta}, c e^{-i theta}, c/r; ac, bc; q, abr/c).
Complex beta_integrand(double theta, const Complex& a, const Complex& b, const Complex& c,
                       const Complex& d, const Complex& r, const Complex& q,
                       const TruncationPolicy& policy);

/// 2 pi (abdr)_inf / (q, ac, ad, bc, bd, cd, abr/c)_inf
Complex beta_closed_form(const Complex& a, const Complex& b, const Complex& c, const Complex& d,
                         const Complex& r, const Complex& q, const TruncationPolicy& policy);

/// Requires max{|a|, |b|, |c|, |d|, |abr/c|} < 1 and cr != 0.
QuadratureResult beta_integral(const Complex& a, const Complex& b, const Complex& c,
                               const Complex& d, const Complex& r, const Complex& q,
                               const TruncationPolicy& policy, const QuadratureConfig& config);

/// int_0^pi H_m H_n h(cos 2theta; 1) dtheta, for m, n <= 12.
QuadratureResult qhermite_orthogonality(long m, long n, const Complex& q,
                                        const TruncationPolicy& policy,
                                        const QuadratureConfig& config);

/// 2 pi (q; q)_n delta_{mn} / (q; q)_inf
Complex qhermite_norm(long m, long n, const Complex& q, const TruncationPolicy& policy);

struct SideComparison {
  Complex lhs;
  Complex rhs;
  double abs_err = 0.0;
  double rel_err = 0.0;
  bool pass = false;
};

/// sum_n H_n(cos theta | q) t^n / (q; q)_n against 1 / (t e^{i theta}, t e^{-i theta}; q)_inf.
/// Requires |t| < 1.
SideComparison qhermite_gf_check(const Complex& t, double theta, const Complex& q,
                                 const TruncationPolicy& policy, double tolerance);

}  // namespace qseries

#endif  // QSERIES_QUADRATURE_HPP
