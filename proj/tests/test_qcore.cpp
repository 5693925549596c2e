#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "checks.hpp"
#include "oracles.hpp"
#include "qseries/composite.hpp"
#include "qseries/qcore.hpp"
#include "qseries/sampling.hpp"

using namespace qseries;

namespace {

const TruncationPolicy kPolicy;

double rel(Complex x, Complex y) { return checks::rel_diff(x, y); }

}  // namespace

TEST(QPoch, Finite) {
  EXPECT_EQ(qpoch<Complex>(0.7, 0.3, 0), Complex(1.0));
  EXPECT_NEAR(qpoch<Complex>(0.3, 0.5, 2).real(), 0.595, 1e-15);
  EXPECT_EQ(qpoch<Complex>(1.0, 0.4, 3), Complex(0.0));
}

TEST(QPoch, Infinite) {
  EXPECT_EQ(qpoch_infinite<Complex>(0.0, 0.5, kPolicy), Complex(1.0));
  // direct 64-factor product
  double direct = 1.0;
  for (int k = 0; k < 64; ++k) {
    direct *= 1.0 - 0.5 * std::pow(0.5, k);
  }
  EXPECT_NEAR(qpoch_infinite<Complex>(0.5, 0.5, kPolicy).real(), direct, 1e-15);
  EXPECT_NEAR(direct, 0.2887880951, 1e-10);
  EXPECT_THROW(qpoch_infinite<Complex>(0.5, 1.0, kPolicy), NonConvergent);
}

TEST(QPoch, Multi) {
  const std::vector<Complex> none;
  EXPECT_EQ(qpoch_multi<Complex>(none, 0.5, 3), Complex(1.0));
  const std::vector<Complex> one = {Complex(0.3, 0.1)};
  EXPECT_EQ(qpoch_multi<Complex>(one, 0.5, 4), qpoch<Complex>(Complex(0.3, 0.1), 0.5, 4));
  const std::vector<Complex> two = {0.3, 0.2};
  EXPECT_NEAR(qpoch_multi<Complex>(two, 0.5, 1).real(), 0.56, 1e-15);
}

TEST(QPoch, FiniteTimesTailIsInfinite) {
  const Complex a(0.4, -0.3);
  const Complex q(0.6, 0.1);
  for (long n = 0; n <= 25; ++n) {
    const Complex split = qpoch(a, q, n) * qpoch_infinite(a * std::pow(q, n), q, kPolicy);
    EXPECT_LT(rel(split, qpoch_infinite(a, q, kPolicy)), 1e-12) << n;
  }
}

TEST(QBinomial, Examples) {
  EXPECT_EQ(qbinomial<Complex>(5, 0, 0.3), Complex(1.0));
  EXPECT_NEAR(qbinomial<Complex>(4, 2, 0.5).real(), 2.1875, 1e-14);
  for (long k = 0; k <= 7; ++k) {
    EXPECT_LT(rel(qbinomial<Complex>(7, k, 0.45), qbinomial<Complex>(7, 7 - k, 0.45)), 1e-14);
  }
  EXPECT_THROW(qbinomial<Complex>(2, 3, 0.5), DomainError);
}

TEST(QBinomial, Recurrence) {
  const Complex q(0.7, 0.2);
  for (long n = 2; n <= 21; ++n) {
    for (long k = 1; k <= n - 1; ++k) {
      const Complex lhs = qbinomial(n, k, q);
      const Complex rhs = qbinomial(n - 1, k - 1, q) + std::pow(q, k) * qbinomial(n - 1, k, q);
      EXPECT_LT(rel(lhs, rhs), 1e-12) << n << "," << k;
    }
  }
}

TEST(QBinomial, ExactMatchesSubsetCount) {
  const FormalSeries q = FormalSeries::variable(20);
  for (int n = 0; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto expected = oracle::gaussian_binomial_by_subsets(n, k);
      const FormalSeries got = qbinomial(n, k, q);
      for (std::size_t i = 0; i < 20; ++i) {
        const long want = i < expected.size() ? expected[i] : 0;
        EXPECT_EQ(got.coeff(i), Rational(want)) << n << "," << k << " q^" << i;
      }
    }
  }
}

TEST(PhiSeries, QBinomialTheorem) {
  const Complex a(0.3, 0.4);
  const Complex z(-0.5, 0.2);
  const Complex q(0.55);
  const Complex lhs = phi_series<Complex>({a}, {}, q, z, kPolicy);
  const Complex rhs = qpoch_infinite(a * z, q, kPolicy) / qpoch_infinite(z, q, kPolicy);
  EXPECT_LT(rel(lhs, rhs), 1e-13);
}

TEST(PhiSeries, ZeroArgumentAndTermination) {
  EXPECT_EQ(phi_series<Complex>({0.3, 0.2}, {0.5}, 0.4, 0.0, kPolicy), Complex(1.0));
  // a = q^{-2}: three terms
  const Complex q(0.5);
  const Complex a = 1.0 / (q * q);
  const Complex b(0.3);
  const Complex z(0.7);
  Complex direct = 0.0;
  for (long n = 0; n <= 2; ++n) {
    direct += qpoch(a, q, n) * qpoch(b, q, n) / (qpoch(q, q, n) * qpoch(Complex(0.2), q, n)) *
              std::pow(z, n);
  }
  EXPECT_LT(rel(phi_series<Complex>({a, b}, {0.2}, q, z, kPolicy), direct), 1e-14);
}

TEST(PhiSeries, Errors) {
  // three numerator over one denominator diverges
  EXPECT_THROW(phi_series<Complex>({0.1, 0.2, 0.3}, {0.4}, 0.5, 0.1, kPolicy), DomainError);
  const Complex q(0.5);
  EXPECT_THROW(phi_series<Complex>({0.1}, {1.0 / q}, q, 0.1, kPolicy), PoleError);
  TruncationPolicy tight;
  tight.max_terms = 5;
  EXPECT_THROW(phi_series<Complex>({0.1}, {}, q, 0.99, tight), NonConvergent);
}

TEST(DeltaTheta, Properties) {
  const Complex q(0.45);
  const Complex u(0.7, 0.2);
  const Complex v(-0.3, 0.5);
  EXPECT_EQ(delta_theta(u, u, q, kPolicy), Complex(0.0));
  const Complex product = (v - u) * qpoch_ratio<Complex>({q, q * u / v, q * v / u}, {}, q, kPolicy);
  EXPECT_LT(rel(delta_theta(u, v, q, kPolicy), product), 1e-13);
  EXPECT_THROW(delta_theta<Complex>(0.0, v, q, kPolicy), DomainError);
}

TEST(DeltaTheta, UnitCircleGivesWeight) {
  const Complex q(0.35);
  for (double theta : {0.3, 1.1, 2.5}) {
    const Complex e = std::polar(1.0, theta);
    const Complex lhs = (e - 1.0 / e) * delta_theta(e, 1.0 / e, q, kPolicy);
    const Complex rhs = qpoch_infinite(q, q, kPolicy) * hprod(2.0 * theta, {1.0}, q, kPolicy);
    EXPECT_LT(std::abs(lhs - rhs), 1e-13 * std::abs(rhs)) << theta;
  }
}

TEST(Jackson, Examples) {
  auto one = [](Complex) { return Complex(1.0); };
  auto id = [](Complex x) { return x; };
  EXPECT_NEAR(jackson_integral<Complex>(one, 0.0, 1.0, 0.5, kPolicy).real(), 1.0, 1e-14);
  EXPECT_NEAR(jackson_integral<Complex>(id, 0.0, 1.0, 0.5, kPolicy).real(), 2.0 / 3.0, 1e-14);
  EXPECT_EQ(jackson_integral<Complex>(id, 0.3, 0.3, 0.5, kPolicy), Complex(0.0));
}

TEST(Jackson, ApproachesClassicalIntegral) {
  auto sq = [](Complex x) { return x * x; };
  // terms decay like q^{3n}, so q = 0.999 needs about 10^4 of them
  TruncationPolicy long_sums;
  long_sums.max_terms = 100000;
  double previous = 1.0;
  for (double q : {0.9, 0.99, 0.999}) {
    const double err =
        std::abs(jackson_integral<Complex>(sq, 0.0, 1.0, q, long_sums).real() - 1.0 / 3.0);
    EXPECT_LT(err, previous) << q;
    previous = err;
  }
  EXPECT_LT(previous, 1e-3);
}

TEST(QDerivative, Examples) {
  auto c = [](Complex) { return Complex(4.0); };
  auto sq = [](Complex x) { return x * x; };
  EXPECT_EQ(q_derivative<Complex>(c, 0.7, 0.5), Complex(0.0));
  EXPECT_NEAR(q_derivative<Complex>(sq, 1.0, 0.5).real(), 0.75, 1e-15);
  const Complex x(0.8, 0.3);
  const Complex q(0.6);
  auto cube = [](Complex y) { return y * y * y; };
  EXPECT_LT(rel(q_derivative<Complex>(cube, x, q), (1.0 - q * q * q) * x * x), 1e-14);
  EXPECT_THROW(q_derivative<Complex>(sq, 0.0, q), DomainError);
}

TEST(QPartial, Examples) {
  ParameterPoint<Complex> p(0.5);
  p.set(Slot::a, 1.0).set(Slot::b, 2.0);
  auto ab = [](const ParameterPoint<Complex>& pt) { return pt[Slot::a] * pt[Slot::b]; };
  auto only_b = [](const ParameterPoint<Complex>& pt) { return pt[Slot::b]; };
  EXPECT_NEAR(q_partial(ab, Slot::a, p).real(), 1.0, 1e-15);
  EXPECT_EQ(q_partial(only_b, Slot::a, p), Complex(0.0));
  EXPECT_THROW(q_partial(ab, Slot::c, p), DomainError);
}

TEST(QPartial, SymmetricGeneratingFunction) {
  // 1 / (at, bt; q)_inf satisfies D_a f = D_b f
  ParameterPoint<Complex> p(0.4);
  p.set(Slot::a, Complex(0.3, 0.2)).set(Slot::b, Complex(-0.5, 0.1)).set(Slot::t, 0.6);
  auto f = [](const ParameterPoint<Complex>& pt) {
    return 1.0 / qpoch_ratio<Complex>({pt[Slot::a] * pt[Slot::t], pt[Slot::b] * pt[Slot::t]}, {},
                                      pt.q(), kPolicy);
  };
  EXPECT_LT(rel(q_partial(f, Slot::a, p), q_partial(f, Slot::b, p)), 1e-12);
}

TEST(RogersSzego, Examples) {
  const Complex a(0.3, 0.1);
  const Complex b(0.7, -0.2);
  const Complex q(0.45);
  EXPECT_LT(rel(rogers_szego<Complex>(5, a, 0.0, q), std::pow(a, 5)), 1e-14);
  EXPECT_EQ(rogers_szego(0, a, b, q), Complex(1.0));
  EXPECT_LT(rel(rogers_szego(2, a, b, q), a * a + (1.0 + q) * a * b + b * b), 1e-14);
}

TEST(RogersSzego, GeneratingFunction) {
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    const Complex q(rng.uniform(0.05, 0.8));
    const Complex t = std::polar(rng.uniform(0.3, 1.0), rng.uniform(0.0, 6.28));
    const Complex a = std::polar(rng.uniform(0.0, 0.6) / std::abs(t), rng.uniform(0.0, 6.28));
    const Complex b = std::polar(rng.uniform(0.0, 0.6) / std::abs(t), rng.uniform(0.0, 6.28));
    const Complex target = 1.0 / qpoch_ratio<Complex>({a * t, b * t}, {}, q, kPolicy);
    Complex partial = 0.0;
    for (long n = 0; n <= 80; ++n) {
      partial += rogers_szego(n, a, b, q) * std::pow(t, n) / qpoch(q, q, n);
    }
    // |h_n t^n/(q;q)_n| <= (n+1) 0.6^n / (q;q)_inf, so the tail past 80 is tiny
    EXPECT_LT(std::abs(partial - target), 1e-12 * std::max(1.0, std::abs(target))) << i;
  }
}

TEST(QHermite, Examples) {
  const Complex q(0.5);
  const double theta = 0.9;
  EXPECT_EQ(q_hermite(0, theta, q), Complex(1.0));
  EXPECT_NEAR(q_hermite(1, theta, q).real(), 2.0 * std::cos(theta), 1e-15);
  for (long n = 0; n <= 8; ++n) {
    const Complex e = std::polar(1.0, theta);
    const Complex h = q_hermite(n, theta, q);
    EXPECT_LT(std::abs(h - rogers_szego(n, 1.0 / e, e, q)), 1e-13) << n;
    EXPECT_LT(std::abs(h.imag()), 1e-13);
    EXPECT_LT(std::abs(h - q_hermite_polynomial(n, q)(std::cos(theta))), 1e-12) << n;
  }
}

TEST(HProd, Examples) {
  const Complex q(0.6);
  EXPECT_EQ(hprod(0.4, {}, q, kPolicy), Complex(1.0));
  EXPECT_NEAR(hprod(0.4, {0.0}, q, kPolicy).real(), 1.0, 1e-15);
  const Complex a(0.5, 0.3);
  const double theta = 1.3;
  const Complex e = std::polar(1.0, theta);
  const Complex direct = qpoch_infinite(a * e, q, kPolicy) * qpoch_infinite(a / e, q, kPolicy);
  EXPECT_LT(rel(hprod(theta, {a}, q, kPolicy), direct), 1e-12);
  EXPECT_THROW(hprod(0.1, {a}, 1.2, kPolicy), NonConvergent);
}

TEST(Bounds, ProductInequalities) {
  const auto res = checks::product_bound(1, 200);
  EXPECT_EQ(res.draws, 200U);
  EXPECT_EQ(res.violations, 0U) << res.first_violation;
}

TEST(Bounds, PhiSeriesBound) {
  const auto res = checks::phi_bound(1, 200);
  EXPECT_EQ(res.draws, 200U);
  EXPECT_EQ(res.violations, 0U) << res.first_violation;
}

TEST(Truncation, PolicyValidation) {
  TruncationPolicy bad;
  bad.tail_tol = 0.0;
  EXPECT_THROW(bad.validate(), DomainError);
  bad = TruncationPolicy{};
  bad.max_terms = 0;
  EXPECT_THROW(bad.validate(), DomainError);
}

TEST(Truncation, ThreeSmallTermsNeeded) {
  // a single tiny term must not stop the sum
  int calls = 0;
  const Complex s = sum_series(Complex(0.5), kPolicy, [&](int n) {
    ++calls;
    return n == 1 ? Complex(0.0) : (n < 5 ? Complex(1.0) : Complex(0.0));
  });
  EXPECT_NEAR(s.real(), 4.0, 0.0);
  EXPECT_GE(calls, 8);
}
