#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qseries/formal_series.hpp"
#include "qseries/qcore.hpp"
#include "qseries/sampling.hpp"

using namespace qseries;

namespace {

FormalSeries random_series(Rng& rng, std::size_t order) {
  std::vector<Rational> c(order);
  for (auto& x : c) {
    x = Rational(mpz_class(rng.integer(-9, 9)), mpz_class(rng.integer(1, 7)));
    x.canonicalize();
  }
  return FormalSeries::from_coefficients(std::move(c));
}

FormalSeries from_ints(const oracle::Coeffs& c, std::size_t order) {
  std::vector<Rational> r(order);
  for (std::size_t i = 0; i < order && i < c.size(); ++i) {
    r[i] = Rational(static_cast<long>(c[i]));
  }
  return FormalSeries::from_coefficients(std::move(r));
}

// (q; q)_inf with q the formal variable
FormalSeries euler_product(std::size_t order) {
  const FormalSeries q = FormalSeries::variable(order);
  return qpoch_infinite(q, q, TruncationPolicy{});
}

}  // namespace

TEST(FormalSeries, Constants) {
  EXPECT_TRUE(FormalSeries::constant(0, 8).is_zero());
  const FormalSeries one = FormalSeries::constant(1, 8);
  EXPECT_EQ(one.coeff(0), 1);
  for (std::size_t k = 1; k < 8; ++k) {
    EXPECT_EQ(one.coeff(k), 0);
  }
  const FormalSeries c = FormalSeries::constant(Rational(3, 2), 4);
  EXPECT_EQ(c.order(), 4U);
  EXPECT_EQ(c.coeff(0), Rational(3, 2));
}

TEST(FormalSeries, MultiplicationAndInverse) {
  const std::size_t n = 16;
  const FormalSeries one = FormalSeries::constant(1, n);
  const FormalSeries q = FormalSeries::variable(n);
  std::vector<Rational> ones(n, Rational(1));
  const FormalSeries geometric = FormalSeries::from_coefficients(ones);
  EXPECT_EQ((one - q) * geometric, one);
  EXPECT_EQ((one - q).inverse(), geometric);
  EXPECT_EQ(one.inverse(), one);
  EXPECT_THROW(q.inverse(), NotInvertible);
  EXPECT_THROW(one * FormalSeries::constant(1, n + 1), OrderMismatch);
  EXPECT_THROW(one.coeff(n), OrderExceeded);
}

TEST(FormalSeries, RingAxioms) {
  Rng rng(5);
  for (std::size_t order : {1U, 7U, 33U, 64U}) {
    for (int i = 0; i < 5; ++i) {
      const FormalSeries x = random_series(rng, order);
      const FormalSeries y = random_series(rng, order);
      const FormalSeries z = random_series(rng, order);
      EXPECT_EQ(x * y, y * x);
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ(x + (y - y), x);
      EXPECT_EQ(x * FormalSeries::constant(1, order), x);
      if (x.coeff(0) != 0) {
        EXPECT_EQ(x.inverse().inverse(), x);
        EXPECT_EQ(x * x.inverse(), FormalSeries::constant(1, order));
      }
    }
  }
}

TEST(FormalSeries, ExtractIsConvolution) {
  Rng rng(6);
  const FormalSeries x = random_series(rng, 12);
  const FormalSeries y = random_series(rng, 12);
  const FormalSeries p = x * y;
  for (std::size_t k = 0; k < 12; ++k) {
    Rational s = 0;
    for (std::size_t i = 0; i <= k; ++i) {
      s += x.coeff(i) * y.coeff(k - i);
    }
    EXPECT_EQ(p.coeff(k), s);
  }
}

TEST(FormalSeries, QPochInfiniteOfConstant) {
  EXPECT_EQ(formal_qpoch_infinite(0, 8), FormalSeries::constant(1, 8));
  EXPECT_TRUE(formal_qpoch_infinite(1, 8).is_zero());
  Rng rng(7);
  for (int i = 0; i < 10; ++i) {
    Rational a(mpz_class(rng.integer(-5, 5)), mpz_class(rng.integer(2, 6)));
    a.canonicalize();
    if (a == 1) {
      continue;
    }
    const FormalSeries p = formal_qpoch_infinite(a, 30);
    EXPECT_EQ(p * p.inverse(), FormalSeries::constant(1, 30));
  }
}

TEST(FormalSeries, PentagonalNumbers) {
  EXPECT_EQ(euler_product(40), from_ints(oracle::pentagonal_series(39), 40));
}

TEST(FormalSeries, CubeOfEulerProduct) {
  const FormalSeries e = euler_product(60);
  const FormalSeries cube = e * e * e;
  EXPECT_EQ(cube.coeff(1), -3);
  EXPECT_EQ(cube, from_ints(oracle::cube_series(59), 60));
}

TEST(FormalSeries, EulerIdentity) {
  const std::size_t n = 60;
  const FormalSeries q = FormalSeries::variable(n);
  const FormalSeries one = FormalSeries::constant(1, n);
  FormalSeries sum = one;
  FormalSeries poch = one;  // (q; q)_{k-1}
  FormalSeries qk = one;
  for (std::size_t k = 1; k < n; ++k) {
    qk = qk * q;
    sum = sum - poch * qk;
    poch = poch * (one - qk);
  }
  EXPECT_EQ(sum, euler_product(n));
  EXPECT_EQ(sum, from_ints(oracle::euler_identity_lhs(59), n));
}

TEST(FormalSeries, ParseRational) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-0.25"), Rational(-1, 4));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_THROW(parse_rational("x"), DomainError);
}
