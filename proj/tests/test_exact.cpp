#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qseries/identities.hpp"
#include "qseries/sampling.hpp"

using namespace qseries;

namespace {

const TruncationPolicy kPolicy;

void expect_equals_counts(const FormalSeries& s, const oracle::Coeffs& counts) {
  for (std::size_t n = 0; n < counts.size(); ++n) {
    EXPECT_EQ(s.coeff(n), Rational(static_cast<long>(counts[n]))) << "q^" << n;
  }
}

}  // namespace

namespace qseries {
void PrintTo(IdentityId id, std::ostream* os) { *os << identity_name(id); }
}  // namespace qseries

class ExactSuite : public ::testing::TestWithParam<IdentityId> {};

TEST_P(ExactSuite, FiveSpecializationsModQ40) {
  const auto points = sample_exact(GetParam(), 1, 5, 40);
  ASSERT_EQ(points.size(), 5U);
  for (const auto& p : points) {
    ASSERT_TRUE(in_domain(GetParam(), p));
    const auto rep = check_identity(GetParam(), p, kPolicy);
    EXPECT_TRUE(rep.pass) << rep.diagnostics;
    EXPECT_EQ(std::get<FormalSeries>(rep.lhs).order(), 40U);
  }
}

INSTANTIATE_TEST_SUITE_P(Registry, ExactSuite,
                         ::testing::Values(IdentityId::jtp, IdentityId::ram_recip,
                                           IdentityId::recip5, IdentityId::lambert,
                                           IdentityId::limit_euler_d, IdentityId::four_square,
                                           IdentityId::four_triangular),
                         [](const auto& info) { return std::string(identity_name(info.param)); });

TEST(Exact, NoFormulaForNumericOnlyEntries) {
  ParameterPoint<FormalSeries> p(FormalSeries::variable(10));
  EXPECT_FALSE(in_domain(IdentityId::recip7, p));
  EXPECT_THROW(sample_exact(IdentityId::recip7, 1, 1, 10), DomainError);
}

TEST(Exact, DetectsAWrongCoefficient) {
  // JTP at x = 2 with the product side perturbed in one coefficient
  ParameterPoint<FormalSeries> p(FormalSeries::variable(20));
  p.set(Slot::x, FormalSeries::constant(2, 20));
  const FormalSeries lhs = evaluate_lhs(IdentityId::jtp, p, kPolicy);
  FormalSeries bad = lhs;
  bad.set_coeff(7, bad.coeff(7) + 1);
  EXPECT_NE(bad, evaluate_rhs(IdentityId::jtp, p, kPolicy));
  EXPECT_EQ(lhs, evaluate_rhs(IdentityId::jtp, p, kPolicy));
}

TEST(Exact, FourSquareMatchesLatticeCount) {
  const ParameterPoint<FormalSeries> p(FormalSeries::variable(51));
  const auto counts = oracle::four_square_counts(50);
  expect_equals_counts(evaluate_lhs(IdentityId::four_square, p, kPolicy), counts);
  expect_equals_counts(evaluate_rhs(IdentityId::four_square, p, kPolicy), counts);
}

TEST(Exact, FourTriangularMatchesCountAndLambertSide) {
  const ParameterPoint<FormalSeries> p(FormalSeries::variable(51));
  const auto counts = oracle::four_triangular_counts(50);
  expect_equals_counts(evaluate_lhs(IdentityId::four_triangular, p, kPolicy), counts);
  expect_equals_counts(evaluate_rhs(IdentityId::four_triangular, p, kPolicy), counts);
}
