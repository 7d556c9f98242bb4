#include <gtest/gtest.h>

#include "rnpow/bounds.hpp"

using namespace rnpow;

TEST(Bounds, BoundSetValues) {
  const BoundSet b = bound_set(Precision(8), 3);
  const ExactValue u(1, 256);
  EXPECT_EQ(b.simple, 2 * u);
  EXPECT_EQ(b.gamma, (2 * u) / (1 - 2 * u));
  EXPECT_EQ(b.psi, (1 + u) * (1 + u) - 1);
  EXPECT_EQ(b.refined_unit, u / (1 + u));
  EXPECT_LT(b.simple, b.psi);
  EXPECT_LT(b.psi, b.gamma);
}

TEST(Bounds, BoundSetDomain) {
  EXPECT_THROW(bound_set(Precision(8), 1), std::invalid_argument);
  EXPECT_THROW(bound_set(Precision(4), 17), std::domain_error);
  EXPECT_NO_THROW(bound_set(Precision(4), 16));
}

TEST(Bounds, NMaxTable) {
  EXPECT_EQ(n_max(Precision(24)), 2088);
  EXPECT_EQ(n_max(Precision(53)), 48385542);
  EXPECT_EQ(n_max(Precision(113)), 51953580258461959);
  EXPECT_THROW(n_max(Precision(4)), std::invalid_argument);
}

TEST(Bounds, NMaxDefinition) {
  for (int p = 5; p <= 120; ++p) {
    const Integer n(std::to_string(n_max(Precision(p))));
    const Integer base = pow2_int(p);
    const Integer target = pow2_int(3 * p + 1);
    auto c = [](const Integer& v) { return Integer(v * v * v); };
    EXPECT_LE(c(base + n * n), target) << p;
    EXPECT_GT(c(base + (n + 1) * (n + 1)), target) << p;
  }
}

TEST(Bounds, BetaEnclosure) {
  const Enclosure b = beta();
  EXPECT_EQ(b.width(), pow2(-kDefaultEnclosureBits));
  // beta^2 = 2^(1/3) - 1: (1 + lo^2)^3 < 2 < (1 + hi^2)^3.
  EXPECT_LT(pow(ExactValue(1 + b.lo * b.lo), 3), 2);
  EXPECT_GT(pow(ExactValue(1 + b.hi * b.hi), 3), 2);
  EXPECT_GT(b.lo, ExactValue(50982, 100000));
  EXPECT_LT(b.hi, ExactValue(50983, 100000));
}

TEST(Bounds, AlphaValues) {
  const Enclosure a5 = alpha(Precision(5));
  // alpha_5 = 0.74509...
  EXPECT_GT(a5.lo, ExactValue(74509, 100000));
  EXPECT_LT(a5.hi, ExactValue(74510, 100000));
  EXPECT_GT(alpha(Precision(6)).lo, a5.hi);
  EXPECT_THROW(alpha(Precision(4)), std::invalid_argument);
  EXPECT_LT(alpha(Precision(60)).lo, alpha_limit().hi);
}

TEST(Bounds, AlphaExceedsBeta) {
  EXPECT_TRUE(check_alpha_exceeds_beta(5, 120).passed);
}

TEST(Bounds, NMaxAgreesWithBetaEnclosure) {
  EXPECT_TRUE(check_n_max_floor(5, 120).passed);
}

TEST(Bounds, UnitPowerInequalityWithK4Counterexample) {
  const VerificationReport r = check_unit_power_inequality();
  EXPECT_TRUE(r.passed);
  ASSERT_EQ(r.notes.size(), 1u);
  EXPECT_NE(r.notes[0].find("k=4 fails"), std::string::npos);
}

TEST(Bounds, PowerInequalityGrid) {
  PowerInequalityGrid grid = PowerInequalityGrid::standard();
  grid.exponent_span = 8;
  const VerificationReport r = check_power_inequality(grid);
  EXPECT_TRUE(r.passed) << (r.failures.empty() ? "" : r.failures.front());
  EXPECT_FALSE(check_power_inequality(PowerInequalityGrid{{2}, 7, 4}).passed);
}

TEST(Bounds, RefinedBinary32) {
  const VerificationReport r = check_refined_binary32_bound(10, 2088);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.checked, 2079);
}
