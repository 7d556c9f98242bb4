#include <gtest/gtest.h>

#include "rnpow/adversary.hpp"

using namespace rnpow;

TEST(Adversary, Binary32FactorList) {
  const AdversarySequence s = build_sequence(Precision(24), 10);
  const char* want[] = {"4097/4096",       "4097/4096",       "8387583/8388608",
                        "8387241/8388608", "262221/262144",   "8387601/8388608",
                        "8387279/8388608"};
  ASSERT_EQ(s.factors.size(), 10u);
  for (int i = 0; i < 7; ++i) EXPECT_EQ(to_string(s.factors[i]), want[i]) << i;
  for (std::size_t i = 0; i < s.factors.size(); ++i) {
    EXPECT_EQ(s.factors[i], offset_factor(s.offsets[i], Precision(24)));
  }
}

TEST(Adversary, ReferenceErrors) {
  struct Row {
    int p;
    int n;
    const char* prefix;
  };
  const Row rows[] = {{24, 10, "8.99336984"},
                      {24, 100, "98.9371972591"},
                      {53, 10, "8.99999972447"},
                      {53, 100, "98.9999970091"},
                      {113, 10, "8.99999999999999973119"},
                      {113, 100, "98.99999999999999701662"}};
  for (const Row& r : rows) {
    const AdversarySequence s = build_sequence(Precision(r.p), r.n);
    const std::string want = r.prefix;
    const int digits = static_cast<int>(want.size() - want.find('.') - 1);
    EXPECT_EQ(to_decimal(s.achieved_error, digits), want) << r.p << " " << r.n;
    const SequenceCheck c = verify_sequence(s);
    EXPECT_TRUE(c.report.passed);
    EXPECT_GT(c.gap, 0);
    EXPECT_EQ(c.gap, r.n - 1 - s.achieved_error.value());
    EXPECT_LT(c.gap, ExactValue(1, 10));
  }
}

TEST(Adversary, EveryRoundingIsDownward) {
  const AdversarySequence s = build_sequence(Precision(53), 40);
  for (std::size_t i = 1; i < s.trace.directions.size(); ++i) {
    EXPECT_EQ(s.trace.directions[i], RoundingDirection::Down) << i;
  }
}

TEST(Adversary, ErrorIncreasesWithN) {
  ExactValue prev(-1);
  for (int n = 2; n <= 60; ++n) {
    const AdversarySequence s = build_sequence(Precision(24), n);
    EXPECT_GT(s.achieved_error.value(), prev) << n;
    EXPECT_LT(s.achieved_error.value(), n - 1);
    prev = s.achieved_error.value();
  }
}

TEST(Adversary, Binary32N100Gap) {
  const SequenceCheck c = verify_sequence(build_sequence(Precision(24), 100));
  EXPECT_EQ(to_decimal(c.gap, 4), "0.0628");
}

TEST(Adversary, TwoFactorsIsOneRounding) {
  const AdversarySequence s = build_sequence(Precision(24), 2);
  EXPECT_LT(s.achieved_error.value(), 1);
  EXPECT_GT(s.achieved_error.value(), 0);
}

TEST(Adversary, TamperedSequenceFailsVerification) {
  AdversarySequence s = build_sequence(Precision(24), 10);
  s.achieved_error = ErrorInUlps(ExactValue(9));
  EXPECT_FALSE(verify_sequence(s).report.passed);
}

TEST(Adversary, Preconditions) {
  EXPECT_THROW(build_sequence(Precision(7), 10), std::invalid_argument);
  EXPECT_THROW(build_sequence(Precision(24), 1), std::invalid_argument);
  EXPECT_THROW(offset_factor(pow2_int(24) + 1, Precision(24)), std::invalid_argument);
}
