#include <gtest/gtest.h>

#include "bootcov/error.hpp"
#include "bootcov/mc.hpp"
#include "bootcov/normal_param.hpp"
#include "bootcov/rng.hpp"

using namespace bootcov;

TEST(Rng, SubstreamsAreDeterministicAndDistinct) {
  EXPECT_EQ(substream_seed(1, 0), substream_seed(1, 0));
  EXPECT_NE(substream_seed(1, 0), substream_seed(1, 1));
  EXPECT_NE(substream_seed(1, 0), substream_seed(2, 0));
  Xoshiro256 a(5), b(5);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.uniform(), b.uniform());
  Xoshiro256 r(9);
  for (int i = 0; i < 10000; ++i) {
    const double u = r.uniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
    ASSERT_LT(r.below(7), 7u);
  }
}

TEST(Rng, BinomialSamplerMean) {
  Xoshiro256 r(3);
  BinomialSampler s(20, 0.3);
  double tot = 0;
  for (int i = 0; i < 100000; ++i) tot += s(r);
  EXPECT_NEAR(tot / 100000, 6.0, 0.05);
}

TEST(Simulate, BitIdenticalAcrossStreamCounts) {
  const McDesign d = NormalKnownMcDesign{5, make_plan(20, 0.2), NormalEstimator::Mean, 0.0, 1.0};
  const auto a = simulate(d, {2000, 77, 1});
  const auto b = simulate(d, {2000, 77, 4});
  EXPECT_EQ(a.coverage_hat, b.coverage_hat);
  EXPECT_EQ(a.el_hat, b.el_hat);
  EXPECT_EQ(a.el_se, b.el_se);
  const auto c = simulate(d, {2000, 78, 1});
  EXPECT_NE(a.el_hat, c.el_hat);
}

TEST(Simulate, KnownSigmaMatchesClosedForm) {
  const auto plan = make_plan(20, 0.2);
  const auto e = simulate(NormalKnownMcDesign{5, plan, NormalEstimator::Mean, 1.5, 2.0}, {20000, 5, 1});
  EXPECT_NEAR(e.coverage_hat, coverage_cq(plan).value, 3.5 * e.coverage_se);
  EXPECT_NEAR(e.el_hat, 2.0 * a_factor(5, 20, 0.2), 3.5 * e.el_se);
}

TEST(Exhaustive, CapAndUnsupported) {
  const McDesign big = OneSampleMcDesign{{200, make_plan(200, 0.1), Center::Wald}, 0.5};
  EXPECT_GT(exhaustive_size(big), kExhaustiveCap);
  EXPECT_THROW(exhaustive(big), EnumerationCapExceeded);
  const McDesign cont = NormalUnknownMcDesign{5, make_plan(20, 0.2), 0.0, 1.0};
  EXPECT_THROW(exhaustive(cont), UnsupportedDesign);
  EXPECT_FALSE(describe(big).empty());
}

TEST(McConfig, Validation) {
  EXPECT_THROW((McConfig{10, 1, 1}.validate()), DomainError);
  EXPECT_THROW((McConfig{1000, 1, 0}.validate()), DomainError);
  EXPECT_NO_THROW((McConfig{1000, 1, 2}.validate()));
}
