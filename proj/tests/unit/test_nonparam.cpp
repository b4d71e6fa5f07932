#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bootcov/error.hpp"
#include "bootcov/nonparam.hpp"
#include "bootcov/normal_param.hpp"
#include "generators.hpp"

using namespace bootcov;

TEST(SCount, Values) {
  EXPECT_EQ(s_count(3, 3), 10u);
  EXPECT_EQ(s_count(5, 5), 126u);
  EXPECT_EQ(s_count(12, 12), 1352078u);
  EXPECT_EQ(s_count(1, 7), 1u);
}

TEST(MeanBoot, ThreePointSampleExact) {
  const auto cd = dist_mean_boot(std::vector<Rational>{0, 1, 5});
  ASSERT_EQ(cd.dist.size(), 10u);
  EXPECT_EQ(cd.total, 27u);
  EXPECT_EQ(cd.dist.keys().front(), Rational(0));
  EXPECT_EQ(cd.mass(0), Rational(1, 27));
  for (std::size_t i = 0; i < cd.dist.size(); ++i)
    if (cd.dist.keys()[i] == Rational(2)) {
      EXPECT_EQ(cd.mass(i), Rational(6, 27));
      EXPECT_EQ(cd.cdf_at(i), Rational(17, 27));
    }
  EXPECT_EQ(cd.cdf_at(cd.dist.size() - 1), Rational(1));
}

TEST(MeanBoot, TiesMergeAndMassesSumToOne) {
  const auto cd = dist_mean_boot(std::vector<double>{1.0, 1.0, 2.0});
  EXPECT_EQ(cd.dist.size(), 4u);
  proptest::Gen g(12);
  for (long n = 1; n <= 7; ++n) {
    const auto cd2 = dist_mean_boot(g.normal_sample(n));
    std::uint64_t tot = 0;
    for (auto c : cd2.counts) tot += c;
    EXPECT_EQ(tot, cd2.total);
    EXPECT_EQ(cd2.dist.size(), s_count(n, n));
    EXPECT_NEAR(cd2.dist.cumulative().back(), 1.0, 1e-12);
  }
  EXPECT_THROW(dist_mean_boot(std::vector<double>(13, 0.0)), EnumerationCapExceeded);
}

TEST(MeanBoot, MeanEqualsSampleMean) {
  proptest::Gen g(13);
  for (int t = 0; t < 10; ++t) {
    const auto y = g.normal_sample(g.integer(1, 6), 2.0, 3.0);
    double s = 0;
    for (double v : y) s += v;
    EXPECT_NEAR(dist_mean_boot(y).dist.mean(), s / static_cast<double>(y.size()), 1e-12);
  }
}

TEST(CpN, UpperBoundAndSmallN) {
  EXPECT_DOUBLE_EQ(cpn_upper_bound(1), 0.0);
  EXPECT_DOUBLE_EQ(cpn_upper_bound(5), 1.0 - 1.0 / 16.0);
  EXPECT_NEAR(quantile_spread_integral().value, 1.0 / std::sqrt(std::numbers::pi), 1e-10);
  EXPECT_LE(coverage_cpn_n2(10, 0.2), cpn_upper_bound(2));
  CpnOptions o;
  o.mode = CpnMode::ExactEnum;
  EXPECT_NEAR(evaluate_cpn(2, 10, 0.2, o).coverage, coverage_cpn_n2(10, 0.2), 1e-12);
  EXPECT_THROW(evaluate_cpn(3, 10, 0.2, o), UnsupportedDesign);
}

TEST(CpN, RaoBlackwellAgainstReference) {
  const auto r = coverage_cpn(5, 5000, 0.05, CpnMode::RaoBlackwellMc, 20000, 1);
  EXPECT_NEAR(r.coverage, 0.8378, 4 * r.coverage_se + 0.002);
  EXPECT_LE(r.coverage, cpn_upper_bound(5) + 3 * r.coverage_se);
  EXPECT_EQ(r.method, Method::MonteCarlo);
}

TEST(CpN, ConditionalIsLocationScaleInvariant) {
  proptest::Gen g(19);
  const auto plan = make_plan(40, 0.1);
  for (int t = 0; t < 20; ++t) {
    const auto y = g.normal_sample(g.integer(2, 6));
    const double a = g.uniform(-3, 3), b = g.uniform(0.2, 4);
    std::vector<double> z(y);
    for (double& v : z) v = a + b * v;
    const double mu = g.uniform(-0.5, 0.5);
    const auto r1 = cpn_conditional(y, mu, plan);
    const auto r2 = cpn_conditional(z, a + b * mu, plan);
    EXPECT_NEAR(r1.coverage, r2.coverage, 1e-9);
    EXPECT_NEAR(b * r1.width, r2.width, 1e-9 * b);
    EXPECT_GE(r1.coverage, 0.0);
    EXPECT_LE(r1.coverage, 1.0);
  }
}

TEST(CpM, ExactCoverageAndEl) {
  EXPECT_NEAR(coverage_cpm(5, 50, 0.1), 0.799784464260161, 1e-10);
  EXPECT_NEAR(coverage_cpm(5, 5000, 0.1), 0.935015003065732, 1e-10);
  EXPECT_NEAR(coverage_cpm(31, 100, 0.1), 0.870492081213871, 1e-10);
  EXPECT_NEAR(el_cpm(5, 5000, 0.1), 2.31530595510397, 1e-7);
  EXPECT_NEAR(el_cpm(31, 100, 0.1), 0.705974919283242, 1e-7);
  EXPECT_NEAR(el_cpm(5, 50, 0.1, QuantileFamily::normal_family(2.0)), 2.0 * el_cpm(5, 50, 0.1), 1e-9);
}

TEST(CpM, MedianBootCdf) {
  EXPECT_EQ(median_boot_cdf_exact(3, 0), Rational(0));
  EXPECT_EQ(median_boot_cdf_exact(3, 3), Rational(1));
  // H_M(y_(1)) for n = 3: P(at least two of three draws equal y_(1)) = 7/27.
  EXPECT_EQ(median_boot_cdf_exact(3, 1), Rational(7, 27));
  EXPECT_EQ(median_boot_cdf_exact(3, 2), Rational(20, 27));
  const auto d = dist_median_boot({3.0, -1.0, 2.0});
  EXPECT_DOUBLE_EQ(d.values().front(), -1.0);
  EXPECT_NEAR(d.cumulative().front(), 7.0 / 27.0, 1e-15);
  EXPECT_THROW(dist_median_boot({1.0, 2.0}), UnsupportedDesign);
}
