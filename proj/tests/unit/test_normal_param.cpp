#include <gtest/gtest.h>

#include <cmath>

#include "bootcov/error.hpp"
#include "bootcov/normal_param.hpp"
#include "bootcov/stats.hpp"
#include "generators.hpp"

using namespace bootcov;

TEST(CoverageCq, ExactRationals) {
  EXPECT_EQ(coverage_cq(make_plan(50, 0.1)).exact, Rational(45, 51));
  EXPECT_EQ(coverage_cq(make_plan(100, 0.1)).exact, Rational(89, 101));
  EXPECT_EQ(coverage_cq(make_plan(5000, 0.05)).exact, Rational(4749, 5001));
  EXPECT_NEAR(coverage_cq(make_plan(5000, 0.1)).value, 0.89962007598480, 1e-12);
}

TEST(QSpec, MedianDistribution) {
  const auto q = QSpec::median(5);
  EXPECT_NEAR(q.cdf(0.0), 0.5, 1e-15);
  for (double x : {-1.0, 0.3, 2.0}) {
    EXPECT_NEAR(q.quantile(q.cdf(x)), x, 1e-9);
    EXPECT_NEAR(q.cdf(x) + q.cdf(-x), 1.0, 1e-14);
  }
  EXPECT_THROW(QSpec::median(4), UnsupportedDesign);
  const auto mq = QSpec::mean(4);
  EXPECT_NEAR(mq.cdf(0.5), normal_cdf(1.0), 1e-15);
}

TEST(ElCq, MeanAndMedianValues) {
  EXPECT_NEAR(a_factor(5, 5000, 0.1), 1.47021167856371, 1e-7);
  EXPECT_NEAR(a_factor(31, 5000, 0.1), 0.590451218900282, 1e-7);
  EXPECT_NEAR(a_factor(301, 5000, 0.1), 0.189487961020868, 1e-7);
  EXPECT_NEAR(a_factor(5, 100, 0.1), 1.42323706904152, 1e-7);
  EXPECT_NEAR(a_factor(5, 20, 0.2), 1.01155068948992, 1e-7);
  EXPECT_NEAR(el_cnm(5, 5000, 0.1), 1.76009924158105, 1e-7);
  EXPECT_NEAR(el_cnm(31, 100, 0.1), 0.711289049308378, 1e-7);
}

TEST(ElCq, ScalesLinearlyInSigmaAndRootN) {
  const auto plan = make_plan(200, 0.1);
  const double base = el_cq(QSpec::mean(1), plan).value;
  for (long n : {4L, 9L, 25L}) EXPECT_NEAR(el_cq(QSpec::mean(n), plan).value, base / std::sqrt(n), 1e-8);
  EXPECT_NEAR(el_cq(QSpec::mean(7), plan, 2.5).value, 2.5 * el_cq(QSpec::mean(7), plan).value, 1e-8);
}

TEST(UnknownSigma, CoverageAndEl) {
  EXPECT_NEAR(coverage_cnu(5, 5000, 0.1), 0.784438718141132, 1e-7);
  EXPECT_NEAR(coverage_cnu(301, 5000, 0.1), 0.898006966120624, 1e-7);
  EXPECT_NEAR(coverage_cnu(5, 20, 0.2), 0.611008854286377, 1e-7);
  EXPECT_NEAR(b_factor(5), 0.840748682459689, 1e-13);
  EXPECT_NEAR(el_cnu(5, 5000, 0.1), b_factor(5) * a_factor(5, 5000, 0.1), 1e-12);
  // Large n approaches the known-sigma coverage.
  EXPECT_LT(coverage_cnu(5, 5000, 0.1), coverage_cnu(301, 5000, 0.1));
}

TEST(Comparators, ZAndT) {
  EXPECT_NEAR(z_interval_el(5, 0.1), 2 * 1.64485362695147 / std::sqrt(5.0), 1e-12);
  EXPECT_NEAR(t_interval_el(5, 0.1), 1.792347376810053, 1e-10);
  EXPECT_NEAR(z_star_el(0.9, 5), z_interval_el(5, 0.1), 1e-12);
  proptest::Gen g(8);
  for (int t = 0; t < 50; ++t) {
    const double a = g.uniform(0.5, 0.99), b = g.uniform(0.5, 0.99);
    if (a <= b)
      EXPECT_LE(z_star_el(a, 10), z_star_el(b, 10));
    else
      EXPECT_GE(z_star_el(a, 10), z_star_el(b, 10));
  }
}
