#include <gtest/gtest.h>

#include <algorithm>

#include "bootcov/discrete_dist.hpp"
#include "bootcov/error.hpp"
#include "bootcov/mc.hpp"
#include "bootcov/percentile.hpp"
#include "bootcov/plan.hpp"
#include "bootcov/stats.hpp"
#include "generators.hpp"

using namespace bootcov;

TEST(MakePlan, IndexRule) {
  const auto p = make_plan(100, 0.1);
  EXPECT_EQ(p.lower_index, 6);
  EXPECT_EQ(p.upper_index, 95);
  EXPECT_EQ(make_plan(50, 0.1).lower_index, 3);
  EXPECT_EQ(make_plan(50, 0.1).upper_index, 48);
  EXPECT_EQ(make_plan(5000, 0.05).lower_index, 126);
  EXPECT_EQ(make_plan(5000, 0.05).upper_index, 4875);
}

TEST(MakePlan, LevelArithmeticDoesNotShiftIndices) {
  // alpha computed as 1 - level lands just below the intended value.
  EXPECT_EQ(make_plan(100, 1.0 - 0.9).lower_index, 6);
  EXPECT_EQ(make_plan(100, 1.0 - 0.8).lower_index, 11);
  EXPECT_EQ(make_plan(100, 1.0 - 0.95).lower_index, 3);
}

TEST(MakePlan, RejectsDegenerate) {
  EXPECT_THROW(make_plan(1, 0.5), DegeneratePlan);
  EXPECT_THROW(make_plan(3, 0.99), DegeneratePlan);
  EXPECT_NO_THROW(make_plan(2, 0.99));
  EXPECT_THROW(make_plan(0, 0.1), DomainError);
  EXPECT_THROW(make_plan(10, 1.0), DomainError);
  EXPECT_NO_THROW(BootstrapPlan::from_indices(1, 1, 1));
  EXPECT_THROW(BootstrapPlan::from_indices(3, 2, 1), DegeneratePlan);
}

TEST(PercentileIndex, LargestAndSmallest) {
  EXPECT_EQ(percentile_index(6, 0.5, PercentileSide::Lower), 4);
  EXPECT_EQ(percentile_index(6, 0.5, PercentileSide::Upper), 3);
  EXPECT_EQ(percentile_index(5, 0.5, PercentileSide::Lower), 3);
  EXPECT_EQ(percentile_index(5, 0.5, PercentileSide::Upper), 3);
  EXPECT_EQ(percentile_index(10, 0.42, PercentileSide::Lower), 5);
  EXPECT_EQ(percentile_index(10, 1.0, PercentileSide::Lower), 10);
}

TEST(OrderStatCdf, Values) {
  EXPECT_DOUBLE_EQ(order_stat_cdf(3, 7, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(order_stat_cdf(3, 7, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(order_stat_cdf(1, 2, 0.5), 0.75);
  EXPECT_THROW(order_stat_cdf(0, 2, 0.5), DomainError);
  proptest::Gen g(5);
  for (int t = 0; t < 100; ++t) {
    const long m = g.integer(2, 40);
    const long j = g.integer(1, m - 1);
    const double h = g.prob();
    EXPECT_GE(order_stat_cdf(j, m, h) + 1e-15, order_stat_cdf(j + 1, m, h));
  }
}

TEST(DiscreteDist, MergesExactKeysAndQueries) {
  auto d = DiscreteDist::from_keyed({{Rational(1, 2), 0.25}, {Rational(2, 4), 0.25}, {Rational(0), 0.5}});
  ASSERT_EQ(d.size(), 2u);
  EXPECT_DOUBLE_EQ(d.masses()[1], 0.5);
  EXPECT_DOUBLE_EQ(d.cdf(0.5), 1.0);
  EXPECT_DOUBLE_EQ(d.cdf_left(0.5), 0.5);
  EXPECT_DOUBLE_EQ(d.cdf(Rational(1, 2)), 1.0);
  EXPECT_DOUBLE_EQ(d.cdf_left(Rational(1, 2)), 0.5);
  EXPECT_DOUBLE_EQ(d.cdf(-1.0), 0.0);
  EXPECT_THROW(DiscreteDist::from_keyed({}), DomainError);
  EXPECT_THROW(DiscreteDist::from_values({{0.0, 0.5}}), DomainError);
}

namespace {
DiscreteDist binom_over_two() {
  return DiscreteDist::from_keyed({{Rational(0), 0.25}, {Rational(1, 2), 0.5}, {Rational(1), 0.25}});
}
}  // namespace

TEST(CoverageBracket, Cases) {
  const auto plan = make_plan(10, 0.2);
  EXPECT_DOUBLE_EQ(coverage_bracket(DiscreteDist::point_mass(0.3), 0.3, plan), 1.0);
  EXPECT_DOUBLE_EQ(coverage_bracket(DiscreteDist::point_mass(0.7), 0.3, plan), 0.0);
  const auto raw = BootstrapPlan::from_indices(1, 1, 1);
  EXPECT_NEAR(coverage_bracket(binom_over_two(), 0.5, raw), 0.5, 1e-15);
}

TEST(OrderStatExpect, Cases) {
  EXPECT_DOUBLE_EQ(order_stat_expect(DiscreteDist::point_mass(2.5), 3, 7), 2.5);
  const auto coin = DiscreteDist::from_values({{0.0, 0.5}, {1.0, 0.5}});
  EXPECT_DOUBLE_EQ(order_stat_expect(coin, 1, 1), 0.5);
  EXPECT_DOUBLE_EQ(order_stat_expect(coin, 1, 2), 0.25);
  EXPECT_DOUBLE_EQ(order_stat_expect(coin, 2, 2), 0.75);
  EXPECT_DOUBLE_EQ(expected_width(coin, make_plan(2, 0.5)), 0.5);
  EXPECT_DOUBLE_EQ(expected_width(DiscreteDist::point_mass(1.0), make_plan(20, 0.1)), 0.0);
}

TEST(PercentileProperties, BracketInUnitIntervalAndMatchesSimulation) {
  proptest::Gen g(2024);
  for (int t = 0; t < 4; ++t) {
    const long k = g.integer(1, 6);
    std::vector<std::pair<double, double>> atoms;
    double tot = 0;
    std::vector<double> w(k);
    for (auto& x : w) tot += (x = g.uniform(0.1, 1.0));
    for (long i = 0; i < k; ++i) atoms.emplace_back(static_cast<double>(g.integer(-5, 5)), w[i] / tot);
    const auto dist = DiscreteDist::from_values(atoms);
    const long m = g.integer(2, 20);
    const long ml = g.integer(1, m / 2);
    const auto plan = BootstrapPlan::from_indices(m, ml, m + 1 - ml);
    const double theta = dist.values()[g.integer(0, static_cast<long>(dist.size()) - 1)];
    const double cov = coverage_bracket(dist, theta, plan);
    const double wid = expected_width(dist, plan);
    ASSERT_GE(cov, 0.0);
    ASSERT_LE(cov, 1.0);
    ASSERT_GE(wid, 0.0);
    const auto& cum = dist.cumulative();
    const auto est = run_replicates({100000, 99u + t, 1}, [&](long, Xoshiro256& rng) {
      std::vector<double> u(static_cast<std::size_t>(m));
      for (auto& x : u) {
        const double r = rng.uniform();
        std::size_t i = 0;
        while (i + 1 < cum.size() && cum[i] < r) ++i;
        x = dist.values()[i];
      }
      std::sort(u.begin(), u.end());
      const double lo = u[ml - 1], hi = u[m - ml];
      return Replicate{lo <= theta && theta <= hi ? 1.0 : 0.0, hi - lo};
    });
    EXPECT_NEAR(cov, est.coverage_hat, 3 * est.coverage_se + 1e-12);
    EXPECT_NEAR(wid, est.el_hat, 3 * est.el_se + 1e-12);
  }
}
