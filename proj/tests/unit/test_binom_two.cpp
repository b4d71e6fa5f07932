#include <gtest/gtest.h>

#include <cmath>

#include "bootcov/binom_two.hpp"
#include "bootcov/error.hpp"
#include "bootcov/mc.hpp"
#include "generators.hpp"

using namespace bootcov;

TEST(Gart, KeyMatchesValue) {
  for (long x = 0; x <= 4; ++x)
    for (long y = 0; y <= 3; ++y) EXPECT_NEAR(gart_key(x, y, 4, 3).to_double(), gart_theta(x, y, 4, 3), 1e-14);
  EXPECT_DOUBLE_EQ(gart_theta(1, 1, 2, 2), 1.0);
  EXPECT_EQ(gart_key(0, 2, 2, 2), Rational(1, 25));
}

TEST(Points, Validation) {
  EXPECT_NO_THROW((DiffPoint{0.3, 0.5}.validate()));
  EXPECT_THROW((DiffPoint{0.6, 0.5}.validate()), DomainError);
  EXPECT_THROW((DiffPoint{-0.6, 0.5}.validate()), DomainError);
  EXPECT_NEAR((OddsPoint{1.0, 0.3}.p1()), 0.3, 1e-15);
  EXPECT_NEAR((OddsPoint{4.0, 0.5}.p1()), 0.8, 1e-15);
  EXPECT_THROW((OddsPoint{-1.0, 0.5}.validate()), DomainError);
}

TEST(BootstrapDistributions, EnumeratedAndClosedFormCdfsAgree) {
  proptest::Gen g(31);
  for (int t = 0; t < 30; ++t) {
    const TwoSampleDesign d{g.integer(1, 6), g.integer(1, 6), make_plan(10, 0.2)};
    const long x = g.integer(0, d.n1), y = g.integer(0, d.n2);
    const auto dd = dist_dhat(x, y, d);
    const auto dt = dist_thetahat(x, y, d);
    EXPECT_NEAR(dd.cumulative().back(), 1.0, 1e-12);
    EXPECT_NEAR(dt.cumulative().back(), 1.0, 1e-12);
    for (int k = 0; k < 6; ++k) {
      const double z = g.uniform(-1.1, 1.1);
      EXPECT_NEAR(dd.cdf(z), hd_closed(z, x, y, d), 1e-12);
      const double w = std::exp(g.uniform(-5, 5));
      EXPECT_NEAR(dt.cdf(w), hr_closed(w, x, y, d), 1e-12);
    }
    // At atoms, both the enumeration and the closed form include the atom.
    for (double v : dd.values()) EXPECT_NEAR(dd.cdf(v), hd_closed(v, x, y, d), 1e-12);
  }
}

TEST(TwoSample, MatchesExhaustiveEnumeration) {
  const TwoSampleDesign d{2, 2, make_plan(5, 0.2)};
  for (double p2 : {0.5, 0.2}) {
    const auto e = exhaustive(TwoSampleMcDesign{d, TwoSampleTarget::Difference, 0.0, p2});
    const auto f = evaluate_cd({0.0, p2}, d);
    EXPECT_NEAR(f.coverage, e.coverage, 1e-12);
    EXPECT_NEAR(f.el, e.el, 1e-12);
    const auto eo = exhaustive(TwoSampleMcDesign{d, TwoSampleTarget::OddsRatio, 1.0, p2});
    const auto fo = evaluate_ctheta({1.0, p2}, d);
    EXPECT_NEAR(fo.coverage, eo.coverage, 1e-12);
    EXPECT_NEAR(fo.el, eo.el, 1e-12);
  }
  const auto e = exhaustive(TwoSampleMcDesign{d, TwoSampleTarget::OddsRatio, 3.0, 0.4});
  EXPECT_NEAR(coverage_ctheta({3.0, 0.4}, d), e.coverage, 1e-12);
}

TEST(TwoSample, GroupSwapSymmetry) {
  proptest::Gen g(41);
  for (int t = 0; t < 25; ++t) {
    const long n = g.integer(1, 6);
    const TwoSampleDesign d{n, n, make_plan(g.integer(5, 30), 0.2)};
    const double dv = g.uniform(-0.9, 0.9);
    const double lo = dv >= 0 ? 0.0 : -dv, hi = dv >= 0 ? 1.0 - dv : 1.0;
    const double p2 = g.uniform(lo, hi);
    const double c1 = coverage_cd({dv, p2}, d);
    const double c2 = coverage_cd({-dv, dv + p2}, d);
    EXPECT_NEAR(c1, c2, 1e-9) << n << " " << dv << " " << p2;
    EXPECT_NEAR(el_cd({dv, p2}, d), el_cd({-dv, dv + p2}, d), 1e-9);
  }
}

TEST(Surface, CornersAndShape) {
  const TwoSampleDesign d{3, 4, make_plan(10, 0.2)};
  SurfaceSpec spec;
  spec.axis1_points = 11;
  spec.p2_points = 7;
  const auto s = surface_grid(d, TwoSampleTarget::Difference, spec);
  ASSERT_EQ(s.points.size(), 77u);
  EXPECT_DOUBLE_EQ(s.points.front().coverage, 1.0);
  EXPECT_DOUBLE_EQ(s.points.back().coverage, 1.0);
  for (const auto& p : s.points) {
    EXPECT_GE(p.coverage, 0.0);
    EXPECT_LE(p.coverage, 1.0);
    EXPECT_NEAR(p.coverage, coverage_cd({p.axis1, p.p2}, d), 1e-12);
  }
  EXPECT_GE(s.fraction_below(0.8), 0.0);
  EXPECT_LE(s.min_coverage(), 1.0);
}

TEST(Surface, OddsSurfaceMatchesPointwiseAndExhaustive) {
  const TwoSampleDesign d{2, 2, make_plan(5, 0.2)};
  SurfaceSpec spec;
  spec.axis1_points = 5;
  spec.p2_points = 5;
  const auto s = surface_grid(d, TwoSampleTarget::OddsRatio, spec);
  for (const auto& p : s.points) {
    EXPECT_NEAR(p.coverage, coverage_ctheta({p.axis1, p.p2}, d), 1e-12);
    if (p.p2 > 0.0 && p.p2 < 1.0) {
      const auto e = exhaustive(TwoSampleMcDesign{d, TwoSampleTarget::OddsRatio, p.axis1, p.p2});
      EXPECT_NEAR(p.coverage, e.coverage, 1e-12);
      EXPECT_NEAR(p.el, e.el, 1e-12);
    }
  }
}

TEST(Surface, ThreadCountDoesNotChangeResult) {
  const TwoSampleDesign d{4, 5, make_plan(20, 0.1)};
  SurfaceSpec a;
  a.axis1_points = 9;
  a.p2_points = 9;
  SurfaceSpec b = a;
  b.threads = 3;
  const auto s1 = surface_grid(d, TwoSampleTarget::OddsRatio, a);
  const auto s2 = surface_grid(d, TwoSampleTarget::OddsRatio, b);
  for (std::size_t i = 0; i < s1.points.size(); ++i) {
    EXPECT_EQ(s1.points[i].coverage, s2.points[i].coverage);
    EXPECT_EQ(s1.points[i].el, s2.points[i].el);
  }
}
