#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bootcov/error.hpp"
#include "bootcov/quadrature.hpp"
#include "bootcov/stats.hpp"

using namespace bootcov;

TEST(Integrate, ConstantAndPolynomials) {
  EXPECT_NEAR(integrate([](double) { return 1.0; }, 0.0, 1.0).value, 1.0, 1e-12);
  EXPECT_NEAR(integrate([](double x) { return x * x * x; }, -1.0, 2.0).value, 3.75, 1e-12);
  EXPECT_NEAR(integrate([](double x) { return x; }, 1.0, 0.0).value, -0.5, 1e-12);
}

TEST(Integrate, ClosedFormIntegrals) {
  const QuadratureSpec spec;
  EXPECT_NEAR(integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, spec).value, 2.0, 1e-9);
  EXPECT_NEAR(integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, spec).value, 2.0, 1e-6);
  // Kink at 1/3 given as a breakpoint.
  const auto r = integrate([](double x) { return std::abs(x - 1.0 / 3.0); }, 0.0, 1.0, spec, {1.0 / 3.0});
  EXPECT_NEAR(r.value, (1.0 / 9.0 + 4.0 / 9.0) / 2.0, 1e-13);
  EXPECT_TRUE(r.converged);
}

TEST(Integrate, ReportsNonConvergence) {
  QuadratureSpec spec;
  spec.max_subdivisions = 3;
  const auto r = integrate([](double x) { return std::sin(1.0 / x); }, 1e-6, 1.0, spec);
  EXPECT_FALSE(r.converged);
  EXPECT_GT(r.abs_error, 0.0);
}

TEST(Integrate, RejectsBadSpec) {
  QuadratureSpec spec;
  spec.tail_cutoff = 3.0;
  EXPECT_THROW(integrate([](double) { return 1.0; }, 0, 1, spec), DomainError);
  spec = {};
  spec.abs_tol = 0.0;
  EXPECT_THROW(spec.validate(), DomainError);
}

TEST(IntegrateUnitQuantile, QuantileSpread) {
  const auto r = integrate_unit_quantile([](const UnitPoint& u) { return u.t * (u.z - u.zc); });
  EXPECT_NEAR(r.value, 1.0 / std::sqrt(std::numbers::pi), 1e-9);
  EXPECT_TRUE(r.converged);
}

TEST(IntegrateUnitQuantile, BinomialPmfIntegratesToReciprocal) {
  for (long m : {1L, 5L, 40L, 400L})
    for (long k : {0L, m / 3, m}) {
      const auto r = integrate_unit_quantile(
          [&](const UnitPoint& u) { return binom_pmf_pq(k, m, u.zc, u.z); }, {},
          {static_cast<double>(m - k) / static_cast<double>(m)});
      EXPECT_NEAR(r.value, 1.0 / (m + 1.0), 1e-9) << m << " " << k;
    }
}
