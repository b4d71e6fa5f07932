#pragma once

#include "bootcov/discrete_dist.hpp"
#include "bootcov/plan.hpp"

namespace bootcov {

/// P(u_(j) <= x) when each of m iid draws is <= x with probability h:
/// 1 - F_B(j-1, m, h).
double order_stat_cdf(long j, long m, double h);

/// F_B(m_u-1, m, h_left) - F_B(m_l-1, m, h), clamped at 0. h_left is the
/// bootstrap CDF just below the target, h the CDF at it.
double bracket(double h_left, double h, const BootstrapPlan& plan);

/// Probability that [u_(m_l), u_(m_u)] covers theta when bootstrap
/// estimates follow dist.
double coverage_bracket(const DiscreteDist& dist, double theta, const BootstrapPlan& plan);
double coverage_bracket(const DiscreteDist& dist, const Rational& theta, const BootstrapPlan& plan);

/// E[u_(j)] over m draws from dist.
double order_stat_expect(const DiscreteDist& dist, long j, long m);

/// E[u_(m_u) - u_(m_l)].
double expected_width(const DiscreteDist& dist, const BootstrapPlan& plan);

}  // namespace bootcov
