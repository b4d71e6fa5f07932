#include "bootcov/percentile.hpp"

#include <algorithm>

#include "bootcov/error.hpp"
#include "bootcov/stats.hpp"

namespace bootcov {

double order_stat_cdf(long j, long m, double h) {
  if (j < 1 || j > m) throw DomainError("order_stat_cdf: j outside [1, m]");
  return 1.0 - binom_cdf(j - 1, m, h);
}

double bracket(double h_left, double h, const BootstrapPlan& plan) {
  const double v = binom_cdf(plan.upper_index - 1, plan.m, h_left) - binom_cdf(plan.lower_index - 1, plan.m, h);
  return std::max(0.0, v);
}

double coverage_bracket(const DiscreteDist& dist, double theta, const BootstrapPlan& plan) {
  return bracket(dist.cdf_left(theta), dist.cdf(theta), plan);
}

double coverage_bracket(const DiscreteDist& dist, const Rational& theta, const BootstrapPlan& plan) {
  return bracket(dist.cdf_left(theta), dist.cdf(theta), plan);
}

double order_stat_expect(const DiscreteDist& dist, long j, long m) {
  if (dist.size() == 0) throw DomainError("order_stat_expect: empty support");
  if (j < 1 || j > m) throw DomainError("order_stat_expect: j outside [1, m]");
  const auto& d = dist.values();
  const auto& h = dist.cumulative();
  double e = d.front();
  for (std::size_t s = 0; s + 1 < d.size(); ++s) e += (d[s + 1] - d[s]) * binom_cdf(j - 1, m, h[s]);
  return e;
}

double expected_width(const DiscreteDist& dist, const BootstrapPlan& plan) {
  if (dist.size() == 0) throw DomainError("expected_width: empty support");
  const auto& d = dist.values();
  const auto& h = dist.cumulative();
  double w = 0.0;
  for (std::size_t s = 0; s + 1 < d.size(); ++s)
    w += (d[s + 1] - d[s]) * bracket(h[s], h[s], plan);
  return w;
}

}  // namespace bootcov
