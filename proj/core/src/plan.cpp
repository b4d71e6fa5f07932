#include "bootcov/plan.hpp"

#include <cmath>

#include <fmt/format.h>

#include "bootcov/error.hpp"

namespace bootcov {
namespace {

constexpr double kSnapRel = 1e-9;

// floor(x), except that x within kSnapRel of an integer counts as that integer.
long snap_floor(double x, bool& integral) {
  const double r = std::nearbyint(x);
  integral = std::abs(x - r) <= kSnapRel * std::max(1.0, std::abs(x));
  return integral ? static_cast<long>(r) : static_cast<long>(std::floor(x));
}

}  // namespace

BootstrapPlan BootstrapPlan::from_indices(long m, long lower_index, long upper_index) {
  if (m < 1) throw DomainError("plan: m must be at least 1");
  if (lower_index < 1 || lower_index > upper_index || upper_index > m)
    throw DegeneratePlan(fmt::format("plan: indices must satisfy 1 <= m_l <= m_u <= m, got m_l={} m_u={} m={}",
                                     lower_index, upper_index, m));
  return {m, 0.0, lower_index, upper_index};
}

std::string BootstrapPlan::str() const {
  return fmt::format("m={} alpha={} m_l={} m_u={}", m, alpha, lower_index, upper_index);
}

BootstrapPlan make_plan(long m, double alpha) {
  if (m < 1) throw DomainError("make_plan: m must be at least 1");
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("make_plan: alpha must lie in (0,1)");
  bool integral = false;
  const long ml = snap_floor(static_cast<double>(m) * alpha / 2.0, integral) + 1;
  const long mu = m + 1 - ml;
  if (ml >= mu)
    throw DegeneratePlan(fmt::format("make_plan: need floor(m*alpha/2)+1 < (m+1)/2, got m_l={} m_u={} for m={} alpha={}",
                                     ml, mu, m, alpha));
  return {m, alpha, ml, mu};
}

long percentile_index(long m, double p, PercentileSide side) {
  if (m < 1) throw DomainError("percentile_index: m must be at least 1");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("percentile_index: p must lie in [0,1]");
  bool integral = false;
  const long k = snap_floor(static_cast<double>(m) * p, integral);
  long j = (integral && side == PercentileSide::Upper) ? k : k + 1;
  if (j < 1) j = 1;
  if (j > m) j = m;
  return j;
}

}  // namespace bootcov
