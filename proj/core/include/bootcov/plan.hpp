#pragma once

#include <string>

namespace bootcov {

/// Percentile interval [u_(m_l), u_(m_u)] over m bootstrap estimates.
struct BootstrapPlan {
  long m = 0;
  double alpha = 0.0;
  long lower_index = 0;
  long upper_index = 0;

  /// Raw plan from explicit indices, 1 <= m_l <= m_u <= m. alpha is left 0.
  /// Used where an order-statistic pair is needed without the alpha rule.
  static BootstrapPlan from_indices(long m, long lower_index, long upper_index);

  std::string str() const;
};

/// m_l = floor(m alpha / 2) + 1, m_u = m + 1 - m_l. Throws DegeneratePlan
/// when m_l >= m_u. m*alpha/2 within 1e-9 (relative) of an integer is taken
/// as that integer, so alpha = 1 - 0.9 behaves like 0.1.
BootstrapPlan make_plan(long m, double alpha);

enum class PercentileSide { Lower, Upper };

/// Order-statistic index of the 100p-th percentile of m values: the largest
/// such percentile for Lower, the smallest for Upper. Clamped to [1, m].
long percentile_index(long m, double p, PercentileSide side);

}  // namespace bootcov
