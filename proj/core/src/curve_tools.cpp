#include "bootcov/curve_tools.hpp"

#include <algorithm>
#include <cmath>

#include "bootcov/error.hpp"

namespace bootcov {

QuadratureResult area_under(const Curve& curve, const std::vector<double>& breakpoints, const QuadratureSpec& spec) {
  return integrate(curve, 0.0, 1.0, spec, breakpoints);
}

IcpResult icp(const Curve& curve, const std::vector<double>& breakpoints, const IcpOptions& options) {
  if (options.grid_points < 2) throw DomainError("icp: grid needs at least 2 points");
  const bool open = options.limits == BoundaryLimits::Open;
  std::vector<double> grid;
  const int g = options.grid_points;
  for (int i = 0; i < g; ++i) grid.push_back(static_cast<double>(i) / static_cast<double>(g - 1));
  double closest = 0.0;
  for (int k = 1; k <= options.boundary_decades; ++k) {
    const double e = std::pow(10.0, -k);
    grid.push_back(e);
    grid.push_back(1.0 - e);
    closest = e;
  }
  for (double b : breakpoints) {
    grid.push_back(b);
    grid.push_back(b - options.breakpoint_offset);
    grid.push_back(b + options.breakpoint_offset);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  IcpResult r;
  r.resolution = 1.0 / static_cast<double>(g - 1);
  r.closest_boundary_approach = open ? closest : 0.0;
  r.minimum = 2.0;
  for (double p : grid) {
    if (p < 0.0 || p > 1.0) continue;
    if (open && (p == 0.0 || p == 1.0)) continue;
    const double v = curve(p);
    ++r.evaluated;
    if (v < r.minimum) {
      r.minimum = v;
      r.argmin = p;
    }
  }
  return r;
}

double binomial_icp_bound(double p, long n) { return 1.0 - std::pow(1.0 - p, static_cast<double>(n)); }

std::vector<double> alpha_grid(const CalibrationOptions& options) {
  if (options.grid_points < 1) throw DomainError("calibrate_alpha: empty alpha grid");
  if (!(options.alpha_min > 0.0 && options.alpha_max < 1.0 && options.alpha_min <= options.alpha_max))
    throw DomainError("calibrate_alpha: alpha range must lie inside (0,1)");
  std::vector<double> a;
  const int g = options.grid_points;
  for (int i = 0; i < g; ++i) {
    if (g == 1) {
      a.push_back(options.alpha_min);
      break;
    }
    a.push_back(options.alpha_min + (options.alpha_max - options.alpha_min) * i / (g - 1));
  }
  return a;
}

CalibrationResult calibrate_alpha(const std::function<double(double)>& area_of_alpha, double target_area,
                                  const CalibrationOptions& options) {
  if (!(target_area > 0.0 && target_area < 1.0)) throw DomainError("calibrate_alpha: target area must lie in (0,1)");
  constexpr double kTie = 1e-12;
  CalibrationResult best;
  bool have = false;
  for (double alpha : alpha_grid(options)) {
    const double area = area_of_alpha(alpha);
    const double res = std::abs(area - target_area);
    // Grid is ascending, so "<= best + tie" hands ties to the larger alpha.
    if (!have || res <= best.residual + kTie) {
      best = {alpha, area, res, false};
      have = true;
    }
  }
  best.flagged = best.residual > options.residual_tol;
  return best;
}

}  // namespace bootcov
