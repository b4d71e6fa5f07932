#pragma once

#include <functional>
#include <vector>

#include "bootcov/quadrature.hpp"

namespace bootcov {

using Curve = std::function<double(double)>;

/// Integral of curve over [0,1], split at the given breakpoints.
QuadratureResult area_under(const Curve& curve, const std::vector<double>& breakpoints,
                            const QuadratureSpec& spec = {});

enum class BoundaryLimits { Open, Closed };

struct IcpOptions {
  int grid_points = 2000;
  int boundary_decades = 8;  // adds 10^-k and 1-10^-k, k = 1..boundary_decades
  double breakpoint_offset = 1e-9;
  BoundaryLimits limits = BoundaryLimits::Open;
};

struct IcpResult {
  double minimum = 0.0;
  double argmin = 0.0;
  long evaluated = 0;
  double resolution = 0.0;  // uniform grid spacing
  double closest_boundary_approach = 0.0;
};

/// Minimum of curve over a uniform grid on [0,1] refined at each breakpoint
/// and near the boundaries. A grid minimum, not a proven infimum.
IcpResult icp(const Curve& curve, const std::vector<double>& breakpoints, const IcpOptions& options = {});

/// 1 - (1-p)^n: the cap on bootstrap proportion-interval coverage at p in (0,1).
double binomial_icp_bound(double p, long n);

struct CalibrationOptions {
  int grid_points = 199;
  double alpha_min = 0.005;
  double alpha_max = 0.995;
  double residual_tol = 0.005;
};

struct CalibrationResult {
  double alpha = 0.0;
  double area = 0.0;
  double residual = 0.0;  // |area - target|
  bool flagged = false;   // residual above residual_tol
};

/// Scans alpha and returns the alpha whose area is closest to target. Areas
/// are not assumed monotone in alpha. Exact ties go to the largest alpha.
CalibrationResult calibrate_alpha(const std::function<double(double)>& area_of_alpha, double target_area,
                                  const CalibrationOptions& options = {});

/// The alpha grid calibrate_alpha scans.
std::vector<double> alpha_grid(const CalibrationOptions& options = {});

}  // namespace bootcov
