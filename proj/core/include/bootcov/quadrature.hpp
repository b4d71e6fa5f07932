#pragma once

#include <functional>
#include <vector>

namespace bootcov {

struct QuadratureSpec {
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;
  int max_subdivisions = 2000;
  /// Truncation point, in standard-normal units, for integrals mapped to the
  /// real line through z = Phi(t).
  double tail_cutoff = 8.5;

  /// Throws DomainError unless tolerances are positive, max_subdivisions >= 1
  /// and tail_cutoff >= 6.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  int intervals = 0;
  bool converged = true;
};

/// Adaptive Gauss-Kronrod (10/21 point) integration of f over [a, b] with
/// global bisection of the worst interval. Breakpoints inside (a, b) seed the
/// initial partition. Non-convergence is reported through the result, never
/// thrown.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec = {}, const std::vector<double>& breakpoints = {});

/// A point of (0,1) reached through z = Phi(t); zc = 1 - z is carried
/// separately so integrands near z = 1 keep full precision.
struct UnitPoint {
  double z;
  double zc;
  double t;
};

/// Integral of g(z) over z in (0,1), computed as the integral of
/// g(Phi(t)) phi(t) over |t| <= tail_cutoff. Intended for integrands that
/// contain normal_quantile(z). z_breakpoints are mapped to t.
QuadratureResult integrate_unit_quantile(const std::function<double(const UnitPoint&)>& g,
                                         const QuadratureSpec& spec = {},
                                         const std::vector<double>& z_breakpoints = {});

}  // namespace bootcov
