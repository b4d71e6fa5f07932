#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bootcov {

enum class Method { Exact, Quadrature, MonteCarlo };

/// Coverage and expected length with a record of how they were obtained.
struct EvalResult {
  double coverage = 0.0;
  double el = 0.0;
  Method method = Method::Exact;
  double tolerance = 0.0;  // quadrature only
  long reps = 0;           // Monte Carlo only
  std::uint64_t seed = 0;
  double coverage_se = 0.0;
  double el_se = 0.0;

  /// "exact", "quadrature(1e-09)" or "monte-carlo(100000,42)".
  std::string method_tag() const;
};

struct CurvePoint {
  double param = 0.0;
  double coverage = 0.0;
  double el = 0.0;
};

/// Samples of a coverage/EL curve in parameter order, with the points where
/// the curve may jump.
struct CoverageCurve {
  std::vector<CurvePoint> points;
  std::vector<double> breakpoints;
};

}  // namespace bootcov
