#pragma once

#include <vector>

#include "bootcov/discrete_dist.hpp"
#include "bootcov/eval.hpp"
#include "bootcov/plan.hpp"
#include "bootcov/rational.hpp"

namespace bootcov {

struct TwoSampleDesign {
  long n1 = 0;
  long n2 = 0;
  BootstrapPlan plan;
};

/// d = p1 - p2 with p2 restricted so that p1 stays in [0,1].
struct DiffPoint {
  double d = 0.0;
  double p2 = 0.0;
  double p1() const { return d + p2; }
  /// Throws DomainError when p2 is outside D(d).
  void validate() const;
};

/// Odds ratio theta = p1(1-p2) / ((1-p1)p2) and p2.
struct OddsPoint {
  double theta = 0.0;
  double p2 = 0.0;
  double p1() const;
  void validate() const;
};

/// Gart's odds-ratio estimate ((x+1/2)(n2-y+1/2)) / ((n1-x+1/2)(y+1/2)).
double gart_theta(long x, long y, long n1, long n2);
/// Same value as an exact rational ((2x+1)(2(n2-y)+1)) / ((2(n1-x)+1)(2y+1)).
Rational gart_key(long x, long y, long n1, long n2);

/// Bootstrap distribution of U/n1 - V/n2, U ~ Bino(n1, x/n1), V ~ Bino(n2, y/n2).
DiscreteDist dist_dhat(long x, long y, const TwoSampleDesign& design);
/// Bootstrap distribution of gart_theta(U, V, n1, n2).
DiscreteDist dist_thetahat(long x, long y, const TwoSampleDesign& design);

/// The same CDFs through their closed forms, summing over v.
double hd_closed(double z, long x, long y, const TwoSampleDesign& design);
double hr_closed(double z, long x, long y, const TwoSampleDesign& design);
/// Largest real u with gart_theta(u, v) <= z, i.e. the threshold in hr_closed.
double r_threshold(double z, long v, const TwoSampleDesign& design);

EvalResult evaluate_cd(const DiffPoint& point, const TwoSampleDesign& design);
EvalResult evaluate_ctheta(const OddsPoint& point, const TwoSampleDesign& design);
double coverage_cd(const DiffPoint& point, const TwoSampleDesign& design);
double el_cd(const DiffPoint& point, const TwoSampleDesign& design);
double coverage_ctheta(const OddsPoint& point, const TwoSampleDesign& design);
double el_ctheta(const OddsPoint& point, const TwoSampleDesign& design);

enum class TwoSampleTarget { Difference, OddsRatio };

struct SurfaceSpec {
  int axis1_points = 101;  // d in [-1,1], or theta log-spaced in [theta_min, theta_max]
  int p2_points = 101;     // p2 over D(d), or over [0,1] for theta
  double theta_min = 1.0;
  double theta_max = 100.0;
  unsigned threads = 1;
};

struct SurfacePoint {
  double axis1 = 0.0;
  double p2 = 0.0;
  double coverage = 0.0;
  double el = 0.0;
};

struct Surface {
  TwoSampleTarget target = TwoSampleTarget::Difference;
  int axis1_points = 0;
  int p2_points = 0;
  std::vector<SurfacePoint> points;  // row-major: axis1 outer, p2 inner

  double min_coverage() const;
  /// Share of grid points with coverage strictly below level.
  double fraction_below(double level) const;
};

/// Coverage and EL over a lattice of parameter points. Each (x, y) outcome
/// is processed once: its bootstrap distribution is queried at every axis
/// value, then grid points only reweight those brackets.
Surface surface_grid(const TwoSampleDesign& design, TwoSampleTarget target, const SurfaceSpec& spec = {});

}  // namespace bootcov
