#pragma once

#include <vector>

#include "bootcov/plan.hpp"
#include "bootcov/rational.hpp"

namespace bootcov {

/// Center of the one-sample bootstrap: the plain proportion y/n (Wald) or
/// the shrunk a1*y + b1 (Wilson).
enum class Center { Wald, Wilson };

struct OneSampleDesign {
  long n = 0;
  BootstrapPlan plan;
  Center center = Center::Wald;
};

/// a1 = 1/(n+z^2), b1 = (z^2/2)/(n+z^2), z = normal_quantile(1-alpha/2).
struct WilsonCoeffs {
  double a1 = 0.0;
  double b1 = 0.0;
  double z = 0.0;
};

WilsonCoeffs wilson_coeffs(long n, double alpha);

/// Precomputed bracket tables for one design. For binomial data the
/// parametric and percentile bootstrap coincide, so this one model serves
/// both readings. Construction is O(n^2) binomial CDFs; each coverage or EL
/// evaluation afterwards is O(n).
class OneSampleModel {
 public:
  explicit OneSampleModel(const OneSampleDesign& design);

  const OneSampleDesign& design() const { return design_; }
  /// Bootstrap estimates given y are scale*k + shift, k ~ Bino(n, center(y)).
  double scale() const { return scale_; }
  double shift() const { return shift_; }
  double center(long y) const;

  double coverage(double p) const;
  /// Exact-argument variant: integrality of the bootstrap index at p is
  /// decided in rational arithmetic. Wald only.
  double coverage(const Rational& p) const;
  double el(double p) const;

  /// p values in [0,1] where the coverage curve can jump.
  std::vector<double> breakpoints() const;

  /// Exact integrals over p in [0,1], using that each bracket is constant
  /// between breakpoints and the pmf integrates to a beta-CDF difference.
  double coverage_area_exact() const;
  double el_area_exact() const;

 private:
  double bracket_sum(double p, long k_left, long k_at) const;
  // Bracket for outcome y when the target sits at bootstrap index x.
  double bracket_at(long y, long k_left, long k_at) const;

  OneSampleDesign design_;
  double scale_ = 0.0;
  double shift_ = 0.0;
  // gu_[y][k+1] = F_B(m_u-1, m, F_B(k, n, center(y))), k = -1..n; gl_ likewise.
  std::vector<std::vector<double>> gu_;
  std::vector<std::vector<double>> gl_;
  // Per-y EL term sum_{k=0}^{n-1} (gu - gl), already multiplied by scale.
  std::vector<double> el_terms_;
};

double coverage_cwa(double p, const OneSampleDesign& design);
double coverage_cwi(double p, const OneSampleDesign& design);
double el_cwa(double p, const OneSampleDesign& design);
double el_cwi(double p, const OneSampleDesign& design);

}  // namespace bootcov
