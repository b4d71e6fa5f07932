#pragma once

#include <functional>
#include <string>

#include "bootcov/plan.hpp"
#include "bootcov/quadrature.hpp"
#include "bootcov/rational.hpp"

namespace bootcov {

enum class NormalEstimator { Mean, Median };

/// Standardized (mu = 0, sigma = 1) distribution of the point estimator.
/// Its density is even, so F(-x) = 1 - F(x); the integrals below use that to
/// get upper-tail probabilities without cancellation.
struct QSpec {
  std::string name;
  std::function<double(double)> cdf;
  std::function<double(double)> pdf;
  std::function<double(double)> quantile;

  /// Sample mean of n: F(x) = Phi(x sqrt(n)).
  static QSpec mean(long n);
  /// Sample median of odd n: F(x) = I_{Phi(x)}(a, n-a+1), a = floor(n/2)+1.
  /// Even n throws UnsupportedDesign.
  static QSpec median(long n);
};

struct ExactCoverage {
  Rational exact;
  double value = 0.0;
};

/// (m_u - m_l)/(m + 1): coverage of the parametric percentile interval for
/// any location estimator with an even density, whatever n, mu, sigma.
ExactCoverage coverage_cq(const BootstrapPlan& plan);

/// Expected length m sigma * int_0^1 F^{-1}(z) [p_B(m_u-1, m-1, z) - p_B(m_l-1, m-1, z)] dz,
/// integrated over x = F^{-1}(z).
QuadratureResult el_cq(const QSpec& q, const BootstrapPlan& plan, double sigma = 1.0, const QuadratureSpec& spec = {});

/// el_cq for the mean at sigma = 1. Throws QuadratureNotConverged on failure.
double a_factor(long n, long m, double alpha);
/// el_cq for the median of odd n.
double el_cnm(long n, long m, double alpha, double sigma = 1.0);

/// Coverage of the bootstrap interval for the mean when sigma is estimated
/// by the divisor-n MLE and resampled parametrically.
QuadratureResult coverage_cnu_quad(long n, long m, double alpha, const QuadratureSpec& spec = {});
double coverage_cnu(long n, long m, double alpha);

/// sqrt(2/n) Gamma(n/2)/Gamma((n-1)/2) = E[s]/sigma for the divisor-n s.
double b_factor(long n);
double el_cnu(long n, long m, double alpha, double sigma = 1.0);

/// 2 z_{alpha/2} sigma / sqrt(n).
double z_interval_el(long n, double alpha, double sigma = 1.0);
/// 2 t_{alpha/2,n-1} E[S] / sqrt(n), S the divisor-(n-1) standard deviation.
double t_interval_el(long n, double alpha, double sigma = 1.0);
/// z-interval EL at nominal level target_cc.
double z_star_el(double target_cc, long n, double sigma = 1.0);

}  // namespace bootcov
