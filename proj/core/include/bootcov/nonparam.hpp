#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bootcov/discrete_dist.hpp"
#include "bootcov/eval.hpp"
#include "bootcov/mc.hpp"
#include "bootcov/plan.hpp"
#include "bootcov/quadrature.hpp"
#include "bootcov/rational.hpp"

namespace bootcov {

/// Number of monomials of degree t in n variables: S(n,t) = C(n+t-1, t).
std::uint64_t s_count(long n, long t);

/// Largest n for which bootstrap-mean distributions are enumerated.
inline constexpr long kCompositionCap = 12;

/// Distribution of the bootstrap mean over all n^n equally likely
/// resamples, grouped by composition (k_1..k_n). counts[i] is the number of
/// resamples landing on support point i, out of total = n^n.
struct CompositionDist {
  DiscreteDist dist;
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;

  /// Exact P(mean* = value(i)) and H(value(i)).
  Rational mass(std::size_t i) const;
  Rational cdf_at(std::size_t i) const;
};

/// Real-valued sample: means closer than DiscreteDist::kMergeTol are merged.
CompositionDist dist_mean_boot(const std::vector<double>& sample);
/// Rational sample: exact keys, so merging is exact.
CompositionDist dist_mean_boot(const std::vector<Rational>& sample);

/// 1 - 2^{-(n-1)}: no percentile interval for the mean can cover with
/// higher probability at every symmetric continuous distribution.
double cpn_upper_bound(long n);

/// n = 2 closed forms (normal data; coverage is distribution-free).
double coverage_cpn_n2(long m, double alpha);
double el_cpn_n2(long m, double alpha, double sigma = 1.0);
/// int_0^1 Phi^{-1}(z)(2z-1) dz = 1/sqrt(pi), by quadrature.
QuadratureResult quantile_spread_integral(const QuadratureSpec& spec = {});

enum class CpnMode { ExactEnum, RaoBlackwellMc, FullMc };

struct CpnOptions {
  CpnMode mode = CpnMode::RaoBlackwellMc;
  McConfig mc;
  double sigma = 1.0;
  double mu = 0.0;
  DataFamily family = DataFamily::Normal;
};

/// Coverage and EL of the percentile interval for the mean.
/// ExactEnum: enumeration of the equiprobable sign/order configurations, n <= 2.
/// RaoBlackwellMc: simulated samples, exact inner bootstrap distribution, n <= 12.
/// FullMc: simulated samples and simulated bootstrap draws, any n.
EvalResult evaluate_cpn(long n, long m, double alpha, const CpnOptions& options = {});
EvalResult coverage_cpn(long n, long m, double alpha, CpnMode mode, long reps, std::uint64_t seed);
EvalResult el_cpn(long n, long m, double alpha, double sigma, long reps, std::uint64_t seed);

/// Rao-Blackwellized replicate for one sample: the exact conditional
/// coverage of mu and expected width. Exposed for invariance tests.
Replicate cpn_conditional(const std::vector<double>& sample, double mu, const BootstrapPlan& plan);

/// Bootstrap distribution of the median of an odd-size sample, support the
/// sorted sample values, H(y_(i)) = F_B(a-1, n, (n-i)/n), a = floor(n/2)+1.
DiscreteDist dist_median_boot(const std::vector<double>& sample);
/// H_M(y_(i)) as an exact rational.
Rational median_boot_cdf_exact(long n, long i);

double coverage_cpm(long n, long m, double alpha);

/// Quantile function of a symmetric location-scale family.
struct QuantileFamily {
  std::string name;
  std::function<double(double)> quantile;  // unused when normal
  bool normal = false;
  double sigma = 1.0;

  static QuantileFamily normal_family(double sigma = 1.0);
  static QuantileFamily custom(std::string name, std::function<double(double)> quantile);
};

QuadratureResult el_cpm_quad(long n, long m, double alpha, const QuantileFamily& family,
                             const QuadratureSpec& spec = {});
double el_cpm(long n, long m, double alpha, const QuantileFamily& family = QuantileFamily::normal_family());

}  // namespace bootcov
