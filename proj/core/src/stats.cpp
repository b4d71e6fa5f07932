#include "bootcov/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/distributions/students_t.hpp>

#include "bootcov/error.hpp"

namespace bootcov {
namespace {

constexpr double kLnSqrt2Pi = 0.918938533204672741780329736406;

void check_prob(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError(std::string(what) + ": probability outside [0,1]");
}

// Error of Stirling's approximation to log(n!), i.e.
// lgamma(n+1) - ((n+0.5)log(n) - n + log(sqrt(2 pi))).
double stirlerr(double n) {
  constexpr double S0 = 1.0 / 12.0;
  constexpr double S1 = 1.0 / 360.0;
  constexpr double S2 = 1.0 / 1260.0;
  constexpr double S3 = 1.0 / 1680.0;
  constexpr double S4 = 1.0 / 1188.0;
  if (n <= 15.0) {
    return boost::math::lgamma(n + 1.0) - (n + 0.5) * std::log(n) + n - kLnSqrt2Pi;
  }
  const double nn = n * n;
  if (n > 500) return (S0 - S1 / nn) / n;
  if (n > 80) return (S0 - (S1 - S2 / nn) / nn) / n;
  if (n > 35) return (S0 - (S1 - (S2 - S3 / nn) / nn) / nn) / n;
  return (S0 - (S1 - (S2 - (S3 - S4 / nn) / nn) / nn) / nn) / n;
}

// Deviance term x log(x/np) + np - x, computed without cancellation.
double bd0(double x, double np) {
  if (std::abs(x - np) < 0.1 * (x + np)) {
    double v = (x - np) / (x + np);
    double s = (x - np) * v;
    double ej = 2.0 * x * v;
    v *= v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v;
      const double s1 = s + ej / (2 * j + 1);
      if (s1 == s) return s1;
      s = s1;
    }
  }
  return x * std::log(x / np) + np - x;
}

// Neumaier-compensated running sum.
struct CompensatedSum {
  double sum = 0.0;
  double c = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      c += (sum - t) + v;
    else
      c += (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + c; }
};

long snapped_floor(double x) {
  const double r = std::nearbyint(x);
  if (std::abs(x - r) <= kIntegerSnapTol * std::max(1.0, std::abs(x))) return static_cast<long>(r);
  return static_cast<long>(std::floor(x));
}

}  // namespace

double binom_pmf_pq(long k, long n, double p, double q) {
  if (n < 0) throw DomainError("binom_pmf: negative trial count");
  if (k < 0 || k > n) throw DomainError("binom_pmf: k outside [0, n]");
  if (p == 0.0) return k == 0 ? 1.0 : 0.0;
  if (q == 0.0) return k == n ? 1.0 : 0.0;
  if (k == 0) return std::exp(n * std::log(q));
  if (k == n) return std::exp(n * std::log(p));
  const double dn = static_cast<double>(n);
  const double dk = static_cast<double>(k);
  const double lc = stirlerr(dn) - stirlerr(dk) - stirlerr(dn - dk) - bd0(dk, dn * p) - bd0(dn - dk, dn * q);
  const double lf = std::log(2.0 * std::numbers::pi) + std::log(dk) + std::log1p(-dk / dn);
  return std::exp(lc - 0.5 * lf);
}

double binom_pmf(long k, long n, double p) {
  check_prob(p, "binom_pmf");
  return binom_pmf_pq(k, n, p, 1.0 - p);
}

double binom_cdf_direct(long k, long n, double p) {
  check_prob(p, "binom_cdf");
  if (n < 0) throw DomainError("binom_cdf: negative trial count");
  if (k < 0) return 0.0;
  if (k >= n) return 1.0;
  if (p == 0.0) return 1.0;
  if (p == 1.0) return 0.0;
  const double q = 1.0 - p;
  const double mean = static_cast<double>(n) * p;
  CompensatedSum acc;
  if (static_cast<double>(k) <= mean) {
    // Lower tail, walking down from k; terms shrink monotonically.
    double term = binom_pmf_pq(k, n, p, q);
    const double ratio = q / p;
    for (long j = k; j >= 0 && term > 0.0; --j) {
      acc.add(term);
      if (term < acc.sum * 1e-18) break;
      term *= static_cast<double>(j) / static_cast<double>(n - j + 1) * ratio;
    }
    return std::min(1.0, acc.value());
  }
  // Upper tail from k+1 upwards, then complement.
  double term = binom_pmf_pq(k + 1, n, p, q);
  const double ratio = p / q;
  for (long j = k + 1; j <= n && term > 0.0; ++j) {
    acc.add(term);
    if (term < acc.sum * 1e-18) break;
    term *= static_cast<double>(n - j) / static_cast<double>(j + 1) * ratio;
  }
  return std::max(0.0, 1.0 - acc.value());
}

double binom_cdf_beta(long k, long n, double p) {
  check_prob(p, "binom_cdf");
  if (n < 0) throw DomainError("binom_cdf: negative trial count");
  if (k < 0) return 0.0;
  if (k >= n) return 1.0;
  if (p == 0.0) return 1.0;
  if (p == 1.0) return 0.0;
  // P(X <= k) = 1 - I_p(k+1, n-k)
  return boost::math::ibetac(static_cast<double>(k + 1), static_cast<double>(n - k), p);
}

double binom_cdf(long k, long n, double p) {
  return n > kBinomDirectSumLimit ? binom_cdf_beta(k, n, p) : binom_cdf_direct(k, n, p);
}

double binom_cdf_real(double x, long n, double p) { return binom_cdf(snapped_floor(x), n, p); }

double binom_cdf_left(double x, long n, double p) {
  const double r = std::nearbyint(x);
  if (std::abs(x - r) <= kIntegerSnapTol * std::max(1.0, std::abs(x)))
    return binom_cdf(static_cast<long>(r) - 1, n, p);
  return binom_cdf(static_cast<long>(std::floor(x)), n, p);
}

double normal_pdf(double x, double mu, double sigma) {
  if (!(sigma > 0.0)) throw DomainError("normal_pdf: sigma must be positive");
  const double z = (x - mu) / sigma;
  return std::exp(-0.5 * z * z - kLnSqrt2Pi) / sigma;
}

double normal_cdf(double x, double mu, double sigma) {
  if (!(sigma > 0.0)) throw DomainError("normal_cdf: sigma must be positive");
  const double z = (x - mu) / sigma;
  return 0.5 * boost::math::erfc(-z / std::numbers::sqrt2);
}

double normal_quantile(double p, double mu, double sigma) {
  if (!(sigma > 0.0)) throw DomainError("normal_quantile: sigma must be positive");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("normal_quantile: argument must lie in (0,1)");
  return mu - sigma * std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * p);
}

double beta_cdf(double x, double a, double b) {
  if (!(a > 0.0 && b > 0.0)) throw DomainError("beta_cdf: shape parameters must be positive");
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("beta_cdf: x outside [0,1]");
  return boost::math::ibeta(a, b, x);
}

double beta_pdf(double x, double a, double b) {
  if (!(a > 0.0 && b > 0.0)) throw DomainError("beta_pdf: shape parameters must be positive");
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("beta_pdf: x outside [0,1]");
  return boost::math::ibeta_derivative(a, b, x);
}

double beta_quantile(double p, double a, double b) {
  if (!(a > 0.0 && b > 0.0)) throw DomainError("beta_quantile: shape parameters must be positive");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("beta_quantile: argument must lie in (0,1)");
  return boost::math::ibeta_inv(a, b, p);
}

double gamma_ln(double x) {
  if (!(x > 0.0)) throw DomainError("gamma_ln: argument must be positive");
  return boost::math::lgamma(x);
}

double t_pdf(double x, double df) {
  if (!(df > 0.0)) throw DomainError("t_pdf: degrees of freedom must be positive");
  const double lc = gamma_ln(0.5 * (df + 1.0)) - gamma_ln(0.5 * df) - 0.5 * std::log(df * std::numbers::pi);
  return std::exp(lc - 0.5 * (df + 1.0) * std::log1p(x * x / df));
}

double t_cdf(double x, double df) {
  if (!(df > 0.0)) throw DomainError("t_cdf: degrees of freedom must be positive");
  return boost::math::cdf(boost::math::students_t_distribution<double>(df), x);
}

double t_quantile(double p, double df) {
  if (!(df > 0.0)) throw DomainError("t_quantile: degrees of freedom must be positive");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("t_quantile: argument must lie in (0,1)");
  return boost::math::quantile(boost::math::students_t_distribution<double>(df), p);
}

}  // namespace bootcov
