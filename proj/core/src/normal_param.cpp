#include "bootcov/normal_param.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "bootcov/error.hpp"
#include "bootcov/stats.hpp"

namespace bootcov {
namespace {

double require(const QuadratureResult& r, const char* what) {
  if (!r.converged)
    throw QuadratureNotConverged(fmt::format("{}: quadrature did not converge (estimate {:.17g}, error {:.3g})", what,
                                             r.value, r.abs_error),
                                 r.value, r.abs_error);
  return r.value;
}

void check_sigma(double sigma) {
  if (!(sigma > 0.0)) throw DomainError("sigma must be positive");
}

}  // namespace

QSpec QSpec::mean(long n) {
  if (n < 1) throw DomainError("mean estimator: n must be at least 1");
  const double rn = std::sqrt(static_cast<double>(n));
  QSpec q;
  q.name = "mean";
  q.cdf = [rn](double x) { return normal_cdf(x * rn); };
  q.pdf = [rn](double x) { return rn * normal_pdf(x * rn); };
  q.quantile = [rn](double z) { return normal_quantile(z) / rn; };
  return q;
}

QSpec QSpec::median(long n) {
  if (n < 1) throw DomainError("median estimator: n must be at least 1");
  if (n % 2 == 0) throw UnsupportedDesign("median estimator: even n is not supported (no closed-form density)");
  const double a = static_cast<double>(n / 2 + 1);
  const double b = static_cast<double>(n) - a + 1.0;
  QSpec q;
  q.name = "median";
  q.cdf = [a, b](double x) { return beta_cdf(normal_cdf(x), a, b); };
  q.pdf = [a, b](double x) { return beta_pdf(normal_cdf(x), a, b) * normal_pdf(x); };
  q.quantile = [a, b](double z) { return normal_quantile(beta_quantile(z, a, b)); };
  return q;
}

ExactCoverage coverage_cq(const BootstrapPlan& plan) {
  const Rational r(plan.upper_index - plan.lower_index, plan.m + 1);
  return {r, r.to_double()};
}

QuadratureResult el_cq(const QSpec& q, const BootstrapPlan& plan, double sigma, const QuadratureSpec& spec) {
  check_sigma(sigma);
  spec.validate();
  if (plan.lower_index == plan.upper_index) return {0.0, 0.0, 0, true};
  const long m1 = plan.m - 1;
  const long ku = plan.upper_index - 1;
  const long kl = plan.lower_index - 1;
  const double lo = q.quantile(normal_cdf(-spec.tail_cutoff));
  const double hi = -lo;  // odd quantile

  // Each p_B term peaks at z = k/(m-1); seed the partition around both peaks.
  std::vector<double> breaks{0.0};
  for (long k : {kl, ku}) {
    const double z0 = static_cast<double>(k) / static_cast<double>(m1);
    const double sd = std::sqrt(std::max(z0 * (1.0 - z0), 1.0 / static_cast<double>(m1)) / static_cast<double>(m1));
    for (double j : {-6.0, -3.0, -1.0, 0.0, 1.0, 3.0, 6.0}) {
      const double z = z0 + j * sd;
      if (z > 0.0 && z < 1.0) breaks.push_back(q.quantile(z));
    }
  }
  auto f = [&](double x) {
    const double fx = q.pdf(x);
    if (fx == 0.0) return 0.0;
    const double z = q.cdf(x);
    const double zc = q.cdf(-x);
    return x * fx * (binom_pmf_pq(ku, m1, z, zc) - binom_pmf_pq(kl, m1, z, zc));
  };
  QuadratureResult r = integrate(f, lo, hi, spec, breaks);
  const double scale = static_cast<double>(plan.m) * sigma;
  r.value *= scale;
  r.abs_error *= scale;
  return r;
}

double a_factor(long n, long m, double alpha) {
  return require(el_cq(QSpec::mean(n), make_plan(m, alpha)), "a_factor");
}

double el_cnm(long n, long m, double alpha, double sigma) {
  return require(el_cq(QSpec::median(n), make_plan(m, alpha), sigma), "el_cnm");
}

QuadratureResult coverage_cnu_quad(long n, long m, double alpha, const QuadratureSpec& spec) {
  if (n < 2) throw DomainError("coverage_cnu: n must be at least 2");
  spec.validate();
  const BootstrapPlan plan = make_plan(m, alpha);
  const double dn = static_cast<double>(n);
  const double c = std::sqrt(dn / (dn - 1.0));
  const double df = dn - 1.0;
  const double cut = spec.tail_cutoff * std::max(1.0, std::sqrt((dn - 1.0) / dn));
  std::vector<double> breaks{0.0};
  for (long k : {plan.lower_index, plan.upper_index}) {
    const double h = static_cast<double>(k) / static_cast<double>(m);
    if (h > 0.0 && h < 1.0) breaks.push_back(-normal_quantile(h) / c);
  }
  auto f = [&](double t) {
    const double h = normal_cdf(-t * c);
    const double v = binom_cdf(plan.upper_index - 1, m, h) - binom_cdf(plan.lower_index - 1, m, h);
    return v * t_pdf(t, df);
  };
  return integrate(f, -cut, cut, spec, breaks);
}

double coverage_cnu(long n, long m, double alpha) { return require(coverage_cnu_quad(n, m, alpha), "coverage_cnu"); }

double b_factor(long n) {
  if (n < 2) throw DomainError("b_factor: n must be at least 2");
  const double dn = static_cast<double>(n);
  return std::sqrt(2.0 / dn) * std::exp(gamma_ln(dn / 2.0) - gamma_ln((dn - 1.0) / 2.0));
}

double el_cnu(long n, long m, double alpha, double sigma) {
  check_sigma(sigma);
  return b_factor(n) * a_factor(n, m, alpha) * sigma;
}

double z_interval_el(long n, double alpha, double sigma) {
  if (n < 1) throw DomainError("z interval: n must be at least 1");
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("z interval: alpha must lie in (0,1)");
  check_sigma(sigma);
  return 2.0 * normal_quantile(1.0 - alpha / 2.0) * sigma / std::sqrt(static_cast<double>(n));
}

double t_interval_el(long n, double alpha, double sigma) {
  if (n < 2) throw DomainError("t interval: n must be at least 2");
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("t interval: alpha must lie in (0,1)");
  check_sigma(sigma);
  const double dn = static_cast<double>(n);
  const double es = std::sqrt(2.0 / (dn - 1.0)) * std::exp(gamma_ln(dn / 2.0) - gamma_ln((dn - 1.0) / 2.0));
  return 2.0 * t_quantile(1.0 - alpha / 2.0, dn - 1.0) * es * sigma / std::sqrt(dn);
}

double z_star_el(double target_cc, long n, double sigma) {
  if (!(target_cc > 0.0 && target_cc < 1.0)) throw DomainError("z* interval: target level must lie in (0,1)");
  return z_interval_el(n, 1.0 - target_cc, sigma);
}

}  // namespace bootcov
