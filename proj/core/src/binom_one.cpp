#include "bootcov/binom_one.hpp"

#include <algorithm>
#include <cmath>

#include "bootcov/error.hpp"
#include "bootcov/stats.hpp"

namespace bootcov {
namespace {

struct IndexPair {
  long left;  // largest k with k < x
  long at;    // largest k with k <= x
};

IndexPair indices_for(double x, long n) {
  const double r = std::nearbyint(x);
  IndexPair ip;
  if (std::abs(x - r) <= kIntegerSnapTol * std::max(1.0, std::abs(x))) {
    ip.at = static_cast<long>(r);
    ip.left = ip.at - 1;
  } else {
    ip.at = ip.left = static_cast<long>(std::floor(x));
  }
  ip.left = std::clamp(ip.left, -1L, n);
  ip.at = std::clamp(ip.at, -1L, n);
  return ip;
}

void check_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("p must lie in [0,1]");
}

}  // namespace

WilsonCoeffs wilson_coeffs(long n, double alpha) {
  if (n < 1) throw DomainError("wilson_coeffs: n must be at least 1");
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("wilson_coeffs: alpha must lie in (0,1)");
  const double z = normal_quantile(1.0 - alpha / 2.0);
  const double z2 = z * z;
  return {1.0 / (static_cast<double>(n) + z2), 0.5 * z2 / (static_cast<double>(n) + z2), z};
}

OneSampleModel::OneSampleModel(const OneSampleDesign& design) : design_(design) {
  const long n = design.n;
  if (n < 1) throw DomainError("one-sample design: n must be at least 1");
  const BootstrapPlan& plan = design.plan;
  if (design.center == Center::Wald) {
    scale_ = 1.0 / static_cast<double>(n);
    shift_ = 0.0;
  } else {
    const WilsonCoeffs w = wilson_coeffs(n, plan.alpha);
    scale_ = w.a1;
    shift_ = w.b1;
  }
  gu_.assign(n + 1, std::vector<double>(n + 2));
  gl_.assign(n + 1, std::vector<double>(n + 2));
  el_terms_.assign(n + 1, 0.0);
  for (long y = 0; y <= n; ++y) {
    const double q = center(y);
    for (long k = -1; k <= n; ++k) {
      const double h = binom_cdf(k, n, q);
      gu_[y][k + 1] = binom_cdf(plan.upper_index - 1, plan.m, h);
      gl_[y][k + 1] = binom_cdf(plan.lower_index - 1, plan.m, h);
    }
    double e = 0.0;
    for (long k = 0; k < n; ++k) e += gu_[y][k + 1] - gl_[y][k + 1];
    el_terms_[y] = scale_ * e;
  }
}

double OneSampleModel::center(long y) const {
  if (design_.center == Center::Wald) return static_cast<double>(y) / static_cast<double>(design_.n);
  return std::min(1.0, scale_ * static_cast<double>(y) + shift_);
}

double OneSampleModel::bracket_at(long y, long k_left, long k_at) const {
  return std::max(0.0, gu_[y][k_left + 1] - gl_[y][k_at + 1]);
}

double OneSampleModel::bracket_sum(double p, long k_left, long k_at) const {
  const long n = design_.n;
  double s = 0.0;
  for (long y = 0; y <= n; ++y) {
    const double b = bracket_at(y, k_left, k_at);
    if (b != 0.0) s += b * binom_pmf(y, n, p);
  }
  return s;
}

double OneSampleModel::coverage(double p) const {
  check_p(p);
  const IndexPair ip = indices_for((p - shift_) / scale_, design_.n);
  return bracket_sum(p, ip.left, ip.at);
}

double OneSampleModel::coverage(const Rational& p) const {
  if (design_.center != Center::Wald) throw DomainError("exact-argument coverage is defined for the Wald center only");
  const double pd = p.to_double();
  check_p(pd);
  const long n = design_.n;
  const Rational x = p * Rational(n);
  long at, left;
  if (x.is_integer()) {
    at = x.num();
    left = at - 1;
  } else {
    // floor of a positive rational
    at = left = x.num() / x.den();
  }
  return bracket_sum(pd, std::clamp(left, -1L, n), std::clamp(at, -1L, n));
}

double OneSampleModel::el(double p) const {
  check_p(p);
  const long n = design_.n;
  double s = 0.0;
  for (long y = 0; y <= n; ++y)
    if (el_terms_[y] != 0.0) s += el_terms_[y] * binom_pmf(y, n, p);
  return s;
}

std::vector<double> OneSampleModel::breakpoints() const {
  std::vector<double> b;
  for (long k = 0; k <= design_.n; ++k) {
    const double p = scale_ * static_cast<double>(k) + shift_;
    if (p > 0.0 && p < 1.0) b.push_back(p);
  }
  return b;
}

double OneSampleModel::coverage_area_exact() const {
  const long n = design_.n;
  std::vector<double> cuts{0.0};
  for (double b : breakpoints()) cuts.push_back(b);
  cuts.push_back(1.0);
  double area = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = cuts[i + 1];
    if (!(hi > lo)) continue;
    const IndexPair ip = indices_for((0.5 * (lo + hi) - shift_) / scale_, n);
    for (long y = 0; y <= n; ++y) {
      const double b = bracket_at(y, ip.left, ip.at);
      if (b == 0.0) continue;
      const double a = static_cast<double>(y + 1);
      const double c = static_cast<double>(n - y + 1);
      const double mass = beta_cdf(hi, a, c) - beta_cdf(lo, a, c);
      area += b * mass / static_cast<double>(n + 1);
    }
  }
  return area;
}

double OneSampleModel::el_area_exact() const {
  double s = 0.0;
  for (double e : el_terms_) s += e;
  return s / static_cast<double>(design_.n + 1);
}

namespace {

OneSampleModel model_for(const OneSampleDesign& design, Center expected) {
  if (design.center != expected) throw DomainError("design center does not match the requested interval");
  return OneSampleModel(design);
}

}  // namespace

double coverage_cwa(double p, const OneSampleDesign& design) { return model_for(design, Center::Wald).coverage(p); }
double coverage_cwi(double p, const OneSampleDesign& design) { return model_for(design, Center::Wilson).coverage(p); }
double el_cwa(double p, const OneSampleDesign& design) { return model_for(design, Center::Wald).el(p); }
double el_cwi(double p, const OneSampleDesign& design) { return model_for(design, Center::Wilson).el(p); }

}  // namespace bootcov
