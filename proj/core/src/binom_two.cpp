#include "bootcov/binom_two.hpp"

#include <algorithm>
#include <cmath>

#include "bootcov/error.hpp"
#include "bootcov/parallel.hpp"
#include "bootcov/percentile.hpp"
#include "bootcov/stats.hpp"

namespace bootcov {
namespace {

void check_design(const TwoSampleDesign& design) {
  if (design.n1 < 1 || design.n2 < 1) throw DomainError("two-sample design: n1 and n2 must be at least 1");
}

void check_outcome(long x, long y, const TwoSampleDesign& design) {
  check_design(design);
  if (x < 0 || x > design.n1 || y < 0 || y > design.n2) throw DomainError("two-sample outcome outside its range");
}

double ratio(long a, long b) { return static_cast<double>(a) / static_cast<double>(b); }

// pmf vector of Bino(n, p) for k = 0..n.
std::vector<double> pmf_row(long n, double p) {
  std::vector<double> w(n + 1);
  for (long k = 0; k <= n; ++k) w[k] = binom_pmf(k, n, p);
  return w;
}

template <class KeyFn>
DiscreteDist build(long x, long y, const TwoSampleDesign& design, KeyFn key) {
  const auto wu = pmf_row(design.n1, ratio(x, design.n1));
  const auto wv = pmf_row(design.n2, ratio(y, design.n2));
  std::vector<std::pair<Rational, double>> atoms;
  for (long u = 0; u <= design.n1; ++u) {
    if (wu[u] == 0.0) continue;
    for (long v = 0; v <= design.n2; ++v) {
      if (wv[v] == 0.0) continue;
      atoms.emplace_back(key(u, v), wu[u] * wv[v]);
    }
  }
  return DiscreteDist::from_keyed(std::move(atoms));
}

// Bracket and expected width for every (x, y) outcome at fixed targets.
struct OutcomeTable {
  long n1, n2;
  std::vector<double> el;                    // [(x*(n2+1)+y)]
  std::vector<std::vector<double>> bracket;  // [(x*(n2+1)+y)][target index]
};

OutcomeTable outcome_table(const TwoSampleDesign& design, TwoSampleTarget target, const std::vector<double>& targets,
                           unsigned threads) {
  OutcomeTable t{design.n1, design.n2, {}, {}};
  const std::size_t cells = static_cast<std::size_t>((design.n1 + 1) * (design.n2 + 1));
  t.el.resize(cells);
  t.bracket.resize(cells);
  parallel_for(cells, threads, [&](std::size_t c) {
    const long x = static_cast<long>(c) / (design.n2 + 1);
    const long y = static_cast<long>(c) % (design.n2 + 1);
    const DiscreteDist dist =
        target == TwoSampleTarget::Difference ? dist_dhat(x, y, design) : dist_thetahat(x, y, design);
    t.el[c] = expected_width(dist, design.plan);
    auto& row = t.bracket[c];
    row.resize(targets.size());
    for (std::size_t i = 0; i < targets.size(); ++i) row[i] = coverage_bracket(dist, targets[i], design.plan);
  });
  return t;
}

EvalResult weigh(const OutcomeTable& t, std::size_t target_index, double p1, double p2) {
  const auto w1 = pmf_row(t.n1, p1);
  const auto w2 = pmf_row(t.n2, p2);
  double cov = 0.0, el = 0.0;
  for (long x = 0; x <= t.n1; ++x) {
    if (w1[x] == 0.0) continue;
    for (long y = 0; y <= t.n2; ++y) {
      const double w = w1[x] * w2[y];
      if (w == 0.0) continue;
      const std::size_t c = static_cast<std::size_t>(x * (t.n2 + 1) + y);
      cov += w * t.bracket[c][target_index];
      el += w * t.el[c];
    }
  }
  EvalResult r;
  r.coverage = std::min(1.0, cov);
  r.el = el;
  return r;
}

}  // namespace

void DiffPoint::validate() const {
  if (!(d >= -1.0 && d <= 1.0)) throw DomainError("difference point: d outside [-1,1]");
  if (!(p2 >= 0.0 && p2 <= 1.0)) throw DomainError("difference point: p2 outside [0,1]");
  const double p = p1();
  if (p < -1e-12 || p > 1.0 + 1e-12) throw DomainError("difference point: p2 outside D(d), p1 = d + p2 leaves [0,1]");
}

double OddsPoint::p1() const {
  const double den = 1.0 + (theta - 1.0) * p2;
  if (den == 0.0) return 0.0;
  return std::clamp(theta * p2 / den, 0.0, 1.0);
}

void OddsPoint::validate() const {
  if (!(theta >= 0.0) || !std::isfinite(theta)) throw DomainError("odds point: theta must be finite and >= 0");
  if (!(p2 >= 0.0 && p2 <= 1.0)) throw DomainError("odds point: p2 outside [0,1]");
}

double gart_theta(long x, long y, long n1, long n2) {
  return ((x + 0.5) * (n2 - y + 0.5)) / ((n1 - x + 0.5) * (y + 0.5));
}

Rational gart_key(long x, long y, long n1, long n2) {
  return Rational((2 * x + 1) * (2 * (n2 - y) + 1), (2 * (n1 - x) + 1) * (2 * y + 1));
}

DiscreteDist dist_dhat(long x, long y, const TwoSampleDesign& design) {
  check_outcome(x, y, design);
  const long n1 = design.n1, n2 = design.n2;
  return build(x, y, design, [&](long u, long v) { return Rational(u * n2 - v * n1, n1 * n2); });
}

DiscreteDist dist_thetahat(long x, long y, const TwoSampleDesign& design) {
  check_outcome(x, y, design);
  const long n1 = design.n1, n2 = design.n2;
  return build(x, y, design, [&](long u, long v) { return gart_key(u, v, n1, n2); });
}

double hd_closed(double z, long x, long y, const TwoSampleDesign& design) {
  check_outcome(x, y, design);
  const long n1 = design.n1, n2 = design.n2;
  double s = 0.0;
  for (long v = 0; v <= n2; ++v)
    s += binom_cdf_real(static_cast<double>(n1) * (z + ratio(v, n2)), n1, ratio(x, n1)) * binom_pmf(v, n2, ratio(y, n2));
  return s;
}

double r_threshold(double z, long v, const TwoSampleDesign& design) {
  const double a = design.n2 - v + 0.5;
  const double b = v + 0.5;
  return (z * (design.n1 + 0.5) * b - 0.5 * a) / (a + z * b);
}

double hr_closed(double z, long x, long y, const TwoSampleDesign& design) {
  check_outcome(x, y, design);
  if (z < 0.0) return 0.0;
  double s = 0.0;
  for (long v = 0; v <= design.n2; ++v)
    s += binom_cdf_real(r_threshold(z, v, design), design.n1, ratio(x, design.n1)) *
         binom_pmf(v, design.n2, ratio(y, design.n2));
  return s;
}

EvalResult evaluate_cd(const DiffPoint& point, const TwoSampleDesign& design) {
  check_design(design);
  point.validate();
  const OutcomeTable t = outcome_table(design, TwoSampleTarget::Difference, {point.d}, 1);
  return weigh(t, 0, std::clamp(point.p1(), 0.0, 1.0), point.p2);
}

EvalResult evaluate_ctheta(const OddsPoint& point, const TwoSampleDesign& design) {
  check_design(design);
  point.validate();
  const OutcomeTable t = outcome_table(design, TwoSampleTarget::OddsRatio, {point.theta}, 1);
  return weigh(t, 0, point.p1(), point.p2);
}

double coverage_cd(const DiffPoint& point, const TwoSampleDesign& design) { return evaluate_cd(point, design).coverage; }
double el_cd(const DiffPoint& point, const TwoSampleDesign& design) { return evaluate_cd(point, design).el; }
double coverage_ctheta(const OddsPoint& point, const TwoSampleDesign& design) {
  return evaluate_ctheta(point, design).coverage;
}
double el_ctheta(const OddsPoint& point, const TwoSampleDesign& design) { return evaluate_ctheta(point, design).el; }

double Surface::min_coverage() const {
  double m = 1.0;
  for (const auto& p : points) m = std::min(m, p.coverage);
  return m;
}

double Surface::fraction_below(double level) const {
  if (points.empty()) return 0.0;
  std::size_t k = 0;
  for (const auto& p : points)
    if (p.coverage < level) ++k;
  return static_cast<double>(k) / static_cast<double>(points.size());
}

Surface surface_grid(const TwoSampleDesign& design, TwoSampleTarget target, const SurfaceSpec& spec) {
  check_design(design);
  if (spec.axis1_points < 1 || spec.p2_points < 1) throw DomainError("surface: grid axes need at least one point");
  const int na = spec.axis1_points, np = spec.p2_points;
  std::vector<double> axis(na);
  for (int i = 0; i < na; ++i) {
    const double f = na == 1 ? 0.0 : static_cast<double>(i) / (na - 1);
    if (target == TwoSampleTarget::Difference) {
      axis[i] = -1.0 + 2.0 * f;
    } else {
      if (!(spec.theta_min > 0.0 && spec.theta_max >= spec.theta_min))
        throw DomainError("surface: theta range must satisfy 0 < min <= max");
      axis[i] = spec.theta_min * std::pow(spec.theta_max / spec.theta_min, f);
    }
  }
  if (target == TwoSampleTarget::Difference) {
    axis.front() = -1.0;
    axis.back() = 1.0;
  } else if (na > 1) {
    axis.back() = spec.theta_max;
  }
  const OutcomeTable t = outcome_table(design, target, axis, spec.threads);

  Surface s;
  s.target = target;
  s.axis1_points = na;
  s.p2_points = np;
  s.points.resize(static_cast<std::size_t>(na) * np);
  parallel_for(s.points.size(), spec.threads, [&](std::size_t idx) {
    const int i = static_cast<int>(idx / np);
    const int j = static_cast<int>(idx % np);
    const double g = np == 1 ? 0.0 : static_cast<double>(j) / (np - 1);
    double p1, p2;
    if (target == TwoSampleTarget::Difference) {
      const double d = axis[i];
      const double lo = d >= 0.0 ? 0.0 : -d;
      const double hi = d >= 0.0 ? 1.0 - d : 1.0;
      p2 = lo + (hi - lo) * g;
      p1 = std::clamp(d + p2, 0.0, 1.0);
    } else {
      p2 = g;
      p1 = OddsPoint{axis[i], p2}.p1();
    }
    const EvalResult r = weigh(t, static_cast<std::size_t>(i), p1, p2);
    s.points[idx] = {axis[i], p2, r.coverage, r.el};
  });
  return s;
}

}  // namespace bootcov
