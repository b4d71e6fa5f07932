#include "bootcov/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "bootcov/error.hpp"
#include "bootcov/stats.hpp"

namespace bootcov {
namespace {

// 21-point Kronrod abscissae and weights with the embedded 10-point Gauss rule.
constexpr double kXgk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr double kWgk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208067016507, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr double kWg[5] = {0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
                           0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
                           0.295524224714752870173892994651338};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk21(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resk = fc * kWgk[10];
  double resg = 0.0;
  double resabs = std::abs(resk);
  double fv1[10], fv2[10];
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    fv1[j] = f(center - dx);
    fv2[j] = f(center + dx);
    const double s = fv1[j] + fv2[j];
    resk += kWgk[j] * s;
    resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * s;
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[10] * std::abs(fc - mean);
  for (int j = 0; j < 10; ++j) resasc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));

  const double result = resk * half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double uflow = std::numeric_limits<double>::min();
  if (resabs > uflow / (50.0 * eps)) err = std::max(eps * 50.0 * resabs, err);
  return {a, b, result, err};
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw DomainError("quadrature tolerances must be positive");
  if (max_subdivisions < 1) throw DomainError("quadrature needs at least one subdivision");
  if (!(tail_cutoff >= 6.0)) throw DomainError("quadrature tail cutoff must be at least 6");
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, const QuadratureSpec& spec,
                           const std::vector<double>& breakpoints) {
  spec.validate();
  if (a == b) return {0.0, 0.0, 0, true};
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }
  std::vector<double> cuts{a};
  for (double x : breakpoints)
    if (x > a && x < b) cuts.push_back(x);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::priority_queue<Segment> heap;
  double total = 0.0;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Segment s = gk21(f, cuts[i], cuts[i + 1]);
    total += s.value;
    total_err += s.error;
    heap.push(s);
  }
  int intervals = static_cast<int>(heap.size());
  auto tolerance = [&] { return std::max(spec.abs_tol, spec.rel_tol * std::abs(total)); };

  while (total_err > tolerance() && intervals < spec.max_subdivisions) {
    Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // interval exhausted at machine resolution
    heap.pop();
    Segment left = gk21(f, worst.a, mid);
    Segment right = gk21(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++intervals;
  }
  // Re-sum to shed the drift of the running updates.
  double value = 0.0;
  double err = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  return {sign * value, err, intervals, err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(value))};
}

QuadratureResult integrate_unit_quantile(const std::function<double(const UnitPoint&)>& g, const QuadratureSpec& spec,
                                         const std::vector<double>& z_breakpoints) {
  spec.validate();
  const double c = spec.tail_cutoff;
  std::vector<double> t_breaks{0.0};
  for (double z : z_breakpoints)
    if (z > 0.0 && z < 1.0) t_breaks.push_back(normal_quantile(z));
  auto h = [&](double t) {
    const UnitPoint u{normal_cdf(t), normal_cdf(-t), t};
    const double w = normal_pdf(t);
    if (w == 0.0) return 0.0;
    return g(u) * w;
  };
  return integrate(h, -c, c, spec, t_breaks);
}

}  // namespace bootcov
