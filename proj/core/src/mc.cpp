#include "bootcov/mc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "bootcov/error.hpp"
#include "bootcov/parallel.hpp"
#include "bootcov/stats.hpp"

namespace bootcov {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool within(double lo, double x, double hi) {
  const double tol = 1e-12 * std::max(1.0, std::abs(x));
  return lo <= x + tol && x - tol <= hi;
}

// Order statistics u_(m_l), u_(m_u) of the bootstrap estimates, in place.
std::pair<double, double> order_pair(std::vector<double>& u, const BootstrapPlan& plan) {
  auto lo = u.begin() + (plan.lower_index - 1);
  std::nth_element(u.begin(), lo, u.end());
  const double ul = *lo;
  auto hi = u.begin() + (plan.upper_index - 1);
  std::nth_element(lo, hi, u.end());
  return {ul, *hi};
}

Replicate interval(std::vector<double>& u, const BootstrapPlan& plan, double truth) {
  const auto [lo, hi] = order_pair(u, plan);
  return {within(lo, truth, hi) ? 1.0 : 0.0, hi - lo};
}

double median_of(std::vector<double>& v) {
  auto mid = v.begin() + static_cast<long>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  return *mid;
}

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

void check_plan(const BootstrapPlan& plan) {
  if (plan.m < 1 || plan.lower_index < 1 || plan.lower_index > plan.upper_index || plan.upper_index > plan.m)
    throw DegeneratePlan("simulation: invalid bootstrap plan " + plan.str());
}

double draw(DataFamily family, Xoshiro256& rng) {
  return family == DataFamily::Normal ? rng.normal() : rng.laplace();
}

McEstimate simulate_one(const OneSampleMcDesign& d, const McConfig& config) {
  const long n = d.design.n;
  if (n < 1) throw DomainError("simulation: n must be at least 1");
  if (!(d.p >= 0.0 && d.p <= 1.0)) throw DomainError("simulation: p outside [0,1]");
  const BootstrapPlan& plan = d.design.plan;
  check_plan(plan);
  double a = 1.0 / static_cast<double>(n), b = 0.0;
  if (d.design.center == Center::Wilson) {
    const WilsonCoeffs w = wilson_coeffs(n, plan.alpha);
    a = w.a1;
    b = w.b1;
  }
  const BinomialSampler data(n, d.p);
  return run_replicates(config, [&](long, Xoshiro256& rng) {
    const long y = data(rng);
    const double center = d.design.center == Center::Wald ? static_cast<double>(y) / static_cast<double>(n)
                                                          : a * static_cast<double>(y) + b;
    const BinomialSampler boot(n, std::min(1.0, center));
    std::vector<double> u(static_cast<std::size_t>(plan.m));
    for (auto& v : u) {
      const long k = boot(rng);
      v = d.design.center == Center::Wald ? static_cast<double>(k) / static_cast<double>(n)
                                          : a * static_cast<double>(k) + b;
    }
    return interval(u, plan, d.p);
  });
}

McEstimate simulate_two(const TwoSampleMcDesign& d, const McConfig& config) {
  const long n1 = d.design.n1, n2 = d.design.n2;
  if (n1 < 1 || n2 < 1) throw DomainError("simulation: n1 and n2 must be at least 1");
  const BootstrapPlan& plan = d.design.plan;
  check_plan(plan);
  double p1;
  if (d.target == TwoSampleTarget::Difference) {
    DiffPoint pt{d.axis1, d.p2};
    pt.validate();
    p1 = std::clamp(pt.p1(), 0.0, 1.0);
  } else {
    OddsPoint pt{d.axis1, d.p2};
    pt.validate();
    p1 = pt.p1();
  }
  const BinomialSampler dx(n1, p1), dy(n2, d.p2);
  return run_replicates(config, [&](long, Xoshiro256& rng) {
    const long x = dx(rng), y = dy(rng);
    const BinomialSampler bu(n1, static_cast<double>(x) / static_cast<double>(n1));
    const BinomialSampler bv(n2, static_cast<double>(y) / static_cast<double>(n2));
    std::vector<double> u(static_cast<std::size_t>(plan.m));
    for (auto& v : u) {
      const long uu = bu(rng), vv = bv(rng);
      v = d.target == TwoSampleTarget::Difference
              ? static_cast<double>(uu) / static_cast<double>(n1) - static_cast<double>(vv) / static_cast<double>(n2)
              : gart_theta(uu, vv, n1, n2);
    }
    return interval(u, plan, d.axis1);
  });
}

McEstimate simulate_normal_known(const NormalKnownMcDesign& d, const McConfig& config) {
  if (d.n < 1) throw DomainError("simulation: n must be at least 1");
  if (!(d.sigma > 0.0)) throw DomainError("simulation: sigma must be positive");
  if (d.estimator == NormalEstimator::Median && d.n % 2 == 0)
    throw UnsupportedDesign("simulation: median designs need odd n");
  check_plan(d.plan);
  const bool median = d.estimator == NormalEstimator::Median;
  return run_replicates(config, [&](long, Xoshiro256& rng) {
    std::vector<double> y(static_cast<std::size_t>(d.n));
    for (auto& v : y) v = d.mu + d.sigma * rng.normal();
    const double est = median ? median_of(y) : mean_of(y);
    std::vector<double> u(static_cast<std::size_t>(d.plan.m));
    for (auto& v : u) {
      for (auto& w : y) w = est + d.sigma * rng.normal();
      v = median ? median_of(y) : mean_of(y);
    }
    return interval(u, d.plan, d.mu);
  });
}

McEstimate simulate_normal_unknown(const NormalUnknownMcDesign& d, const McConfig& config) {
  if (d.n < 2) throw DomainError("simulation: n must be at least 2");
  if (!(d.sigma > 0.0)) throw DomainError("simulation: sigma must be positive");
  check_plan(d.plan);
  return run_replicates(config, [&](long, Xoshiro256& rng) {
    std::vector<double> y(static_cast<std::size_t>(d.n));
    for (auto& v : y) v = d.mu + d.sigma * rng.normal();
    const double ybar = mean_of(y);
    double ss = 0.0;
    for (double v : y) ss += (v - ybar) * (v - ybar);
    const double s = std::sqrt(ss / static_cast<double>(d.n));  // divisor n
    std::vector<double> u(static_cast<std::size_t>(d.plan.m));
    for (auto& v : u) {
      for (auto& w : y) w = ybar + s * rng.normal();
      v = mean_of(y);
    }
    return interval(u, d.plan, d.mu);
  });
}

McEstimate simulate_nonparam(const NonparamMcDesign& d, const McConfig& config) {
  if (d.n < 1) throw DomainError("simulation: n must be at least 1");
  if (!(d.scale > 0.0)) throw DomainError("simulation: scale must be positive");
  if (d.estimator == NormalEstimator::Median && d.n % 2 == 0)
    throw UnsupportedDesign("simulation: median designs need odd n");
  check_plan(d.plan);
  const bool median = d.estimator == NormalEstimator::Median;
  return run_replicates(config, [&](long, Xoshiro256& rng) {
    std::vector<double> y(static_cast<std::size_t>(d.n));
    for (auto& v : y) v = d.mu + d.scale * draw(d.family, rng);
    std::vector<double> r(y.size());
    std::vector<double> u(static_cast<std::size_t>(d.plan.m));
    for (auto& v : u) {
      for (auto& w : r) w = y[rng.below(y.size())];
      v = median ? median_of(r) : mean_of(r);
    }
    return interval(u, d.plan, d.mu);
  });
}

// Unmerged single-draw atoms of a binomial design's bootstrap estimate.
struct Atom {
  double value;
  double prob;
};

struct DataOutcome {
  double prob;
  std::vector<Atom> atoms;
};

std::vector<DataOutcome> outcomes_of(const OneSampleMcDesign& d) {
  const long n = d.design.n;
  double a = 1.0 / static_cast<double>(n), b = 0.0;
  if (d.design.center == Center::Wilson) {
    const WilsonCoeffs w = wilson_coeffs(n, d.design.plan.alpha);
    a = w.a1;
    b = w.b1;
  }
  std::vector<DataOutcome> out;
  for (long y = 0; y <= n; ++y) {
    const double py = binom_pmf(y, n, d.p);
    if (py == 0.0) continue;
    const double c = d.design.center == Center::Wald ? static_cast<double>(y) / static_cast<double>(n)
                                                     : std::min(1.0, a * static_cast<double>(y) + b);
    DataOutcome o{py, {}};
    for (long k = 0; k <= n; ++k) {
      const double pk = binom_pmf(k, n, c);
      if (pk == 0.0) continue;
      o.atoms.push_back({d.design.center == Center::Wald ? static_cast<double>(k) / static_cast<double>(n)
                                                         : a * static_cast<double>(k) + b,
                         pk});
    }
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<DataOutcome> outcomes_of(const TwoSampleMcDesign& d) {
  const long n1 = d.design.n1, n2 = d.design.n2;
  double p1;
  if (d.target == TwoSampleTarget::Difference) {
    DiffPoint pt{d.axis1, d.p2};
    pt.validate();
    p1 = std::clamp(pt.p1(), 0.0, 1.0);
  } else {
    OddsPoint pt{d.axis1, d.p2};
    pt.validate();
    p1 = pt.p1();
  }
  std::vector<DataOutcome> out;
  for (long x = 0; x <= n1; ++x) {
    for (long y = 0; y <= n2; ++y) {
      const double pxy = binom_pmf(x, n1, p1) * binom_pmf(y, n2, d.p2);
      if (pxy == 0.0) continue;
      DataOutcome o{pxy, {}};
      for (long u = 0; u <= n1; ++u) {
        const double pu = binom_pmf(u, n1, static_cast<double>(x) / static_cast<double>(n1));
        if (pu == 0.0) continue;
        for (long v = 0; v <= n2; ++v) {
          const double pv = binom_pmf(v, n2, static_cast<double>(y) / static_cast<double>(n2));
          if (pv == 0.0) continue;
          const double val = d.target == TwoSampleTarget::Difference
                                 ? static_cast<double>(u) / static_cast<double>(n1) -
                                       static_cast<double>(v) / static_cast<double>(n2)
                                 : gart_theta(u, v, n1, n2);
          o.atoms.push_back({val, pu * pv});
        }
      }
      out.push_back(std::move(o));
    }
  }
  return out;
}

// Multisets of size m over k atoms: C(k+m-1, m), saturating.
std::uint64_t multiset_count(std::uint64_t k, std::uint64_t m) {
  if (k == 0) return 0;
  __int128_t c = 1;
  for (std::uint64_t i = 1; i <= m; ++i) {
    c = c * static_cast<__int128_t>(k - 1 + i) / static_cast<__int128_t>(i);
    if (c > static_cast<__int128_t>(std::numeric_limits<std::uint64_t>::max())) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(c);
}

// Walks every multiset of m draws over the atoms, accumulating the
// multinomial-weighted coverage indicator and width.
struct MultisetWalker {
  const std::vector<Atom>& atoms;  // sorted by value
  const BootstrapPlan& plan;
  double truth;
  std::vector<double> log_fact;
  std::vector<long> counts;
  double cov = 0.0, el = 0.0;

  void run() {
    log_fact.assign(static_cast<std::size_t>(plan.m + 1), 0.0);
    for (long i = 1; i <= plan.m; ++i) log_fact[i] = log_fact[i - 1] + std::log(static_cast<double>(i));
    counts.assign(atoms.size(), 0);
    recurse(0, plan.m);
  }

  void recurse(std::size_t i, long left) {
    if (i + 1 == atoms.size()) {
      counts[i] = left;
      visit();
      return;
    }
    for (long c = 0; c <= left; ++c) {
      counts[i] = c;
      recurse(i + 1, left - c);
    }
  }

  void visit() {
    double lw = log_fact[plan.m];
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (counts[i] == 0) continue;
      lw += counts[i] * std::log(atoms[i].prob) - log_fact[counts[i]];
    }
    const double w = std::exp(lw);
    // j-th smallest of the multiset
    auto nth = [&](long j) {
      long acc = 0;
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        acc += counts[i];
        if (acc >= j) return atoms[i].value;
      }
      return atoms.back().value;
    };
    const double lo = nth(plan.lower_index), hi = nth(plan.upper_index);
    if (within(lo, truth, hi)) cov += w;
    el += w * (hi - lo);
  }
};

}  // namespace

void McConfig::validate() const {
  if (reps < 100) throw DomainError("Monte Carlo: reps must be at least 100");
  if (streams < 1) throw DomainError("Monte Carlo: streams must be at least 1");
}

EvalResult McEstimate::to_eval(std::uint64_t seed) const {
  EvalResult r;
  r.coverage = coverage_hat;
  r.el = el_hat;
  r.method = Method::MonteCarlo;
  r.reps = reps;
  r.seed = seed;
  r.coverage_se = coverage_se;
  r.el_se = el_se;
  return r;
}

McEstimate run_replicates(const McConfig& config, const std::function<Replicate(long, Xoshiro256&)>& body) {
  config.validate();
  std::vector<Replicate> out(static_cast<std::size_t>(config.reps));
  parallel_for(out.size(), config.streams, [&](std::size_t i) {
    Xoshiro256 rng(substream_seed(config.seed, i));
    out[i] = body(static_cast<long>(i), rng);
  });
  const double n = static_cast<double>(config.reps);
  double sc = 0.0, sw = 0.0;
  bool indicator = true;
  for (const auto& r : out) {
    sc += r.coverage;
    sw += r.width;
    if (r.coverage != 0.0 && r.coverage != 1.0) indicator = false;
  }
  McEstimate e;
  e.reps = config.reps;
  e.coverage_hat = sc / n;
  e.el_hat = sw / n;
  double vc = 0.0, vw = 0.0;
  for (const auto& r : out) {
    vc += (r.coverage - e.coverage_hat) * (r.coverage - e.coverage_hat);
    vw += (r.width - e.el_hat) * (r.width - e.el_hat);
  }
  // Indicators get the binomial-proportion SE; conditional probabilities
  // (Rao-Blackwellized runs) the sample SD.
  e.coverage_se = indicator ? std::sqrt(e.coverage_hat * (1.0 - e.coverage_hat) / n) : std::sqrt(vc / (n - 1.0) / n);
  e.el_se = std::sqrt(vw / (n - 1.0) / n);
  return e;
}

McEstimate simulate(const McDesign& design, const McConfig& config) {
  config.validate();
  return std::visit(Overloaded{[&](const OneSampleMcDesign& d) { return simulate_one(d, config); },
                               [&](const TwoSampleMcDesign& d) { return simulate_two(d, config); },
                               [&](const NormalKnownMcDesign& d) { return simulate_normal_known(d, config); },
                               [&](const NormalUnknownMcDesign& d) { return simulate_normal_unknown(d, config); },
                               [&](const NonparamMcDesign& d) { return simulate_nonparam(d, config); }},
                    design);
}

namespace {

std::vector<DataOutcome> discrete_outcomes(const McDesign& design) {
  if (const auto* d = std::get_if<OneSampleMcDesign>(&design)) return outcomes_of(*d);
  if (const auto* d = std::get_if<TwoSampleMcDesign>(&design)) return outcomes_of(*d);
  throw UnsupportedDesign("exhaustive enumeration needs a binomial design");
}

const BootstrapPlan& plan_of(const McDesign& design) {
  return std::visit(Overloaded{[](const OneSampleMcDesign& d) -> const BootstrapPlan& { return d.design.plan; },
                               [](const TwoSampleMcDesign& d) -> const BootstrapPlan& { return d.design.plan; },
                               [](const auto& d) -> const BootstrapPlan& { return d.plan; }},
                    design);
}

double truth_of(const McDesign& design) {
  if (const auto* d = std::get_if<OneSampleMcDesign>(&design)) return d->p;
  if (const auto* d = std::get_if<TwoSampleMcDesign>(&design)) return d->axis1;
  return 0.0;
}

}  // namespace

std::uint64_t exhaustive_size(const McDesign& design) {
  const auto outs = discrete_outcomes(design);
  const auto m = static_cast<std::uint64_t>(plan_of(design).m);
  std::uint64_t total = 0;
  for (const auto& o : outs) {
    const std::uint64_t c = multiset_count(o.atoms.size(), m);
    if (c > std::numeric_limits<std::uint64_t>::max() - total) return std::numeric_limits<std::uint64_t>::max();
    total += c;
  }
  return total;
}

EvalResult exhaustive(const McDesign& design, std::uint64_t cap) {
  const BootstrapPlan& plan = plan_of(design);
  check_plan(plan);
  const std::uint64_t size = exhaustive_size(design);
  if (size > cap)
    throw EnumerationCapExceeded(fmt::format("exhaustive: {} outcomes exceed the cap {}", size, cap));
  auto outs = discrete_outcomes(design);
  const double truth = truth_of(design);
  EvalResult r;
  r.method = Method::Exact;
  for (auto& o : outs) {
    std::sort(o.atoms.begin(), o.atoms.end(), [](const Atom& a, const Atom& b) { return a.value < b.value; });
    MultisetWalker w{o.atoms, plan, truth, {}, {}};
    w.run();
    r.coverage += o.prob * w.cov;
    r.el += o.prob * w.el;
  }
  return r;
}

std::string describe(const McDesign& design) {
  return std::visit(
      Overloaded{
          [](const OneSampleMcDesign& d) {
            return fmt::format("one-sample {} n={} {} p={}", d.design.center == Center::Wald ? "wald" : "wilson",
                               d.design.n, d.design.plan.str(), d.p);
          },
          [](const TwoSampleMcDesign& d) {
            return fmt::format("two-sample {} n1={} n2={} {} {}={} p2={}",
                               d.target == TwoSampleTarget::Difference ? "difference" : "odds-ratio", d.design.n1,
                               d.design.n2, d.design.plan.str(),
                               d.target == TwoSampleTarget::Difference ? "d" : "theta", d.axis1, d.p2);
          },
          [](const NormalKnownMcDesign& d) {
            return fmt::format("normal known-sigma {} n={} {}",
                               d.estimator == NormalEstimator::Mean ? "mean" : "median", d.n, d.plan.str());
          },
          [](const NormalUnknownMcDesign& d) { return fmt::format("normal unknown-sigma mean n={} {}", d.n, d.plan.str()); },
          [](const NonparamMcDesign& d) {
            return fmt::format("nonparametric {} {} n={} {}", d.estimator == NormalEstimator::Mean ? "mean" : "median",
                               d.family == DataFamily::Normal ? "normal" : "laplace", d.n, d.plan.str());
          }},
      design);
}

}  // namespace bootcov
