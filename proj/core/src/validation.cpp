#include "bootcov/validation.hpp"

#include <chrono>
#include <cmath>

#include <fmt/format.h>

#include "bootcov/binom_one.hpp"
#include "bootcov/binom_two.hpp"
#include "bootcov/mc.hpp"
#include "bootcov/nonparam.hpp"
#include "bootcov/normal_param.hpp"
#include "bootcov/percentile.hpp"
#include "bootcov/stats.hpp"

namespace bootcov {
namespace {

Comparison versus_exact(std::string pairing, std::string quantity, double exact, double oracle,
                        const ValidationOptions& o, OracleKind kind = OracleKind::Exhaustive) {
  Comparison c{std::move(pairing), std::move(quantity), kind, exact, oracle, 0.0, 0.0, false};
  c.pass = std::abs(exact - oracle) <= o.exact_tol * std::max(1.0, std::abs(exact));
  return c;
}

Comparison versus_mc(std::string pairing, std::string quantity, double exact, double estimate, double se,
                     const ValidationOptions& o) {
  Comparison c{std::move(pairing), std::move(quantity), OracleKind::MonteCarlo, exact, estimate, se, 0.0, false};
  const double diff = exact - estimate;
  if (se > 0.0) {
    c.z = diff / se;
    c.pass = std::abs(c.z) <= o.z_limit;
  } else {
    c.pass = std::abs(diff) <= o.exact_tol * std::max(1.0, std::abs(exact));
  }
  return c;
}

McConfig config(const ValidationOptions& o, std::uint64_t salt) {
  return {o.reps, o.seed ^ (salt * 0x9e3779b97f4a7c15ULL), o.streams};
}

void add_pair(std::vector<Comparison>& out, const std::string& name, double cov, double el, const McEstimate& e,
              const ValidationOptions& o) {
  out.push_back(versus_mc(name, "coverage", cov, e.coverage_hat, e.coverage_se, o));
  out.push_back(versus_mc(name, "el", el, e.el_hat, e.el_se, o));
}

std::vector<Comparison> one_sample_mc(Center center, long n, long m, double alpha, const std::vector<double>& ps,
                                      const ValidationOptions& o, std::uint64_t salt) {
  const OneSampleDesign d{n, make_plan(m, alpha), center};
  const OneSampleModel model(d);
  std::vector<Comparison> out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const McEstimate e = simulate(OneSampleMcDesign{d, ps[i]}, config(o, salt + i));
    add_pair(out, fmt::format("{} n={} m={} alpha={} p={}", center == Center::Wald ? "C_wa" : "C_wi", n, m, alpha, ps[i]),
             model.coverage(ps[i]), model.el(ps[i]), e, o);
  }
  return out;
}

std::vector<double> nine_point_grid() { return {0.05, 0.15, 0.25, 0.35, 0.5, 0.65, 0.75, 0.85, 0.95}; }

// Deterministic pseudo-random domain points from the validation seed.
std::vector<std::pair<double, double>> domain_points(TwoSampleTarget target, std::uint64_t seed, int count) {
  Xoshiro256 rng(seed);
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i < count; ++i) {
    if (target == TwoSampleTarget::Difference) {
      const double d = -0.9 + 1.8 * rng.uniform();
      const double lo = d >= 0 ? 0.0 : -d, hi = d >= 0 ? 1.0 - d : 1.0;
      pts.emplace_back(d, lo + (hi - lo) * rng.uniform());
    } else {
      pts.emplace_back(std::exp(std::log(100.0) * rng.uniform()), 0.05 + 0.9 * rng.uniform());
    }
  }
  return pts;
}

std::vector<Comparison> two_sample_mc(TwoSampleTarget target, long n1, long n2, long m, double alpha,
                                      const std::vector<std::pair<double, double>>& pts, const ValidationOptions& o,
                                      std::uint64_t salt) {
  const TwoSampleDesign d{n1, n2, make_plan(m, alpha)};
  std::vector<Comparison> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto [a, p2] = pts[i];
    const EvalResult ex = target == TwoSampleTarget::Difference ? evaluate_cd({a, p2}, d) : evaluate_ctheta({a, p2}, d);
    const McEstimate e = simulate(TwoSampleMcDesign{d, target, a, p2}, config(o, salt + i));
    add_pair(out,
             fmt::format("{} n1={} n2={} m={} alpha={} at ({:.6g},{:.6g})",
                         target == TwoSampleTarget::Difference ? "C_d" : "C_theta", n1, n2, m, alpha, a, p2),
             ex.coverage, ex.el, e, o);
  }
  return out;
}

// Random finite distribution with K <= 6 atoms for the percentile-core check.
DiscreteDist random_dist(Xoshiro256& rng) {
  const int k = 1 + static_cast<int>(rng.below(6));
  std::vector<std::pair<Rational, double>> atoms;
  double total = 0.0;
  std::vector<double> w(k);
  for (auto& x : w) total += (x = 0.1 + rng.uniform());
  for (int i = 0; i < k; ++i) atoms.emplace_back(Rational(static_cast<std::int64_t>(rng.below(21)) - 10, 4), w[i] / total);
  return DiscreteDist::from_keyed(std::move(atoms));
}

std::vector<Comparison> percentile_mc(const ValidationOptions& o, int instances) {
  Xoshiro256 gen(o.seed ^ 0x5bd1e995ULL);
  std::vector<Comparison> out;
  for (int t = 0; t < instances; ++t) {
    const DiscreteDist dist = random_dist(gen);
    const long m = 2 + static_cast<long>(gen.below(19));
    const long ml = 1 + static_cast<long>(gen.below(static_cast<std::uint64_t>(m / 2)));
    const BootstrapPlan plan = BootstrapPlan::from_indices(m, ml, m + 1 - ml);
    const double theta = dist.values()[gen.below(dist.size())] + (gen.below(2) ? 0.0 : 0.125);
    const auto& cum = dist.cumulative();
    const auto& val = dist.values();
    const McEstimate e = run_replicates(config(o, 900 + t), [&](long, Xoshiro256& rng) {
      std::vector<double> u(static_cast<std::size_t>(m));
      for (auto& x : u) {
        const double r = rng.uniform();
        std::size_t i = 0;
        while (i + 1 < cum.size() && cum[i] < r) ++i;
        x = val[i];
      }
      std::sort(u.begin(), u.end());
      const double lo = u[plan.lower_index - 1], hi = u[plan.upper_index - 1];
      return Replicate{lo <= theta && theta <= hi ? 1.0 : 0.0, hi - lo};
    });
    add_pair(out, fmt::format("percentile calculus K={} m={} m_l={} theta={}", dist.size(), m, ml, theta),
             coverage_bracket(dist, theta, plan), expected_width(dist, plan), e, o);
  }
  return out;
}

std::vector<OraclePairing> build_registry() {
  std::vector<OraclePairing> r;

  r.push_back({"C_wa vs exhaustive (n=2, m=2, alpha=0.5, p=0.5)", "binom-one", true, [](const ValidationOptions& o) {
                 const OneSampleDesign d{2, make_plan(2, 0.5), Center::Wald};
                 const EvalResult ex = exhaustive(OneSampleMcDesign{d, 0.5});
                 const OneSampleModel model(d);
                 return std::vector<Comparison>{
                     versus_exact("C_wa exhaustive", "coverage", model.coverage(0.5), ex.coverage, o),
                     versus_exact("C_wa exhaustive", "el", model.el(0.5), ex.el, o)};
               }});
  r.push_back({"C_wi vs exhaustive (n=2, m=2, alpha=0.5, attained and interior p)", "binom-one", true,
               [](const ValidationOptions& o) {
                 const OneSampleDesign d{2, make_plan(2, 0.5), Center::Wilson};
                 const OneSampleModel model(d);
                 std::vector<Comparison> out;
                 for (double p : {model.shift() + model.scale(), 0.3, 0.77}) {
                   const EvalResult ex = exhaustive(OneSampleMcDesign{d, p});
                   out.push_back(versus_exact(fmt::format("C_wi exhaustive p={:.6g}", p), "coverage", model.coverage(p),
                                              ex.coverage, o));
                   out.push_back(versus_exact(fmt::format("C_wi exhaustive p={:.6g}", p), "el", model.el(p), ex.el, o));
                 }
                 return out;
               }});
  r.push_back({"C_wa, C_wi vs simulation (n=5, m=10, alpha=0.2, p=0.3)", "binom-one", true,
               [](const ValidationOptions& o) {
                 auto out = one_sample_mc(Center::Wald, 5, 10, 0.2, {0.3}, o, 1);
                 auto more = one_sample_mc(Center::Wilson, 5, 10, 0.2, {0.3}, o, 2);
                 out.insert(out.end(), more.begin(), more.end());
                 return out;
               }});
  r.push_back({"C_wa, C_wi vs simulation on a 9-point p grid, (n,m) in {(3,5),(5,10)}", "binom-one", false,
               [](const ValidationOptions& o) {
                 std::vector<Comparison> out;
                 std::uint64_t salt = 10;
                 for (auto [n, m, a] : {std::tuple{3L, 5L, 0.4}, std::tuple{5L, 10L, 0.2}})
                   for (Center c : {Center::Wald, Center::Wilson}) {
                     auto part = one_sample_mc(c, n, m, a, nine_point_grid(), o, salt);
                     salt += 20;
                     out.insert(out.end(), part.begin(), part.end());
                   }
                 return out;
               }});
  r.push_back({"C_d vs exhaustive (n1=n2=2, m=5, alpha=0.2, (d,p2)=(0,0.5))", "binom-two", true,
               [](const ValidationOptions& o) {
                 const TwoSampleDesign d{2, 2, make_plan(5, 0.2)};
                 const EvalResult ex = exhaustive(TwoSampleMcDesign{d, TwoSampleTarget::Difference, 0.0, 0.5});
                 const EvalResult f = evaluate_cd({0.0, 0.5}, d);
                 return std::vector<Comparison>{versus_exact("C_d exhaustive", "coverage", f.coverage, ex.coverage, o),
                                                versus_exact("C_d exhaustive", "el", f.el, ex.el, o)};
               }});
  r.push_back({"C_theta vs exhaustive (n1=n2=2, m=5, alpha=0.2, (theta,p2)=(1,0.5))", "binom-two", true,
               [](const ValidationOptions& o) {
                 const TwoSampleDesign d{2, 2, make_plan(5, 0.2)};
                 const EvalResult ex = exhaustive(TwoSampleMcDesign{d, TwoSampleTarget::OddsRatio, 1.0, 0.5});
                 const EvalResult f = evaluate_ctheta({1.0, 0.5}, d);
                 return std::vector<Comparison>{
                     versus_exact("C_theta exhaustive", "coverage", f.coverage, ex.coverage, o),
                     versus_exact("C_theta exhaustive", "el", f.el, ex.el, o)};
               }});
  r.push_back({"C_d vs simulation (n1=n2=3, m=5, alpha=0.2, (d,p2)=(0,0.5))", "binom-two", true,
               [](const ValidationOptions& o) {
                 return two_sample_mc(TwoSampleTarget::Difference, 3, 3, 5, 0.2, {{0.0, 0.5}}, o, 30);
               }});
  r.push_back({"C_d, C_theta vs simulation at 5 random points (n1=3, n2=4, m=10, alpha=0.2)", "binom-two", false,
               [](const ValidationOptions& o) {
                 auto out = two_sample_mc(TwoSampleTarget::Difference, 3, 4, 10, 0.2,
                                          domain_points(TwoSampleTarget::Difference, o.seed, 5), o, 40);
                 auto more = two_sample_mc(TwoSampleTarget::OddsRatio, 3, 4, 10, 0.2,
                                           domain_points(TwoSampleTarget::OddsRatio, o.seed + 1, 5), o, 50);
                 out.insert(out.end(), more.begin(), more.end());
                 return out;
               }});
  r.push_back({"C_N, C_NM (closed-form coverage and EL) vs simulation (n=5, m=20, alpha=0.2)", "normal-param", true,
               [](const ValidationOptions& o) {
                 const BootstrapPlan plan = make_plan(20, 0.2);
                 std::vector<Comparison> out;
                 const double cq = coverage_cq(plan).value;
                 const McEstimate em = simulate(NormalKnownMcDesign{5, plan, NormalEstimator::Mean, 0.0, 1.0}, config(o, 60));
                 add_pair(out, "C_N n=5 m=20 alpha=0.2", cq, el_cq(QSpec::mean(5), plan).value, em, o);
                 const McEstimate ed =
                     simulate(NormalKnownMcDesign{5, plan, NormalEstimator::Median, 0.0, 1.0}, config(o, 61));
                 add_pair(out, "C_NM n=5 m=20 alpha=0.2", cq, el_cq(QSpec::median(5), plan).value, ed, o);
                 return out;
               }});
  r.push_back({"C_Nu vs simulation (n=5, m=20, alpha=0.2)", "normal-param", true, [](const ValidationOptions& o) {
                 const BootstrapPlan plan = make_plan(20, 0.2);
                 const McEstimate e = simulate(NormalUnknownMcDesign{5, plan, 0.0, 1.0}, config(o, 70));
                 std::vector<Comparison> out;
                 add_pair(out, "C_Nu n=5 m=20 alpha=0.2", coverage_cnu(5, 20, 0.2), el_cnu(5, 20, 0.2), e, o);
                 return out;
               }});
  r.push_back({"C_pM vs simulation, normal and Laplace data (n=5, m=20, alpha=0.2)", "nonparam-percentile", true,
               [](const ValidationOptions& o) {
                 const BootstrapPlan plan = make_plan(20, 0.2);
                 std::vector<Comparison> out;
                 const double cov = coverage_cpm(5, 20, 0.2);
                 const McEstimate en =
                     simulate(NonparamMcDesign{5, plan, NormalEstimator::Median, DataFamily::Normal, 0.0, 1.0}, config(o, 80));
                 add_pair(out, "C_pM normal", cov, el_cpm(5, 20, 0.2), en, o);
                 const auto laplace = QuantileFamily::custom("laplace", [](double z) {
                   return z < 0.5 ? std::log(2.0 * z) : -std::log(2.0 * (1.0 - z));
                 });
                 const McEstimate el = simulate(
                     NonparamMcDesign{5, plan, NormalEstimator::Median, DataFamily::Laplace, 0.0, 1.0}, config(o, 81));
                 add_pair(out, "C_pM laplace", cov, el_cpm(5, 20, 0.2, laplace), el, o);
                 return out;
               }});
  r.push_back({"C_pN n=2 closed form vs exact enumeration and simulation (m=10, alpha=0.2)", "nonparam-percentile", true,
               [](const ValidationOptions& o) {
                 std::vector<Comparison> out;
                 CpnOptions ex;
                 ex.mode = CpnMode::ExactEnum;
                 const EvalResult en = evaluate_cpn(2, 10, 0.2, ex);
                 out.push_back(versus_exact("C_pN n=2 enumeration", "coverage", coverage_cpn_n2(10, 0.2), en.coverage, o,
                                            OracleKind::ExactIdentity));
                 const McEstimate e =
                     simulate(NonparamMcDesign{2, make_plan(10, 0.2), NormalEstimator::Mean, DataFamily::Normal, 0.0, 1.0},
                              config(o, 90));
                 add_pair(out, "C_pN n=2 m=10 alpha=0.2", coverage_cpn_n2(10, 0.2), el_cpn_n2(10, 0.2), e, o);
                 return out;
               }});
  r.push_back({"C_pN Rao-Blackwell vs full simulation (n=3, m=10, alpha=0.2)", "nonparam-percentile", true,
               [](const ValidationOptions& o) {
                 CpnOptions rb;
                 rb.mc = config(o, 100);
                 const EvalResult a = evaluate_cpn(3, 10, 0.2, rb);
                 CpnOptions full = rb;
                 full.mode = CpnMode::FullMc;
                 full.mc = config(o, 101);
                 const EvalResult b = evaluate_cpn(3, 10, 0.2, full);
                 const double se_c = std::hypot(a.coverage_se, b.coverage_se);
                 const double se_e = std::hypot(a.el_se, b.el_se);
                 return std::vector<Comparison>{
                     versus_mc("C_pN n=3 m=10 alpha=0.2 rb vs full", "coverage", a.coverage, b.coverage, se_c, o),
                     versus_mc("C_pN n=3 m=10 alpha=0.2 rb vs full", "el", a.el, b.el, se_e, o)};
               }});
  r.push_back({"Bootstrap-mean enumeration of (0,1,5) against hand-counted compositions", "nonparam-percentile", true,
               [](const ValidationOptions& o) {
                 const CompositionDist cd = dist_mean_boot(std::vector<Rational>{0, 1, 5});
                 // P(mean* = 2) = 6/27 and H(2) = 17/27, H(0) = 1/27, H(5) = 1
                 std::vector<Comparison> out;
                 for (std::size_t i = 0; i < cd.dist.size(); ++i) {
                   const Rational v = cd.dist.keys()[i];
                   if (v == Rational(2)) {
                     out.push_back(versus_exact("mean-boot (0,1,5)", "P(2)", Rational(6, 27).to_double(),
                                                cd.mass(i).to_double(), o, OracleKind::ExactIdentity));
                     out.push_back(versus_exact("mean-boot (0,1,5)", "H(2)", Rational(17, 27).to_double(),
                                                cd.cdf_at(i).to_double(), o, OracleKind::ExactIdentity));
                   }
                 }
                 out.push_back(versus_exact("mean-boot (0,1,5)", "H(0)", 1.0 / 27.0, cd.cdf_at(0).to_double(), o,
                                            OracleKind::ExactIdentity));
                 out.push_back(versus_exact("mean-boot (0,1,5)", "support size", 10.0, static_cast<double>(cd.dist.size()), o,
                                            OracleKind::ExactIdentity));
                 return out;
               }});
  r.push_back({"Coverage bracket and expected width vs simulation on random finite distributions", "percentile-core",
               false, [](const ValidationOptions& o) { return percentile_mc(o, 6); }});
  r.push_back({"Coverage bracket and expected width vs simulation (one random instance)", "percentile-core", true,
               [](const ValidationOptions& o) { return percentile_mc(o, 1); }});
  return r;
}

}  // namespace

const std::vector<OraclePairing>& oracle_registry() {
  static const std::vector<OraclePairing> registry = build_registry();
  return registry;
}

ValidationReport run_validation(const ValidationOptions& options,
                                const std::function<void(const std::string&)>& progress) {
  const auto start = std::chrono::steady_clock::now();
  ValidationReport report;
  for (const auto& p : oracle_registry()) {
    if (options.suite == Suite::Quick && !p.quick) continue;
    if (progress) progress(p.name);
    bool ok = true;
    for (auto& c : p.run(options)) {
      ok = ok && c.pass;
      report.comparisons.push_back(std::move(c));
    }
    if (!ok) {
      report.failed_pairings.push_back(p.name);
      report.all_pass = false;
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace bootcov
