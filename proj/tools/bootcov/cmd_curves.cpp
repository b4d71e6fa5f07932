#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "bootcov/binom_one.hpp"
#include "bootcov/binom_two.hpp"
#include "bootcov/curve_tools.hpp"
#include "bootcov/error.hpp"
#include "bootcov/interval_table.hpp"
#include "bootcov/parallel.hpp"
#include "commands.hpp"
#include "output.hpp"

namespace bootcov::cli {
namespace {

struct CurveArgs {
  std::string design = "wilson";
  long n = 0;
  long n1 = 0;
  long n2 = 0;
  long m = 0;
  double alpha = 0.1;
  int grid = 501;
  std::vector<double> points;
  bool refine = false;
  double p2 = 0.5;
  double theta_min = 0.01;
  double theta_max = 100.0;
  std::string table_file;
  unsigned threads = 0;
  std::string out;
};

// coverage and EL at p, plus the p values where the curve can jump
struct OneSampleCurve {
  std::function<void(double, double&, double&)> eval;
  std::vector<double> breakpoints;
};

OneSampleCurve one_sample_curve(const CurveArgs& a) {
  const std::string& d = a.design;
  if (d == "wald" || d == "wilson") {
    auto model = std::make_shared<OneSampleModel>(
        OneSampleDesign{a.n, make_plan(a.m, a.alpha), d == "wald" ? Center::Wald : Center::Wilson});
    return {[model](double p, double& c, double& e) {
              c = model->coverage(p);
              e = model->el(p);
            },
            model->breakpoints()};
  }
  IntervalTable t;
  if (d == "classic-wald")
    t = wald_table(a.n, a.alpha);
  else if (d == "classic-wilson")
    t = wilson_table(a.n, a.alpha);
  else if (d == "agresti-coull")
    t = agresti_coull_table(a.n, a.alpha);
  else if (d == "clopper-pearson")
    t = clopper_pearson_table(a.n, a.alpha);
  else if (d == "table")
    t = IntervalTable::read_csv_file(a.table_file, a.n);
  else
    throw DomainError("unknown one-sample design " + d);
  auto table = std::make_shared<IntervalTable>(std::move(t));
  return {[table](double p, double& c, double& e) {
            c = coverage_table(p, *table);
            e = el_table(p, *table);
          },
          table->breakpoints()};
}

std::vector<double> uniform_grid(double lo, double hi, int count) {
  if (count < 1) throw DomainError("--grid must be at least 1");
  std::vector<double> g(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) g[i] = count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
  if (count > 1) g.back() = hi;
  return g;
}

void run_coverage_curve(const CurveArgs& a, Context& ctx) {
  Manifest manifest("coverage-curve", ctx.argc, ctx.argv);
  const bool two_sample = a.design == "diff" || a.design == "odds";
  std::vector<double> xs;
  std::vector<double> cov, el;
  std::string axis = "p";

  if (!two_sample) {
    if (a.n < 1) throw DomainError("--n is required for one-sample designs");
    const OneSampleCurve curve = one_sample_curve(a);
    xs = a.points.empty() ? uniform_grid(0.0, 1.0, a.grid) : a.points;
    if (a.refine) {
      constexpr double off = 1e-9;
      for (double b : curve.breakpoints)
        for (double x : {b - off, b, b + off})
          if (x >= 0.0 && x <= 1.0) xs.push_back(x);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (double x : xs)
      if (!(x >= 0.0 && x <= 1.0)) throw DomainError(fmt::format("p = {} outside [0,1]", x));
    cov.resize(xs.size());
    el.resize(xs.size());
    parallel_for(xs.size(), a.threads, [&](std::size_t i) { curve.eval(xs[i], cov[i], el[i]); });
  } else {
    if (a.n1 < 1 || a.n2 < 1) throw DomainError("--n1 and --n2 are required for two-sample designs");
    const TwoSampleDesign design{a.n1, a.n2, make_plan(a.m, a.alpha)};
    if (a.design == "diff") {
      axis = "d";
      xs = a.points.empty() ? uniform_grid(-a.p2, 1.0 - a.p2, a.grid) : a.points;
    } else {
      axis = "theta";
      if (!(a.theta_min > 0.0 && a.theta_max >= a.theta_min)) throw DomainError("need 0 < --theta-min <= --theta-max");
      if (a.points.empty()) {
        xs = uniform_grid(std::log(a.theta_min), std::log(a.theta_max), a.grid);
        for (double& x : xs) x = std::exp(x);
      } else {
        xs = a.points;
      }
    }
    cov.resize(xs.size());
    el.resize(xs.size());
    parallel_for(xs.size(), a.threads, [&](std::size_t i) {
      const EvalResult r =
          a.design == "diff" ? evaluate_cd({xs[i], a.p2}, design) : evaluate_ctheta({xs[i], a.p2}, design);
      cov[i] = r.coverage;
      el[i] = r.el;
    });
    manifest.params()["n1"] = a.n1;
    manifest.params()["n2"] = a.n2;
    manifest.params()["p2"] = a.p2;
  }

  CsvOut out(a.out);
  out.header({axis, "coverage", "el"});
  for (std::size_t i = 0; i < xs.size(); ++i) out.row({num(xs[i]), num(cov[i]), num(el[i])});
  out.close();

  auto& p = manifest.params();
  p["design"] = a.design;
  if (!two_sample) p["n"] = a.n;
  p["m"] = a.m;
  p["alpha"] = a.alpha;
  p["grid"] = a.grid;
  p["points"] = a.points;
  p["refine"] = a.refine;
  if (a.design == "odds") {
    p["theta_min"] = a.theta_min;
    p["theta_max"] = a.theta_max;
  }
  if (a.design == "table") p["table_file"] = a.table_file;
  manifest.tolerances()["breakpoint_offset"] = a.refine ? 1e-9 : 0.0;
  manifest.results()["rows"] = xs.size();
  manifest.write(a.out);
}

struct SurfaceArgs {
  std::string which = "d";
  long n1 = 0;
  long n2 = 0;
  long m = 0;
  double alpha = 0.1;
  int grid = 101;
  double theta_min = 1.0;
  double theta_max = 100.0;
  unsigned threads = 0;
  std::string out;
};

void run_surface(const SurfaceArgs& a, Context& ctx) {
  Manifest manifest("surface", ctx.argc, ctx.argv);
  const TwoSampleDesign design{a.n1, a.n2, make_plan(a.m, a.alpha)};
  SurfaceSpec spec;
  spec.axis1_points = a.grid;
  spec.p2_points = a.grid;
  spec.theta_min = a.theta_min;
  spec.theta_max = a.theta_max;
  spec.threads = a.threads == 0 ? default_threads() : a.threads;
  const TwoSampleTarget target = a.which == "d" ? TwoSampleTarget::Difference : TwoSampleTarget::OddsRatio;
  const Surface s = surface_grid(design, target, spec);

  CsvOut out(a.out);
  out.header({a.which == "d" ? "d" : "theta", "p2", "coverage", "el"});
  for (const auto& pt : s.points) out.row({num(pt.axis1), num(pt.p2), num(pt.coverage), num(pt.el)});
  out.close();

  const double level = 1.0 - a.alpha;
  const double below = s.fraction_below(level);
  std::cerr << fmt::format("summary: points={} min_coverage={:.17g} fraction_below_{:g}={:.17g}\n", s.points.size(),
                           s.min_coverage(), level, below);

  auto& p = manifest.params();
  p["which"] = a.which;
  p["n1"] = a.n1;
  p["n2"] = a.n2;
  p["m"] = a.m;
  p["alpha"] = a.alpha;
  p["grid"] = a.grid;
  if (target == TwoSampleTarget::OddsRatio) {
    p["theta_min"] = a.theta_min;
    p["theta_max"] = a.theta_max;
  }
  manifest.results()["min_coverage"] = s.min_coverage();
  manifest.results()["fraction_below_level"] = below;
  manifest.results()["points"] = s.points.size();
  manifest.write(a.out);
}

}  // namespace

void add_curve_commands(CLI::App& app, Context& ctx) {
  auto ca = std::make_shared<CurveArgs>();
  auto* c = app.add_subcommand("coverage-curve", "Coverage and expected length along one parameter axis");
  c->add_option("--design", ca->design,
                "wald | wilson (bootstrap), classic-wald | classic-wilson | agresti-coull | clopper-pearson | "
                "table, or diff | odds (two-sample, varying d or theta at fixed --p2)")
      ->required();
  c->add_option("--n", ca->n, "Sample size (one-sample designs)");
  c->add_option("--n1", ca->n1, "First sample size (two-sample designs)");
  c->add_option("--n2", ca->n2, "Second sample size (two-sample designs)");
  c->add_option("--m", ca->m, "Bootstrap replicates")->required();
  c->add_option("--alpha", ca->alpha, "1 - nominal level")->capture_default_str();
  c->add_option("--grid", ca->grid, "Uniform grid size")->capture_default_str();
  c->add_option("--points", ca->points, "Explicit parameter values instead of the uniform grid")->delimiter(',');
  c->add_flag("--refine", ca->refine, "Add points just either side of every breakpoint (one-sample designs)");
  c->add_option("--p2", ca->p2, "Fixed p2 for two-sample curves")->capture_default_str();
  c->add_option("--theta-min", ca->theta_min, "Lower end of the log-spaced theta axis")->capture_default_str();
  c->add_option("--theta-max", ca->theta_max, "Upper end of the log-spaced theta axis")->capture_default_str();
  c->add_option("--table-file", ca->table_file, "Interval table CSV (y,lower,upper) for --design table");
  c->add_option("--threads", ca->threads, "Worker threads, 0 = all cores")->capture_default_str();
  c->add_option("--out", ca->out, "Output CSV (stdout when omitted)");
  c->callback([ca, &ctx] { run_coverage_curve(*ca, ctx); });

  auto sa = std::make_shared<SurfaceArgs>();
  auto* s = app.add_subcommand("surface", "Two-sample coverage surface over (d, p2) or (theta, p2)");
  s->add_option("--which", sa->which, "d or theta")->check(CLI::IsMember({"d", "theta"}))->capture_default_str();
  s->add_option("--n1", sa->n1, "First sample size")->required();
  s->add_option("--n2", sa->n2, "Second sample size")->required();
  s->add_option("--m", sa->m, "Bootstrap replicates")->required();
  s->add_option("--alpha", sa->alpha, "1 - nominal level")->capture_default_str();
  s->add_option("--grid", sa->grid, "Points per axis")->capture_default_str();
  s->add_option("--theta-min", sa->theta_min)->capture_default_str();
  s->add_option("--theta-max", sa->theta_max)->capture_default_str();
  s->add_option("--threads", sa->threads, "Worker threads, 0 = all cores")->capture_default_str();
  s->add_option("--out", sa->out, "Output CSV (stdout when omitted)");
  s->callback([sa, &ctx] { run_surface(*sa, ctx); });
}

}  // namespace bootcov::cli
