#include <cmath>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "bootcov/binom_one.hpp"
#include "bootcov/curve_tools.hpp"
#include "bootcov/error.hpp"
#include "bootcov/nonparam.hpp"
#include "bootcov/normal_param.hpp"
#include "bootcov/parallel.hpp"
#include "commands.hpp"
#include "output.hpp"

namespace bootcov::cli {
namespace {

// 1 - alpha printed without floating noise, e.g. 0.9 rather than 0.90000000000000002.
std::string level_label(double alpha) { return fmt::format("{:.12g}", 1.0 - alpha); }

struct AreaArgs {
  std::vector<long> n_list;
  std::vector<long> m_list;
  std::vector<double> alpha_list;
  std::string design = "wilson";
  std::string method = "exact";
  unsigned threads = 0;
  std::string out;
};

void run_table_areas(const AreaArgs& a, Context& ctx) {
  Manifest manifest("table-areas", ctx.argc, ctx.argv);
  const Center center = a.design == "wald" ? Center::Wald : Center::Wilson;
  struct Cell {
    long n, m;
    double alpha;
    double area = 0.0;
  };
  std::vector<Cell> cells;
  for (long n : a.n_list)
    for (long m : a.m_list)
      for (double al : a.alpha_list) {
        make_plan(m, al);
        cells.push_back({n, m, al});
      }
  parallel_for(cells.size(), a.threads, [&](std::size_t i) {
    Cell& c = cells[i];
    const OneSampleModel model({c.n, make_plan(c.m, c.alpha), center});
    if (a.method == "exact") {
      c.area = model.coverage_area_exact();
    } else {
      const auto r = area_under([&](double p) { return model.coverage(p); }, model.breakpoints());
      if (!r.converged) throw QuadratureNotConverged("table-areas: quadrature did not converge", r.value, r.abs_error);
      c.area = r.value;
    }
  });

  CsvOut out(a.out);
  std::vector<std::string> head{"n", "m"};
  for (double al : a.alpha_list) head.push_back(level_label(al));
  out.header(head);
  std::size_t k = 0;
  for (long n : a.n_list)
    for (long m : a.m_list) {
      std::vector<std::string> row{std::to_string(n), std::to_string(m)};
      for (std::size_t j = 0; j < a.alpha_list.size(); ++j) row.push_back(num(cells[k++].area));
      out.row(row);
    }
  out.close();

  auto& p = manifest.params();
  p["n_list"] = a.n_list;
  p["m_list"] = a.m_list;
  p["alpha_list"] = a.alpha_list;
  p["design"] = a.design;
  p["method"] = a.method;
  if (a.method == "quadrature") {
    const QuadratureSpec q;
    manifest.tolerances()["quadrature_abs"] = q.abs_tol;
    manifest.tolerances()["quadrature_rel"] = q.rel_tol;
  }
  manifest.write(a.out);
}

struct NormalArgs {
  std::vector<long> n_list;
  std::vector<long> m_list;
  std::vector<double> alpha_list;
  long reps = 100000;
  std::uint64_t seed = 0;
  std::string cpn_mode = "rb";
  double sigma = 1.0;
  unsigned threads = 0;
  std::string out;
};

struct NormalRow {
  std::string interval;
  EvalResult cp;
  EvalResult el;
};

EvalResult exact_value(double v) {
  EvalResult r;
  r.coverage = r.el = v;
  r.method = Method::Exact;
  return r;
}

EvalResult quad_value(double v) {
  EvalResult r = exact_value(v);
  r.method = Method::Quadrature;
  r.tolerance = QuadratureSpec{}.rel_tol;
  return r;
}

std::vector<NormalRow> normal_rows(long n, long m, double alpha, const NormalArgs& a, unsigned streams) {
  const auto plan = make_plan(m, alpha);
  const double cq = coverage_cq(plan).value;
  std::vector<NormalRow> rows;
  rows.push_back({"C_N", exact_value(cq), quad_value(el_cq(QSpec::mean(n), plan, a.sigma).value)});

  CpnOptions o;
  o.mc = {a.reps, a.seed, streams};
  o.sigma = a.sigma;
  if (n <= 2)
    o.mode = CpnMode::ExactEnum;
  else if (a.cpn_mode == "full" || n > kCompositionCap)
    o.mode = CpnMode::FullMc;
  else
    o.mode = CpnMode::RaoBlackwellMc;
  if (o.mode == CpnMode::FullMc)
    warn_simulation_cost(n, m, o.mc.reps);
  const EvalResult pn = evaluate_cpn(n, m, alpha, o);
  rows.push_back({"C_pN", pn, pn});

  if (n >= 2) rows.push_back({"C_Nu", quad_value(coverage_cnu(n, m, alpha)), quad_value(el_cnu(n, m, alpha, a.sigma))});
  if (n % 2 == 1) {
    rows.push_back({"C_NM", exact_value(cq), quad_value(el_cnm(n, m, alpha, a.sigma))});
    rows.push_back({"C_pM", exact_value(coverage_cpm(n, m, alpha)),
                    quad_value(el_cpm(n, m, alpha, QuantileFamily::normal_family(a.sigma)))});
  } else {
    std::cerr << fmt::format("note: n={} is even; C_NM and C_pM rows omitted\n", n);
  }
  rows.push_back({"z", exact_value(1.0 - alpha), exact_value(z_interval_el(n, alpha, a.sigma))});
  if (n >= 2) rows.push_back({"t", exact_value(1.0 - alpha), exact_value(t_interval_el(n, alpha, a.sigma))});
  return rows;
}

void run_table_normal(const NormalArgs& a, Context& ctx) {
  Manifest manifest("table-normal", ctx.argc, ctx.argv);
  const unsigned streams = a.threads == 0 ? default_threads() : a.threads;
  CsvOut out(a.out);
  out.header({"n", "m", "level", "interval", "cp", "el", "cp_se", "el_se", "cp_method", "el_method"});
  for (long n : a.n_list)
    for (long m : a.m_list)
      for (double al : a.alpha_list)
        for (const auto& r : normal_rows(n, m, al, a, streams)) {
          const bool mc = r.cp.method == Method::MonteCarlo;
          out.row({std::to_string(n), std::to_string(m), level_label(al), r.interval, num(r.cp.coverage),
                   num(r.el.el), mc ? num(r.cp.coverage_se) : "", mc ? num(r.el.el_se) : "", r.cp.method_tag(),
                   r.el.method_tag()});
        }
  out.close();

  auto& p = manifest.params();
  p["n_list"] = a.n_list;
  p["m_list"] = a.m_list;
  p["alpha_list"] = a.alpha_list;
  p["reps"] = a.reps;
  p["cpn_mode"] = a.cpn_mode;
  p["sigma"] = a.sigma;
  p["streams"] = streams;
  manifest.seed(a.seed);
  manifest.tolerances()["quadrature_abs"] = QuadratureSpec{}.abs_tol;
  manifest.tolerances()["quadrature_rel"] = QuadratureSpec{}.rel_tol;
  manifest.write(a.out);
}

}  // namespace

void add_table_commands(CLI::App& app, Context& ctx) {
  auto aa = std::make_shared<AreaArgs>();
  auto* t = app.add_subcommand("table-areas", "Area under the coverage curve for each (n, m) and level");
  t->add_option("--n-list", aa->n_list, "Sample sizes")->required()->delimiter(',');
  t->add_option("--m-list", aa->m_list, "Bootstrap replicate counts")->required()->delimiter(',');
  t->add_option("--alpha-list", aa->alpha_list, "Values of 1 - level")->required()->delimiter(',');
  t->add_option("--design", aa->design, "wilson or wald")->check(CLI::IsMember({"wilson", "wald"}))->capture_default_str();
  t->add_option("--method", aa->method, "exact or quadrature")
      ->check(CLI::IsMember({"exact", "quadrature"}))
      ->capture_default_str();
  t->add_option("--threads", aa->threads, "Worker threads, 0 = all cores")->capture_default_str();
  t->add_option("--out", aa->out, "Output CSV (stdout when omitted)");
  t->callback([aa, &ctx] { run_table_areas(*aa, ctx); });

  auto na = std::make_shared<NormalArgs>();
  auto* nt = app.add_subcommand("table-normal", "Coverage and expected length of the normal-data intervals");
  nt->add_option("--n-list", na->n_list, "Sample sizes")->required()->delimiter(',');
  nt->add_option("--m-list", na->m_list, "Bootstrap replicate counts")->required()->delimiter(',');
  nt->add_option("--alpha-list", na->alpha_list, "Values of 1 - level")->required()->delimiter(',');
  nt->add_option("--reps", na->reps, "Monte Carlo replications")->capture_default_str();
  nt->add_option("--seed", na->seed, "Master seed for the simulated entries")->required();
  nt->add_option("--cpn-mode", na->cpn_mode, "rb (exact inner bootstrap) or full")
      ->check(CLI::IsMember({"rb", "full"}))
      ->capture_default_str();
  nt->add_option("--sigma", na->sigma)->capture_default_str();
  nt->add_option("--threads", na->threads, "Simulation streams, 0 = all cores")->capture_default_str();
  nt->add_option("--out", na->out, "Output CSV (stdout when omitted)");
  nt->callback([na, &ctx] { run_table_normal(*na, ctx); });
}

}  // namespace bootcov::cli
