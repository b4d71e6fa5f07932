#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "bootcov/binom_one.hpp"
#include "bootcov/curve_tools.hpp"
#include "bootcov/error.hpp"
#include "bootcov/interval_table.hpp"
#include "bootcov/nonparam.hpp"
#include "bootcov/normal_param.hpp"
#include "bootcov/parallel.hpp"
#include "commands.hpp"
#include "output.hpp"

namespace bootcov::cli {
namespace {

struct AreaCompareArgs {
  long n = 0;
  long m = 0;
  double alpha_ref = 0.1;
  std::vector<std::string> intervals{"wald", "cwa", "cwi", "wilson", "agresti-coull", "clopper-pearson"};
  std::vector<std::string> table_files;
  double residual_tol = 0.005;
  unsigned threads = 0;
  std::string out;
};

struct Row {
  std::string name;
  bool calibrated = true;
  CalibrationResult cal;
  double min_coverage = 0.0;
  double el_area = 0.0;
};

double table_area(const IntervalTable& t, bool el) {
  const auto r = area_under([&](double p) { return el ? el_table(p, t) : coverage_table(p, t); }, t.breakpoints());
  if (!r.converged) throw QuadratureNotConverged("compare-area: quadrature did not converge", r.value, r.abs_error);
  return r.value;
}

IntervalTable classic_table(const std::string& name, long n, double alpha) {
  if (name == "wald") return wald_table(n, alpha);
  if (name == "wilson") return wilson_table(n, alpha);
  if (name == "agresti-coull") return agresti_coull_table(n, alpha);
  if (name == "clopper-pearson") return clopper_pearson_table(n, alpha);
  throw DomainError("unknown interval " + name);
}

// Fills min coverage and EL area for a calibrated or imported interval.
void summarize_table(Row& row, const IntervalTable& t) {
  row.min_coverage = icp([&](double p) { return coverage_table(p, t); }, t.breakpoints()).minimum;
  row.el_area = table_area(t, true);
}

void run_compare_area(const AreaCompareArgs& a, Context& ctx) {
  Manifest manifest("compare-area", ctx.argc, ctx.argv);
  const OneSampleModel ref({a.n, make_plan(a.m, a.alpha_ref), Center::Wilson});
  const double target = ref.coverage_area_exact();
  CalibrationOptions copt;
  copt.residual_tol = a.residual_tol;

  std::vector<Row> rows(a.intervals.size() + a.table_files.size());
  parallel_for(a.intervals.size(), a.threads, [&](std::size_t i) {
    const std::string& name = a.intervals[i];
    Row& row = rows[i];
    row.name = name;
    if (name == "cwa" || name == "cwi") {
      const Center c = name == "cwa" ? Center::Wald : Center::Wilson;
      row.cal = calibrate_alpha(
          [&](double al) { return OneSampleModel({a.n, make_plan(a.m, al), c}).coverage_area_exact(); }, target, copt);
      const OneSampleModel model({a.n, make_plan(a.m, row.cal.alpha), c});
      row.min_coverage = icp([&](double p) { return model.coverage(p); }, model.breakpoints()).minimum;
      row.el_area = model.el_area_exact();
    } else {
      row.cal = calibrate_alpha([&](double al) { return table_area(classic_table(name, a.n, al), false); }, target,
                                copt);
      summarize_table(row, classic_table(name, a.n, row.cal.alpha));
    }
  });
  for (std::size_t j = 0; j < a.table_files.size(); ++j) {
    std::string spec = a.table_files[j];
    Row& row = rows[a.intervals.size() + j];
    const auto eq = spec.find('=');
    row.name = eq == std::string::npos ? spec : spec.substr(0, eq);
    const std::string path = eq == std::string::npos ? spec : spec.substr(eq + 1);
    const IntervalTable t = IntervalTable::read_csv_file(path, a.n);
    row.calibrated = false;
    row.cal.area = table_area(t, false);
    row.cal.residual = std::abs(row.cal.area - target);
    row.cal.flagged = row.cal.residual > a.residual_tol;
    summarize_table(row, t);
  }

  CsvOut out(a.out);
  out.header({"interval", "level", "alpha", "area", "residual", "min_coverage", "el_area", "flagged"});
  for (const auto& r : rows) {
    out.row({r.name, r.calibrated ? fmt::format("{:.12g}", 1.0 - r.cal.alpha) : "",
             r.calibrated ? fmt::format("{:.12g}", r.cal.alpha) : "", num(r.cal.area), num(r.cal.residual),
             num(r.min_coverage), num(r.el_area), r.cal.flagged ? "1" : "0"});
    if (r.cal.flagged)
      std::cerr << fmt::format("warning: {} misses the reference area by {:.3g}\n", r.name, r.cal.residual);
  }
  out.close();

  auto& p = manifest.params();
  p["n"] = a.n;
  p["m"] = a.m;
  p["alpha_ref"] = a.alpha_ref;
  p["intervals"] = a.intervals;
  p["table_files"] = a.table_files;
  p["alpha_grid"] = {{"points", copt.grid_points}, {"min", copt.alpha_min}, {"max", copt.alpha_max}};
  manifest.tolerances()["residual"] = a.residual_tol;
  manifest.tolerances()["quadrature_rel"] = QuadratureSpec{}.rel_tol;
  manifest.results()["reference_area"] = target;
  manifest.write(a.out);
}

struct CcArgs {
  std::vector<long> n_list;
  std::vector<long> m_list;
  std::vector<double> alpha_list;
  long reps = 100000;
  std::uint64_t seed = 0;
  std::string cpn_mode = "rb";
  unsigned threads = 0;
  std::string out;
};

void run_compare_cc(const CcArgs& a, Context& ctx) {
  Manifest manifest("compare-cc", ctx.argc, ctx.argv);
  const unsigned streams = a.threads == 0 ? default_threads() : a.threads;
  CsvOut out(a.out);
  out.header({"n", "m", "level", "cp", "cp_se", "el_cpn", "el_cpn_se", "el_zstar", "el_z", "method"});
  for (long n : a.n_list)
    for (long m : a.m_list)
      for (double al : a.alpha_list) {
        CpnOptions o;
        o.mc = {a.reps, a.seed, streams};
        o.mode = n <= 2 ? CpnMode::ExactEnum
                        : (a.cpn_mode == "full" || n > kCompositionCap ? CpnMode::FullMc : CpnMode::RaoBlackwellMc);
        if (o.mode == CpnMode::FullMc)
          warn_simulation_cost(n, m, o.mc.reps);
        const EvalResult r = evaluate_cpn(n, m, al, o);
        out.row({std::to_string(n), std::to_string(m), fmt::format("{:.12g}", 1.0 - al), num(r.coverage),
                 num(r.coverage_se), num(r.el), num(r.el_se), num(z_star_el(r.coverage, n)),
                 num(z_interval_el(n, al)), r.method_tag()});
      }
  out.close();

  auto& p = manifest.params();
  p["n_list"] = a.n_list;
  p["m_list"] = a.m_list;
  p["alpha_list"] = a.alpha_list;
  p["reps"] = a.reps;
  p["cpn_mode"] = a.cpn_mode;
  p["streams"] = streams;
  manifest.seed(a.seed);
  manifest.write(a.out);
}

}  // namespace

void add_compare_commands(CLI::App& app, Context& ctx) {
  auto aa = std::make_shared<AreaCompareArgs>();
  auto* c = app.add_subcommand("compare-area", "Calibrate proportion intervals to a common coverage area");
  c->add_option("--n", aa->n, "Sample size")->required();
  c->add_option("--m", aa->m, "Bootstrap replicates")->required();
  c->add_option("--alpha-ref", aa->alpha_ref, "1 - level of the reference bootstrap Wilson interval")
      ->capture_default_str();
  c->add_option("--intervals", aa->intervals,
                "Comparators: wald, cwa, cwi, wilson, agresti-coull, clopper-pearson")
      ->delimiter(',')
      ->check(CLI::IsMember({"wald", "cwa", "cwi", "wilson", "agresti-coull", "clopper-pearson"}))
      ->capture_default_str();
  c->add_option("--table-files", aa->table_files, "Fixed interval tables, as path or name=path")->delimiter(',');
  c->add_option("--residual-tol", aa->residual_tol, "Area residual above which a row is flagged")
      ->capture_default_str();
  c->add_option("--threads", aa->threads, "Worker threads, 0 = all cores")->capture_default_str();
  c->add_option("--out", aa->out, "Output CSV (stdout when omitted)");
  c->callback([aa, &ctx] { run_compare_area(*aa, ctx); });

  auto ca = std::make_shared<CcArgs>();
  auto* cc = app.add_subcommand("compare-cc", "Percentile interval for the mean against a z interval of equal coefficient");
  cc->add_option("--n", ca->n_list, "Sample sizes")->required()->delimiter(',');
  cc->add_option("--m", ca->m_list, "Bootstrap replicate counts")->required()->delimiter(',');
  cc->add_option("--alpha", ca->alpha_list, "Values of 1 - level")->required()->delimiter(',');
  cc->add_option("--reps", ca->reps, "Monte Carlo replications")->capture_default_str();
  cc->add_option("--seed", ca->seed, "Master seed")->required();
  cc->add_option("--cpn-mode", ca->cpn_mode, "rb (exact inner bootstrap) or full")
      ->check(CLI::IsMember({"rb", "full"}))
      ->capture_default_str();
  cc->add_option("--threads", ca->threads, "Simulation streams, 0 = all cores")->capture_default_str();
  cc->add_option("--out", ca->out, "Output CSV (stdout when omitted)");
  cc->callback([ca, &ctx] { run_compare_cc(*ca, ctx); });
}

}  // namespace bootcov::cli
