#include <iostream>
#include <memory>
#include <string>

#include <fmt/format.h>

#include "bootcov/validation.hpp"
#include "commands.hpp"
#include "output.hpp"

namespace bootcov::cli {
namespace {

struct ValidateArgs {
  std::string suite = "quick";
  ValidationOptions options;
  std::string out;
};

const char* kind_name(OracleKind k) {
  switch (k) {
    case OracleKind::Exhaustive:
      return "exhaustive";
    case OracleKind::MonteCarlo:
      return "monte-carlo";
    case OracleKind::ExactIdentity:
      return "identity";
  }
  return "?";
}

void run_validate(ValidateArgs a, Context& ctx) {
  Manifest manifest("validate", ctx.argc, ctx.argv);
  a.options.suite = a.suite == "full" ? Suite::Full : Suite::Quick;
  const ValidationReport rep =
      run_validation(a.options, [](const std::string& name) { std::cerr << "running: " << name << '\n'; });

  for (const auto& c : rep.comparisons)
    std::cout << fmt::format("{}  z={:+.3f}  {} [{}] {}: exact={:.12g} oracle={:.12g} se={:.3g}\n",
                             c.pass ? "PASS" : "FAIL", c.z, c.pairing, kind_name(c.kind), c.quantity, c.exact,
                             c.oracle, c.se);
  if (!rep.all_pass) {
    std::cout << "failed pairings:\n";
    for (const auto& f : rep.failed_pairings) std::cout << "  " << f << '\n';
  }
  std::cout << fmt::format("{} comparisons, {} failed pairings, {:.1f} s\n", rep.comparisons.size(),
                           rep.failed_pairings.size(), rep.seconds);

  if (!a.out.empty()) {
    CsvOut out(a.out);
    out.header({"pairing", "quantity", "oracle_kind", "exact", "oracle", "se", "z", "pass"});
    for (const auto& c : rep.comparisons)
      out.row({"\"" + c.pairing + "\"", c.quantity, kind_name(c.kind), num(c.exact), num(c.oracle), num(c.se),
               num(c.z), c.pass ? "1" : "0"});
    out.close();
  }
  auto& p = manifest.params();
  p["suite"] = a.suite;
  p["reps"] = a.options.reps;
  p["streams"] = a.options.streams;
  manifest.seed(a.options.seed);
  manifest.tolerances()["z_limit"] = a.options.z_limit;
  manifest.tolerances()["exact_tol"] = a.options.exact_tol;
  manifest.results()["all_pass"] = rep.all_pass;
  manifest.results()["failed_pairings"] = rep.failed_pairings;
  manifest.write(a.out);
  ctx.exit_code = rep.all_pass ? 0 : 1;
}

}  // namespace

void add_validate_command(CLI::App& app, Context& ctx) {
  auto va = std::make_shared<ValidateArgs>();
  auto* v = app.add_subcommand("validate", "Check exact computations against enumeration and simulation oracles");
  v->add_option("--suite", va->suite, "quick or full")->check(CLI::IsMember({"quick", "full"}))->capture_default_str();
  v->add_option("--seed", va->options.seed, "Master seed")->capture_default_str();
  v->add_option("--reps", va->options.reps, "Replications per simulated oracle")->capture_default_str();
  v->add_option("--threads", va->options.streams, "Simulation streams")->capture_default_str();
  v->add_option("--out", va->out, "Optional CSV of all comparisons");
  v->callback([va, &ctx] { run_validate(*va, ctx); });
}

}  // namespace bootcov::cli
