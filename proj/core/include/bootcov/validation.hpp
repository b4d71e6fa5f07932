#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace bootcov {

enum class Suite { Quick, Full };

enum class OracleKind { Exhaustive, MonteCarlo, ExactIdentity };

/// One exact-vs-oracle comparison.
struct Comparison {
  std::string pairing;
  std::string quantity;
  OracleKind kind = OracleKind::MonteCarlo;
  double exact = 0.0;
  double oracle = 0.0;
  double se = 0.0;  // Monte Carlo standard error (joint when both sides are simulated)
  double z = 0.0;   // (exact - oracle) / se, 0 when se == 0
  bool pass = false;
};

struct ValidationOptions {
  Suite suite = Suite::Quick;
  std::uint64_t seed = 20240611;
  long reps = 100000;
  unsigned streams = 1;
  double z_limit = 3.0;
  double exact_tol = 1e-12;
};

/// A registered pairing: an exact operation, its oracle, and the instance.
struct OraclePairing {
  std::string name;
  std::string module;
  bool quick = false;  // part of the quick suite
  std::function<std::vector<Comparison>(const ValidationOptions&)> run;
};

const std::vector<OraclePairing>& oracle_registry();

struct ValidationReport {
  std::vector<Comparison> comparisons;
  std::vector<std::string> failed_pairings;
  bool all_pass = true;
  double seconds = 0.0;
};

/// Runs the pairings of the chosen suite. progress, when set, is called with
/// each pairing's name before it runs.
ValidationReport run_validation(const ValidationOptions& options,
                                const std::function<void(const std::string&)>& progress = {});

}  // namespace bootcov
