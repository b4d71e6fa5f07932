#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>

#include "bootcov/binom_one.hpp"
#include "bootcov/binom_two.hpp"
#include "bootcov/eval.hpp"
#include "bootcov/normal_param.hpp"
#include "bootcov/plan.hpp"
#include "bootcov/rng.hpp"

namespace bootcov {

struct McConfig {
  long reps = 100000;
  std::uint64_t seed = 0;
  unsigned streams = 1;  // worker threads; results do not depend on it

  /// Throws DomainError unless reps >= 100 and streams >= 1.
  void validate() const;
};

struct McEstimate {
  double coverage_hat = 0.0;
  double coverage_se = 0.0;
  double el_hat = 0.0;
  double el_se = 0.0;
  long reps = 0;

  EvalResult to_eval(std::uint64_t seed) const;
};

/// One replicate's contribution: coverage (an indicator, or a conditional
/// probability under Rao-Blackwellization) and interval width.
struct Replicate {
  double coverage = 0.0;
  double width = 0.0;
};

/// Runs body(rep, rng) for rep = 0..reps-1, each with its own generator
/// seeded from (config.seed, rep), and summarizes in replicate order. The
/// result is bit-identical for any stream count.
McEstimate run_replicates(const McConfig& config, const std::function<Replicate(long, Xoshiro256&)>& body);

/// Data-generating family for location designs.
enum class DataFamily { Normal, Laplace };

struct OneSampleMcDesign {
  OneSampleDesign design;
  double p = 0.0;
};

struct TwoSampleMcDesign {
  TwoSampleDesign design;
  TwoSampleTarget target = TwoSampleTarget::Difference;
  double axis1 = 0.0;  // d or theta
  double p2 = 0.0;
};

/// Normal data with known sigma, parametric bootstrap of the mean or median.
struct NormalKnownMcDesign {
  long n = 0;
  BootstrapPlan plan;
  NormalEstimator estimator = NormalEstimator::Mean;
  double mu = 0.0;
  double sigma = 1.0;
};

/// Normal data, parametric bootstrap from N(ybar, s^2) with the divisor-n s.
struct NormalUnknownMcDesign {
  long n = 0;
  BootstrapPlan plan;
  double mu = 0.0;
  double sigma = 1.0;
};

/// Nonparametric (with-replacement) percentile bootstrap of the mean or median.
struct NonparamMcDesign {
  long n = 0;
  BootstrapPlan plan;
  NormalEstimator estimator = NormalEstimator::Mean;
  DataFamily family = DataFamily::Normal;
  double mu = 0.0;
  double scale = 1.0;
};

using McDesign =
    std::variant<OneSampleMcDesign, TwoSampleMcDesign, NormalKnownMcDesign, NormalUnknownMcDesign, NonparamMcDesign>;

/// Full-pipeline simulation: data at the true parameter, m bootstrap
/// estimates, interval [u_(m_l), u_(m_u)], coverage indicator and width.
McEstimate simulate(const McDesign& design, const McConfig& config);

/// Outcome count exhaustive() would visit; saturates at UINT64_MAX.
std::uint64_t exhaustive_size(const McDesign& design);
inline constexpr std::uint64_t kExhaustiveCap = 10'000'000;

/// Exact coverage and EL by complete enumeration of data outcomes and
/// bootstrap multisets. Binomial designs only; throws UnsupportedDesign for
/// continuous designs and EnumerationCapExceeded beyond kExhaustiveCap.
EvalResult exhaustive(const McDesign& design, std::uint64_t cap = kExhaustiveCap);

std::string describe(const McDesign& design);

}  // namespace bootcov
