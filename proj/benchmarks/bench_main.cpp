#include <benchmark/benchmark.h>

#include "bootcov/binom_one.hpp"
#include "bootcov/binom_two.hpp"
#include "bootcov/nonparam.hpp"
#include "bootcov/normal_param.hpp"
#include "bootcov/stats.hpp"

using namespace bootcov;

static void BM_BinomCdfDirect(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(binom_cdf_direct(n / 3, n, 0.37));
}
BENCHMARK(BM_BinomCdfDirect)->Arg(10)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_BinomCdfBeta(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(binom_cdf_beta(n / 3, n, 0.37));
}
BENCHMARK(BM_BinomCdfBeta)->Arg(10)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_ElMean(benchmark::State& state) {
  const auto plan = make_plan(state.range(0), 0.1);
  const QSpec q = QSpec::mean(5);
  for (auto _ : state) benchmark::DoNotOptimize(el_cq(q, plan).value);
}
BENCHMARK(BM_ElMean)->Arg(100)->Arg(5000)->Unit(benchmark::kMicrosecond);

static void BM_ElMedian(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(el_cnm(31, state.range(0), 0.1));
}
BENCHMARK(BM_ElMedian)->Arg(100)->Arg(5000)->Unit(benchmark::kMicrosecond);

static void BM_OneSampleModel(benchmark::State& state) {
  const OneSampleDesign d{state.range(0), make_plan(10000, 0.1), Center::Wilson};
  for (auto _ : state) {
    OneSampleModel m(d);
    benchmark::DoNotOptimize(m.coverage_area_exact());
  }
}
BENCHMARK(BM_OneSampleModel)->Arg(10)->Arg(30)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_DistDhat(benchmark::State& state) {
  const TwoSampleDesign d{state.range(0), 2 * state.range(0), make_plan(1000, 0.1)};
  for (auto _ : state) benchmark::DoNotOptimize(dist_dhat(d.n1 / 3, d.n2 / 2, d).size());
}
BENCHMARK(BM_DistDhat)->Arg(5)->Arg(30)->Unit(benchmark::kMicrosecond);

// 1000 replicates per iteration; the per-design count tables are built once per call.
static void BM_CpnRaoBlackwell(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(coverage_cpn(state.range(0), 5000, 0.05, CpnMode::RaoBlackwellMc, 1000, 1).coverage);
}
BENCHMARK(BM_CpnRaoBlackwell)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_Surface(benchmark::State& state) {
  const TwoSampleDesign d{30, 60, make_plan(1000, 0.1)};
  SurfaceSpec spec;
  spec.axis1_points = 21;
  spec.p2_points = 21;
  for (auto _ : state) benchmark::DoNotOptimize(surface_grid(d, TwoSampleTarget::Difference, spec).min_coverage());
}
BENCHMARK(BM_Surface)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
