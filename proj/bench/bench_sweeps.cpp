// Serial reference loop vs OpenMP sweep on the two hot kernels: the Clarkson
// inequality sweep and the convexity-modulus sampler.

#include <benchmark/benchmark.h>

#include "ncorlicz/geometry.hpp"
#include "ncorlicz/rng.hpp"
#include "ncorlicz/sweep.hpp"

using namespace nco;

namespace {

TrialOutcome clarkson_trial(std::uint64_t ts, long) {
  static const TracialAlgebra alg = TracialAlgebra::full_matrix(3);
  static const OrliczFunction phi = OrliczFunction::power(1.5);
  const Operator a = random_operator(alg, OperatorKind::general, 1.0, derive_seed(ts, 1));
  const Operator b = random_operator(alg, OperatorKind::general, 1.0, derive_seed(ts, 2));
  TrialOutcome out;
  out.slack = clarkson_check(a, b, phi, 0.5);
  return out;
}

void BM_ClarksonSweepSerial(benchmark::State& state) {
  SweepOptions opt{.trials = state.range(0), .seed = 11, .tolerance = 1e-8, .threads = 1};
  for (auto _ : state) {
    auto stats = run_sweep_serial(opt, clarkson_trial);
    benchmark::DoNotOptimize(stats.min_slack);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ClarksonSweepOpenMP(benchmark::State& state) {
  SweepOptions opt{.trials = state.range(0), .seed = 11, .tolerance = 1e-8, .threads = 0};
  for (auto _ : state) {
    auto stats = run_sweep(opt, clarkson_trial);
    benchmark::DoNotOptimize(stats.min_slack);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ConvexitySamplerSerial(benchmark::State& state) {
  const OrliczFunction phi = OrliczFunction::power(1.5);
  const TracialAlgebra alg = TracialAlgebra::full_matrix(2);
  for (auto _ : state) {
    auto est = convexity_modulus_estimate(phi, 0.5, 1.0, alg, state.range(0), 7, 1);
    benchmark::DoNotOptimize(est.estimate);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ConvexitySamplerOpenMP(benchmark::State& state) {
  const OrliczFunction phi = OrliczFunction::power(1.5);
  const TracialAlgebra alg = TracialAlgebra::full_matrix(2);
  for (auto _ : state) {
    auto est = convexity_modulus_estimate(phi, 0.5, 1.0, alg, state.range(0), 7, 0);
    benchmark::DoNotOptimize(est.estimate);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_ClarksonSweepSerial)->Arg(256)->Arg(1024)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClarksonSweepOpenMP)->Arg(256)->Arg(1024)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvexitySamplerSerial)->Arg(256)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvexitySamplerOpenMP)->Arg(256)->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
