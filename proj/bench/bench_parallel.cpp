// Serial reference vs OpenMP paths for the data-parallel kernels. Arg 0 runs
// the serial policy, arg 1 the parallel one.
#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "hpgrowth/covering.hpp"
#include "hpgrowth/growth.hpp"

using namespace hpgrowth;

namespace {

ExecPolicy policy_of(const benchmark::State& state) {
  return state.range(0) == 0 ? ExecPolicy::serial : ExecPolicy::parallel;
}

DiscreteMeasure bench_measure(int atoms) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> lr(std::log(2.0), std::log(1000.0));
  std::uniform_real_distribution<double> th(0.05, kPi - 0.05);
  std::vector<Atom> out;
  for (int i = 0; i < atoms; ++i) out.push_back({UpperPoint(std::polar(std::exp(lr(rng)), th(rng))), 1e-6});
  return DiscreteMeasure(out);
}

void BM_GrowthReport(benchmark::State& state) {
  GrowthScenario s;
  s.density = BoundaryDensity::power(1.5);
  s.measure = bench_measure(100);
  s.m = KernelOrder(1);
  SamplingPlan plan;
  plan.rays = {kPi / 6, kPi / 4, kPi / 2};
  plan.annulus_samples = 5;
  const ExceptionalCover cover = build_exceptional_cover(s.measure, {1.0, 5.0 * s.measure.total_mass()}, 20000.0);
  for (auto _ : state) benchmark::DoNotOptimize(growth_report(s, plan, cover, policy_of(state)));
}
BENCHMARK(BM_GrowthReport)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_InequalitySweep(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(lemma2_sweep(Lemma2Case::four, KernelOrder(4), 10000, 1, policy_of(state)));
  }
}
BENCHMARK(BM_InequalitySweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BuildCover(benchmark::State& state) {
  const DiscreteMeasure mu = bench_measure(200);
  const CoverParams p{1.0, 5.0 * mu.total_mass()};
  for (auto _ : state) benchmark::DoNotOptimize(build_exceptional_cover(mu, p, 20000.0, policy_of(state)));
}
BENCHMARK(BM_BuildCover)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Certify(benchmark::State& state) {
  const DiscreteMeasure mu = bench_measure(200);
  const CoverParams p{1.0, 5.0 * mu.total_mass()};
  const ExceptionalCover cover = build_exceptional_cover(mu, p, 20000.0);
  for (auto _ : state) benchmark::DoNotOptimize(certify_complement(mu, p, cover, 10000, 3, 20000.0, policy_of(state)));
}
BENCHMARK(BM_Certify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
