#include <benchmark/benchmark.h>

#include "hamcurve/curves.hpp"
#include "hamcurve/render.hpp"
#include "hamcurve/resultant.hpp"
#include "hamcurve/roots.hpp"
#include "hamcurve/topology.hpp"

using namespace hamcurve;

namespace {

const HyperellipticFamily kQuadratic({"-2*t^2 + 4*t - 4*x + 4"_mp, "-t^2 - 2*t - 2*x + 3"_mp, "2 - 2*t"_mp});
const HyperellipticFamily kQuintic({"-t/2 + x - 12"_mp, "t/2 + x"_mp, "t/2 + x"_mp, "t + 3"_mp, "1"_mp});

void BM_QuinticDiscriminant(benchmark::State& state) {
  for (auto _ : state) {
    HyperellipticFamily fam({"-t/2 + x - 12"_mp, "t/2 + x"_mp, "t/2 + x"_mp, "t + 3"_mp, "1"_mp});
    benchmark::DoNotOptimize(fam.discriminant());
  }
}
BENCHMARK(BM_QuinticDiscriminant)->Unit(benchmark::kMillisecond);

void BM_IsolateRoots(benchmark::State& state) {
  const UniPoly d = UniPoly::from_multipoly(substitute(kQuintic.discriminant(), {{"x", "7"_mp}}), "t");
  for (auto _ : state) benchmark::DoNotOptimize(isolate_real_roots(d));
}
BENCHMARK(BM_IsolateRoots)->Unit(benchmark::kMicrosecond);

void BM_SweepQuintic(benchmark::State& state) {
  kQuintic.discriminant();
  for (auto _ : state) benchmark::DoNotOptimize(sweep(kQuintic, 7, -14, 0));
}
BENCHMARK(BM_SweepQuintic)->Unit(benchmark::kMillisecond);

void BM_AnalyzeSection(benchmark::State& state) {
  const UniPoly p = kQuintic.at_xt(7, -10);
  for (auto _ : state) benchmark::DoNotOptimize(analyze_real_section(p));
}
BENCHMARK(BM_AnalyzeSection)->Unit(benchmark::kMicrosecond);

void BM_PhaseDiagram(benchmark::State& state) {
  const MultiPoly d = kQuadratic.discriminant();
  const int grid = static_cast<int>(state.range(0));
  const unsigned workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(trace_phase_diagram(d, {-2, 16, -3, 6}, grid, workers));
}
BENCHMARK(BM_PhaseDiagram)->Args({256, 1})->Args({512, 1})->Args({512, 4})->Unit(benchmark::kMillisecond);

void BM_SampleCurve(benchmark::State& state) {
  const UniPoly p = kQuintic.at_xt(7, -10);
  for (auto _ : state) benchmark::DoNotOptimize(sample_hyperelliptic(p, {-3, 3, -3.75, 3.75}, 400));
}
BENCHMARK(BM_SampleCurve)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
