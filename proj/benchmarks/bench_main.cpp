#include <benchmark/benchmark.h>

#include "monovex/catalog.hpp"
#include "monovex/cubical.hpp"
#include "monovex/fuzz.hpp"
#include "monovex/grid_extension.hpp"
#include "monovex/homotopy.hpp"
#include "monovex/monotone_path.hpp"
#include "monovex/retraction.hpp"

using namespace monovex;

static void BM_IsMonovexExample1(benchmark::State& state) {
  SpanComplex a = example1(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_monovex(a));
}
BENCHMARK(BM_IsMonovexExample1)->Arg(3)->Arg(8)->Arg(16);

static void BM_IsMonovexExample2Closed(benchmark::State& state) {
  SpanComplex a = example2_closed(Dyadic::pow2(-2));
  for (auto _ : state) benchmark::DoNotOptimize(is_monovex(a));
}
BENCHMARK(BM_IsMonovexExample2Closed);

static void BM_ReachableExample3(benchmark::State& state) {
  SpanComplex a = example3(Dyadic::pow2(-3));
  MonotoneRouter router(a);
  for (auto _ : state) benchmark::DoNotOptimize(router.route(Point{0, 0, 0}, Point{0, 0, 4}));
}
BENCHMARK(BM_ReachableExample3)->Unit(benchmark::kMillisecond);

static void BM_RasterExample4(benchmark::State& state) {
  const Dyadic h = Dyadic::pow2(-static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(example4_raster(h, 1));
}
BENCHMARK(BM_RasterExample4)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_BettiExample4(benchmark::State& state) {
  SpanComplex a = example4(Dyadic::pow2(-4), 1);
  Lattice grid = aligned_grid(a);
  for (auto _ : state) benchmark::DoNotOptimize(betti_numbers(CubicalComplex::from_complex(a, grid)));
}
BENCHMARK(BM_BettiExample4)->Unit(benchmark::kMillisecond);

static void BM_ExtendExample1(benchmark::State& state) {
  SpanComplex a = example1(3);
  LatticeSample seed = cube_seed(2, snapped_hull_corners(a, 2));
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) {
    ExtensionField f = extend(seed, depth, a);
    f.materialize();
    benchmark::DoNotOptimize(f.evaluated());
  }
}
BENCHMARK(BM_ExtendExample1)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_GDeltaAudit(benchmark::State& state) {
  SpanComplex a = example1(3);
  for (auto _ : state) {
    PathField g = build_g_delta(a, Dyadic::pow2(-1), 3);
    benchmark::DoNotOptimize(audit_g_delta(g, default_samples(a), 3));
  }
}
BENCHMARK(BM_GDeltaAudit)->Unit(benchmark::kMillisecond);

static void BM_RetractionStep(benchmark::State& state) {
  SpanComplex a = example1(3);
  for (auto _ : state) benchmark::DoNotOptimize(retraction_step(a, Point{2, Dyadic::pow2(-1)}));
}
BENCHMARK(BM_RetractionStep)->Unit(benchmark::kMillisecond);

static void BM_FuzzClosed(benchmark::State& state) {
  FuzzConfig cfg;
  cfg.trials = 10;
  for (auto _ : state) benchmark::DoNotOptimize(run_fuzz(cfg));
}
BENCHMARK(BM_FuzzClosed)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
