#include <benchmark/benchmark.h>

#include <string>

#include "focal/causal.hpp"
#include "focal/curve.hpp"
#include "focal/export.hpp"
#include "focal/focal_desitter.hpp"
#include "focal/singularity.hpp"

namespace {

focal::CurveDef fixture(const char* name) { return focal::load_curve(std::string(FOCAL_CURVES_DIR) + "/" + name); }

void BM_CurveJet(benchmark::State& state) {
  const focal::CurveDef def = fixture("s31_lightlike.curve");
  const int order = static_cast<int>(state.range(0));
  double t = -0.2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(focal::curve_series(def, t, order));
    t = t > 0.2 ? -0.2 : t + 1e-3;
  }
}
BENCHMARK(BM_CurveJet)->DenseRange(1, 6);

void BM_DistanceJet(benchmark::State& state) {
  const focal::CurveDef def = fixture("r31_lightlike.curve");
  const focal::MVector v{0.0, 0.0, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(focal::classify(def, 0.0, v));
}
BENCHMARK(BM_DistanceJet);

void BM_LightlikeScan(benchmark::State& state) {
  const focal::CurveDef def = fixture("s31_lightlike.curve");
  focal::ScanOptions opt;
  opt.grid = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(focal::find_lightlike_points(def, opt));
}
BENCHMARK(BM_LightlikeScan)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_FocalGridR31(benchmark::State& state) {
  const focal::Curve curve(fixture("r31_timelike.curve"));
  focal::GridSpec grid;
  grid.n = grid.m = static_cast<int>(state.range(0));
  grid.param_lo = -1.0;
  grid.param_hi = 1.0;
  grid.mu_lo = -2.0;
  grid.mu_hi = 2.0;
  for (auto _ : state)
    benchmark::DoNotOptimize(focal::focal_mesh(curve, focal::Chart::Frenet, grid, focal::Projection::Drop4));
  state.SetItemsProcessed(state.iterations() * grid.n * grid.m);
}
BENCHMARK(BM_FocalGridR31)->Arg(20)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_FocalGridS31(benchmark::State& state) {
  const focal::Curve curve(fixture("s31_lightlike.curve"));
  focal::GridSpec grid;
  grid.n = grid.m = static_cast<int>(state.range(0));
  grid.param_lo = -0.3;
  grid.param_hi = 0.3;
  grid.mu_lo = -0.5;
  grid.mu_hi = 0.5;
  for (auto _ : state)
    benchmark::DoNotOptimize(focal::focal_mesh(curve, focal::Chart::Lightlike, grid, focal::Projection::Drop4));
  state.SetItemsProcessed(state.iterations() * grid.n * grid.m);
}
BENCHMARK(BM_FocalGridS31)->Arg(20)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
