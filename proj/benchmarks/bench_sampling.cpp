#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "gsp/sampling.hpp"
#include "gsp/sweep.hpp"
#include "gsp/synthetic.hpp"

static void BM_ReconstructDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const gsp::GftBasis basis = gsp::eigendecompose(
      benchutil::er_graph(n, 13).laplacian(gsp::LaplacianKind::combinatorial));
  std::vector<int> sv, fv;
  for (int i = 0; i < n / 2; ++i) sv.push_back(2 * i);
  for (int i = 0; i < n / 4; ++i) fv.push_back(i);
  const auto s = gsp::VertexSet::from_zero_based(sv, n);
  const auto f = gsp::FrequencySet::from_zero_based(fv, n);
  const gsp::Projector band = gsp::band_limiter(basis, f);
  const gsp::Signal sig = gsp::heat_kernel_signal(basis, 3);
  const gsp::SampledSignal fs = gsp::sample(sig, s);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gsp::reconstruct_direct(fs, band, s));
  }
}
BENCHMARK(BM_ReconstructDirect)->Arg(128)->Arg(256);

// One full sweep cell at the scale of the bundled experiment protocol.
static void BM_SweepCell(benchmark::State& state) {
  const auto stations = gsp::random_geo_stations(100, 17);
  const gsp::Graph g = gsp::build_geo_graph(stations, 80.0);
  const gsp::GftBasis basis =
      gsp::eigendecompose(g.laplacian(gsp::LaplacianKind::combinatorial));
  const gsp::Signal f = gsp::heat_kernel_signal(basis, 17);

  gsp::SweepOptions opt;
  opt.sample_sizes = {30};
  opt.bandwidths = {static_cast<int>(state.range(0))};
  opt.trials = 100;
  opt.seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gsp::nmse_sweep(basis, f, opt));
  }
}
BENCHMARK(BM_SweepCell)->Arg(10)->Arg(25);
