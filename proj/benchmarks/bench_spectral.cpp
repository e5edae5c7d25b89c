#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "gsp/spectral.hpp"

static void BM_Eigendecompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Eigen::MatrixXd lap =
      benchutil::er_graph(n, 7).laplacian(gsp::LaplacianKind::combinatorial);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gsp::eigendecompose(lap));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_Eigendecompose)->RangeMultiplier(2)->Range(64, 512)->Complexity();

static void BM_GftRoundTrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const gsp::GftBasis basis = gsp::eigendecompose(
      benchutil::er_graph(n, 7).laplacian(gsp::LaplacianKind::combinatorial));
  const gsp::Signal f = Eigen::VectorXd::Random(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gsp::igft(basis, gsp::gft(basis, f)));
  }
}
BENCHMARK(BM_GftRoundTrip)->Arg(256);
