#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "gsp/localization.hpp"
#include "gsp/selection.hpp"

namespace {

struct Fixture {
  gsp::GftBasis basis;
  gsp::VertexSet s;
  gsp::FrequencySet f;

  explicit Fixture(int n)
      : basis(gsp::eigendecompose(
            benchutil::er_graph(n, 11).laplacian(gsp::LaplacianKind::combinatorial))),
        s(gsp::VertexSet::none(n)),
        f(gsp::FrequencySet::none(n)) {
    std::vector<int> sv, fv;
    for (int i = 0; i < n / 3; ++i) sv.push_back(3 * i);
    for (int i = 0; i < n / 4; ++i) fv.push_back(i);
    s = gsp::VertexSet::from_zero_based(sv, n);
    f = gsp::FrequencySet::from_zero_based(fv, n);
  }
};

}  // namespace

static void BM_SlepianVectors(benchmark::State& state) {
  const Fixture fx(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gsp::slepian_vectors(fx.basis, fx.s, fx.f));
  }
}
BENCHMARK(BM_SlepianVectors)->Arg(64)->Arg(128)->Arg(256);

static void BM_DofCounts(benchmark::State& state) {
  const Fixture fx(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gsp::dof_counts(fx.basis, fx.s, fx.f));
  }
}
BENCHMARK(BM_DofCounts)->Arg(64)->Arg(128);

static void BM_GreedyMinBdc(benchmark::State& state) {
  const Fixture fx(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gsp::select_greedy_min_bdc(fx.basis, fx.f, fx.basis.size() / 4));
  }
}
BENCHMARK(BM_GreedyMinBdc)->Arg(64);
