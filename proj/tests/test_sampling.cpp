#include "gsp/sampling.hpp"

#include <doctest.h>

#include <cmath>

#include "gsp/errors.hpp"
#include "gsp/localization.hpp"
#include "gsp/numerics.hpp"
#include "test_helpers.hpp"

using gsp::Errc;
using gsp::FrequencySet;
using gsp::GftBasis;
using gsp::SampledSignal;
using gsp::Signal;
using gsp::SlepianBasis;
using gsp::VertexSet;
using testutil::fails_with;

namespace {

GftBasis basis_of(const gsp::Graph& g) {
  return gsp::eigendecompose(g.laplacian(gsp::LaplacianKind::combinatorial));
}

Signal random_bandlimited(std::mt19937_64& gen, const GftBasis& basis,
                          const FrequencySet& f) {
  Signal coeffs = Signal::Zero(basis.size());
  for (int i : f.indices()) coeffs(i) = testutil::unit_draw(gen) * 2.0 - 1.0;
  return gsp::igft(basis, coeffs);
}

// A (graph, S, F) triple valid for sampling, drawn until the condition holds
// with margin.
struct ValidInstance {
  GftBasis basis;
  VertexSet s;
  FrequencySet f;
};

ValidInstance draw_valid_instance(std::mt19937_64& gen, int n_min = 6, int n_max = 16) {
  for (;;) {
    const int n = n_min + static_cast<int>(gen() % (n_max - n_min + 1));
    GftBasis basis = basis_of(testutil::random_er_graph(gen, n));
    const int band = 1 + static_cast<int>(gen() % (n / 2));
    const int samples = band + static_cast<int>(gen() % (n - band + 1));
    const FrequencySet f = testutil::random_frequency_subset(gen, n, band);
    const VertexSet s = testutil::random_vertex_subset(gen, n, samples);
    const double norm = gsp::spectral_norm(gsp::band_limiter(basis, f).matrix *
                                           gsp::complement(gsp::vertex_limiter(s)).matrix);
    if (norm < 1.0 - 1e-6) return {std::move(basis), s, f};
  }
}

}  // namespace

TEST_CASE("sample") {
  Signal f(3);
  f << 3.0, 1.0, 4.0;

  SUBCASE("full set keeps everything") {
    const SampledSignal fs = gsp::sample(f, VertexSet::full(3));
    CHECK(fs.values.size() == 3);
    CHECK((fs.embedded() - f).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("empty set keeps nothing") {
    const SampledSignal fs = gsp::sample(f, VertexSet::none(3));
    CHECK(fs.values.size() == 0);
    CHECK(fs.embedded().cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("restriction to {1,3}") {
    const SampledSignal fs = gsp::sample(f, VertexSet::from_one_based({1, 3}, 3));
    CHECK(fs.values(0) == 3.0);
    CHECK(fs.values(1) == 4.0);
    Signal want(3);
    want << 3.0, 0.0, 4.0;
    CHECK((fs.embedded() - want).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("sampling condition") {
  auto gen = testutil::engine(67);

  SUBCASE("full vertex set always passes with norm 0") {
    const GftBasis basis = basis_of(testutil::random_connected_graph(gen, 6));
    const auto cond = gsp::sampling_condition(basis, VertexSet::full(6),
                                              testutil::random_frequency_subset(gen, 6, 3));
    CHECK(cond.ok);
    CHECK(cond.bd_c_norm <= 1e-12);
  }

  SUBCASE("fewer samples than band always fails (exhaustive on a small graph)") {
    const int n = 6;
    const GftBasis basis = basis_of(testutil::random_er_graph(gen, n));
    for (int band = 1; band <= n; ++band) {
      for (const auto& f_pick : testutil::all_subsets_of_size(n, band)) {
        const FrequencySet f = FrequencySet::from_zero_based(f_pick, n);
        for (int samples = 0; samples < band; ++samples) {
          for (const auto& s_pick : testutil::all_subsets_of_size(n, samples)) {
            const VertexSet s = VertexSet::from_zero_based(s_pick, n);
            CHECK_FALSE(gsp::sampling_condition(basis, s, f).ok);
          }
        }
      }
    }
  }

  SUBCASE("complement large enough to localize forces failure") {
    const int n = 5;
    const GftBasis basis = basis_of(testutil::random_connected_graph(gen, n));
    const FrequencySet f = testutil::random_frequency_subset(gen, n, 4);
    const VertexSet s = testutil::random_vertex_subset(gen, n, 2);  // |S^c| = 3 >= n-|F|+1
    const auto cond = gsp::sampling_condition(basis, s, f);
    CHECK_FALSE(cond.ok);
    CHECK(cond.bd_c_norm >= 1.0 - 1e-9);
  }
}

TEST_CASE("reconstruction routes") {
  auto gen = testutil::engine(71);

  SUBCASE("bandlimited signals come back exactly, and match the least-squares oracle") {
    for (int trial = 0; trial < 25; ++trial) {
      const ValidInstance inst = draw_valid_instance(gen);
      const Signal f = random_bandlimited(gen, inst.basis, inst.f);
      if (f.norm() < 1e-6) continue;
      const SampledSignal fs = gsp::sample(f, inst.s);

      const SlepianBasis slep = gsp::slepian_vectors(inst.basis, inst.s, inst.f);
      const Signal via_slepian = gsp::reconstruct_slepian(fs, slep);
      const Signal via_direct =
          gsp::reconstruct_direct(fs, gsp::band_limiter(inst.basis, inst.f), inst.s);
      const Signal via_lstsq = testutil::least_squares_reconstruct(inst.basis, inst.f, fs);

      const double scale = f.norm();
      CHECK((via_slepian - f).norm() <= 1e-8 * scale);
      CHECK((via_direct - f).norm() <= 1e-8 * scale);
      CHECK((via_slepian - via_lstsq).norm() <= 1e-8 * scale);
      CHECK((via_direct - via_lstsq).norm() <= 1e-8 * scale);
    }
  }

  SUBCASE("a concentration basis vector reproduces itself") {
    const ValidInstance inst = draw_valid_instance(gen);
    const SlepianBasis slep = gsp::slepian_vectors(inst.basis, inst.s, inst.f);
    const Signal psi1 = slep.vectors.col(0);
    const Signal out = gsp::reconstruct_slepian(gsp::sample(psi1, inst.s), slep);
    CHECK((out - psi1).norm() <= 1e-8);
  }

  SUBCASE("full sampling short-circuits the direct route") {
    const GftBasis basis = basis_of(testutil::random_connected_graph(gen, 7));
    const Signal f = testutil::random_vector(gen, 7);
    const SampledSignal fs = gsp::sample(f, VertexSet::full(7));
    const Signal out =
        gsp::reconstruct_direct(fs, gsp::band_limiter(basis, FrequencySet::full(7)),
                                VertexSet::full(7));
    CHECK((out - f).cwiseAbs().maxCoeff() <= 1e-12);
  }

  SUBCASE("failing configurations refuse on both routes") {
    // |S| <= |F| - 1 guarantees a bandlimited vector supported on S^c
    const int n = 8;
    const GftBasis basis = basis_of(testutil::random_connected_graph(gen, n));
    const FrequencySet f = testutil::random_frequency_subset(gen, n, 4);
    const VertexSet s = testutil::random_vertex_subset(gen, n, 2);

    // exhibit the invisible signal
    const auto loc = gsp::perfect_localization_exists(
        basis, VertexSet::from_zero_based(s.complement().indices(), n), f, 1e-8);
    REQUIRE(loc.exists);
    const Signal ghost = loc.vectors.col(0);
    CHECK(std::abs(ghost.norm() - 1.0) <= 1e-9);
    CHECK(gsp::sample(ghost, s).values.cwiseAbs().maxCoeff() <= 1e-6);

    const SampledSignal fs = gsp::sample(ghost, s);
    const SlepianBasis slep = gsp::slepian_vectors(basis, s, f);
    CHECK(fails_with(Errc::condition_violated,
                     [&] { gsp::reconstruct_slepian(fs, slep); }));
    CHECK(fails_with(Errc::singular_system, [&] {
      gsp::reconstruct_direct(fs, gsp::band_limiter(basis, f), s);
    }));
  }

  SUBCASE("set mismatch is rejected") {
    ValidInstance inst = draw_valid_instance(gen);
    while (inst.s.is_full()) inst = draw_valid_instance(gen);
    const SlepianBasis slep = gsp::slepian_vectors(inst.basis, inst.s, inst.f);
    const int n = inst.basis.size();
    std::vector<int> altered = inst.s.indices();
    altered.back() = inst.s.complement().indices().front();
    const VertexSet wrong = VertexSet::from_zero_based(altered, n);
    const SampledSignal fs = gsp::sample(Signal::Zero(n), wrong);
    CHECK(fails_with(Errc::set_mismatch, [&] { gsp::reconstruct_slepian(fs, slep); }));
  }

  SUBCASE("exactly |F| concentrations exceed tolerance under the condition") {
    for (int trial = 0; trial < 20; ++trial) {
      const ValidInstance inst = draw_valid_instance(gen);
      const SlepianBasis slep = gsp::slepian_vectors(inst.basis, inst.s, inst.f);
      CHECK(slep.concentrated_count(1e-8) == inst.f.size());
    }
  }
}

TEST_CASE("non-bandlimited analysis") {
  auto gen = testutil::engine(73);

  SUBCASE("bandlimited inputs have zero error") {
    const ValidInstance inst = draw_valid_instance(gen);
    const Signal f = random_bandlimited(gen, inst.basis, inst.f);
    const auto report = gsp::analyze_nonbandlimited(f, inst.basis, inst.s, inst.f);
    CHECK(report.out_of_band_sq_error <= 1e-12);
    CHECK(report.aliasing_sq_error <= 1e-10);
    CHECK((report.reconstructed - f).norm() <= 1e-8 * std::max(1.0, f.norm()));
  }

  SUBCASE("an out-of-band basis vector has unit out-of-band energy") {
    for (;;) {
      const ValidInstance inst = draw_valid_instance(gen);
      const auto fc = inst.f.complement();
      if (fc.empty()) continue;
      const Signal f = inst.basis.U.col(fc.indices()[0]);
      const auto report = gsp::analyze_nonbandlimited(f, inst.basis, inst.s, inst.f);
      CHECK(report.out_of_band_sq_error == doctest::Approx(1.0).epsilon(1e-10));
      break;
    }
  }

  SUBCASE("the two error terms sum to the directly computed squared error") {
    for (int trial = 0; trial < 25; ++trial) {
      const ValidInstance inst = draw_valid_instance(gen, 12, 12);
      const Signal f = testutil::random_vector(gen, inst.basis.size());
      const auto report = gsp::analyze_nonbandlimited(f, inst.basis, inst.s, inst.f);

      const double direct = (f - report.reconstructed).squaredNorm();
      CHECK(std::abs(report.total_sq_error - direct) <= 1e-8 * f.squaredNorm());
      CHECK(report.total_sq_error ==
            doctest::Approx(report.out_of_band_sq_error + report.aliasing_sq_error)
                .epsilon(1e-12));
      CHECK(report.bd_c_norm >= 0.0);
      CHECK(report.bd_c_norm <= 1.0 + 1e-9);
    }
  }

  SUBCASE("matches feeding the sampled signal through the closed-form route") {
    const ValidInstance inst = draw_valid_instance(gen);
    const Signal f = testutil::random_vector(gen, inst.basis.size());
    const auto report = gsp::analyze_nonbandlimited(f, inst.basis, inst.s, inst.f);
    const SlepianBasis slep = gsp::slepian_vectors(inst.basis, inst.s, inst.f);
    const Signal direct = gsp::reconstruct_slepian(gsp::sample(f, inst.s), slep);
    CHECK((report.reconstructed - direct).cwiseAbs().maxCoeff() <= 1e-9);
  }

  SUBCASE("violated condition refuses") {
    const int n = 7;
    const GftBasis basis = basis_of(testutil::random_connected_graph(gen, n));
    const FrequencySet f = testutil::random_frequency_subset(gen, n, 4);
    const VertexSet s = testutil::random_vertex_subset(gen, n, 2);
    CHECK(fails_with(Errc::condition_violated, [&] {
      gsp::analyze_nonbandlimited(testutil::random_vector(gen, n), basis, s, f);
    }));
  }
}
