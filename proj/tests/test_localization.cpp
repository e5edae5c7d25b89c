#include "gsp/localization.hpp"

#include <doctest.h>

#include <cmath>

#include "gsp/errors.hpp"
#include "gsp/numerics.hpp"
#include "test_helpers.hpp"

using gsp::DofCounts;
using gsp::Errc;
using gsp::FrequencySet;
using gsp::GftBasis;
using gsp::SlepianBasis;
using gsp::VertexSet;
using testutil::fails_with;

namespace {

GftBasis basis_of(const gsp::Graph& g) {
  return gsp::eigendecompose(g.laplacian(gsp::LaplacianKind::combinatorial));
}

}  // namespace

TEST_CASE("slepian vectors") {
  auto gen = testutil::engine(41);

  SUBCASE("full vertex set reduces to the band projector spectrum") {
    const GftBasis basis = basis_of(testutil::random_connected_graph(gen, 7));
    const FrequencySet f = testutil::random_frequency_subset(gen, 7, 3);
    const SlepianBasis slep = gsp::slepian_vectors(basis, VertexSet::full(7), f);
    for (int i = 0; i < 3; ++i)
      CHECK(slep.concentrations(i) == doctest::Approx(1.0).epsilon(1e-10));
    for (int i = 3; i < 7; ++i)
      CHECK(std::abs(slep.concentrations(i)) <= 1e-10);
  }

  SUBCASE("complete graph, constant band: top concentration is |S|/N") {
    const GftBasis basis = basis_of(testutil::complete_graph(4));
    const SlepianBasis slep = gsp::slepian_vectors(basis, VertexSet::from_one_based({1, 2}, 4),
                                                   FrequencySet::from_one_based({1}, 4));
    CHECK(slep.concentrations(0) == doctest::Approx(0.5).epsilon(1e-10));
  }

  SUBCASE("trace identity against direct evaluation") {
    const GftBasis basis = basis_of(testutil::random_connected_graph(gen, 8));
    const VertexSet s = testutil::random_vertex_subset(gen, 8, 3);
    const FrequencySet f = testutil::random_frequency_subset(gen, 8, 4);
    const SlepianBasis slep = gsp::slepian_vectors(basis, s, f);

    const Eigen::MatrixXd b = gsp::band_limiter(basis, f).matrix;
    double diag_sum = 0.0;
    for (int i : s.indices()) diag_sum += b(i, i);
    CHECK(slep.concentrations.sum() == doctest::Approx(diag_sum).epsilon(1e-9));
  }

  SUBCASE("basis invariants on random instances") {
    for (int trial = 0; trial < 15; ++trial) {
      const int n = 5 + static_cast<int>(gen() % 8);
      const GftBasis basis = basis_of(testutil::random_er_graph(gen, n));
      const VertexSet s = testutil::random_vertex_subset(gen, n, 1 + static_cast<int>(gen() % n));
      const FrequencySet f =
          testutil::random_frequency_subset(gen, n, 1 + static_cast<int>(gen() % n));
      const SlepianBasis slep = gsp::slepian_vectors(basis, s, f);
      const Eigen::MatrixXd bdb = gsp::band_limiter(basis, f).matrix *
                                  gsp::vertex_limiter(s).matrix *
                                  gsp::band_limiter(basis, f).matrix;
      const Eigen::MatrixXd b = gsp::band_limiter(basis, f).matrix;
      const Eigen::MatrixXd d = gsp::vertex_limiter(s).matrix;

      CHECK((slep.vectors.transpose() * slep.vectors - Eigen::MatrixXd::Identity(n, n))
                .cwiseAbs()
                .maxCoeff() <= 1e-10);
      for (int i = 0; i < n; ++i) {
        const double conc = slep.concentrations(i);
        CHECK(conc >= -1e-9);
        CHECK(conc <= 1.0 + 1e-9);
        if (i > 0) CHECK(conc <= slep.concentrations(i - 1));
        CHECK((bdb * slep.vectors.col(i) - conc * slep.vectors.col(i)).norm() <= 1e-8);
        if (conc > 1e-8)
          CHECK((b * slep.vectors.col(i) - slep.vectors.col(i)).norm() <= 1e-8);
      }
      // orthogonality weighted by the sampler, over concentrated pairs
      const int kept = slep.concentrated_count();
      for (int i = 0; i < kept; ++i)
        for (int j = 0; j < kept; ++j) {
          const double got = slep.vectors.col(i).dot(d * slep.vectors.col(j));
          const double want = i == j ? slep.concentrations(j) : 0.0;
          CHECK(std::abs(got - want) <= 1e-8);
        }
    }
  }

  SUBCASE("top concentration maximizes the reduced quadratic form") {
    const GftBasis basis = basis_of(testutil::random_connected_graph(gen, 9));
    const VertexSet s = testutil::random_vertex_subset(gen, 9, 4);
    const FrequencySet f = testutil::random_frequency_subset(gen, 9, 5);
    const SlepianBasis slep = gsp::slepian_vectors(basis, s, f);

    // oracle: the maximum of ||D B v||^2 over unit bandlimited v is the top
    // eigenvalue of the |F| x |F| matrix U_F^T D U_F
    const Eigen::MatrixXd u_band = gsp::band_columns(basis, f);
    const Eigen::MatrixXd reduced =
        u_band.transpose() * gsp::vertex_limiter(s).matrix * u_band;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(reduced);
    CHECK(slep.concentrations(0) ==
          doctest::Approx(eig.eigenvalues().maxCoeff()).epsilon(1e-10));
  }
}

TEST_CASE("perfect localization") {
  auto gen = testutil::engine(43);

  SUBCASE("guaranteed when |S| >= n - |F| + 1") {
    const GftBasis basis = basis_of(testutil::random_connected_graph(gen, 5));
    const auto loc = gsp::perfect_localization_exists(
        basis, testutil::random_vertex_subset(gen, 5, 2),
        testutil::random_frequency_subset(gen, 5, 4), 1e-8);
    CHECK(loc.exists);
    CHECK(loc.vectors.cols() >= 1);
  }

  SUBCASE("full band localizes indicators") {
    const GftBasis basis = basis_of(testutil::random_connected_graph(gen, 6));
    const VertexSet s = VertexSet::from_one_based({2, 5}, 6);
    const auto loc = gsp::perfect_localization_exists(basis, s, FrequencySet::full(6), 1e-8);
    CHECK(loc.exists);
    for (int c = 0; c < loc.vectors.cols(); ++c) {
      for (int i = 0; i < 6; ++i)
        if (!s.contains(i)) CHECK(std::abs(loc.vectors(i, c)) <= 1e-7);
    }
  }

  SUBCASE("empty vertex set never localizes") {
    const GftBasis basis = basis_of(testutil::random_connected_graph(gen, 5));
    CHECK_FALSE(gsp::perfect_localization_exists(basis, VertexSet::none(5),
                                                 testutil::random_frequency_subset(gen, 5, 3),
                                                 1e-8)
                    .exists);
  }

  SUBCASE("returned vectors are invariant under both projectors") {
    const GftBasis basis = basis_of(testutil::random_connected_graph(gen, 8));
    const VertexSet s = testutil::random_vertex_subset(gen, 8, 4);
    const FrequencySet f = testutil::random_frequency_subset(gen, 8, 6);
    const double tol = 1e-8;
    const auto loc = gsp::perfect_localization_exists(basis, s, f, tol);
    REQUIRE(loc.exists);  // 4 >= 8 - 6 + 1
    const Eigen::MatrixXd b = gsp::band_limiter(basis, f).matrix;
    const Eigen::MatrixXd d = gsp::vertex_limiter(s).matrix;
    for (int c = 0; c < loc.vectors.cols(); ++c) {
      const Eigen::VectorXd x = loc.vectors.col(c);
      CHECK((b * x - x).norm() <= std::sqrt(tol));
      CHECK((d * x - x).norm() <= std::sqrt(tol));
    }
  }

  SUBCASE("tolerance domain") {
    const GftBasis basis = basis_of(testutil::random_connected_graph(gen, 4));
    const VertexSet s = VertexSet::full(4);
    const FrequencySet f = FrequencySet::full(4);
    CHECK(fails_with(Errc::invalid_tolerance,
                     [&] { gsp::perfect_localization_exists(basis, s, f, 0.0); }));
    CHECK(fails_with(Errc::invalid_tolerance,
                     [&] { gsp::perfect_localization_exists(basis, s, f, 0.2); }));
  }
}

TEST_CASE("localization matrix") {
  auto gen = testutil::engine(47);
  const int n = 10;
  const GftBasis basis = basis_of(testutil::random_connected_graph(gen, n));

  SUBCASE("entries are exact eigenvector values") {
    const VertexSet s = testutil::random_vertex_subset(gen, n, 3);
    const FrequencySet f = testutil::random_frequency_subset(gen, n, 6);
    const auto lm = gsp::localization_matrix(basis, s, f);
    REQUIRE(lm.G.rows() == 4);
    REQUIRE(lm.G.cols() == 3);
    for (int k = 0; k < 4; ++k)
      for (int l = 0; l < 3; ++l)
        CHECK(lm.G(k, l) == basis.U(lm.col_verts[static_cast<std::size_t>(l)],
                                    lm.row_freqs[static_cast<std::size_t>(k)]));
  }

  SUBCASE("wide matrices always have a nontrivial null space") {
    const FrequencySet f = testutil::random_frequency_subset(gen, n, 6);
    const VertexSet s = testutil::random_vertex_subset(gen, n, n - f.size() + 1);
    const auto lm = gsp::localization_matrix(basis, s, f);
    CHECK(lm.G.cols() > lm.G.rows());
    CHECK(gsp::numerical_rank(lm.G, 1e-8) < s.size());
  }

  SUBCASE("single sampled vertex gives one column of eigenvector entries") {
    const VertexSet s = VertexSet::from_one_based({4}, n);
    const FrequencySet f = testutil::random_frequency_subset(gen, n, 7);
    const auto lm = gsp::localization_matrix(basis, s, f);
    CHECK(lm.G.cols() == 1);
    const FrequencySet fc = f.complement();
    int k = 0;
    for (int freq : fc.indices())
      CHECK(lm.G(k++, 0) == basis.U(3, freq));
  }

  SUBCASE("two independent rank routes agree") {
    for (int trial = 0; trial < 10; ++trial) {
      const VertexSet s = testutil::random_vertex_subset(gen, n, 3);
      const FrequencySet f = testutil::random_frequency_subset(gen, n, 6);
      const auto lm = gsp::localization_matrix(basis, s, f);
      CHECK(gsp::numerical_rank(lm.G, 1e-8) ==
            testutil::rank_by_pivoted_elimination(lm.G, 1e-8));
    }
  }

  SUBCASE("full frequency set is rejected") {
    CHECK(fails_with(Errc::empty_complement, [&] {
      gsp::localization_matrix(basis, VertexSet::full(n), FrequencySet::full(n));
    }));
  }
}

TEST_CASE("degrees of freedom") {
  auto gen = testutil::engine(53);

  SUBCASE("full vertex set") {
    const int n = 8;
    const GftBasis basis = basis_of(testutil::random_connected_graph(gen, n));
    const FrequencySet f = testutil::random_frequency_subset(gen, n, 3);
    const DofCounts dof = gsp::dof_counts(basis, VertexSet::full(n), f);
    CHECK(dof.unit_count == 3);
    CHECK(dof.transition_count == 0);
    CHECK(dof.zero_count == n - 3);
  }

  SUBCASE("full frequency set") {
    const int n = 8;
    const GftBasis basis = basis_of(testutil::random_connected_graph(gen, n));
    const VertexSet s = testutil::random_vertex_subset(gen, n, 5);
    const DofCounts dof = gsp::dof_counts(basis, s, FrequencySet::full(n));
    CHECK(dof.unit_count == 5);
    CHECK(dof.transition_count == 0);
    CHECK(dof.zero_count == n - 5);
  }

  SUBCASE("unit count matches the concentration spectrum on random triples") {
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 10;
      const GftBasis basis = basis_of(testutil::random_er_graph(gen, n));
      const VertexSet s = testutil::random_vertex_subset(gen, n, static_cast<int>(gen() % (n + 1)));
      const FrequencySet f =
          testutil::random_frequency_subset(gen, n, static_cast<int>(gen() % (n + 1)));

      const DofCounts dof = gsp::dof_counts(basis, s, f);
      const SlepianBasis slep = gsp::slepian_vectors(basis, s, f);
      int unit_from_spectrum = 0;
      for (int i = 0; i < n; ++i)
        if (slep.concentrations(i) >= 1.0 - 1e-8) ++unit_from_spectrum;

      CHECK(dof.unit_count == unit_from_spectrum);
      CHECK(dof.unit_count + dof.transition_count + dof.zero_count == n);
      CHECK(dof.unit_count >= 0);
      CHECK(dof.transition_count >= 0);
      CHECK(dof.zero_count >= 0);
    }
  }
}

TEST_CASE("three-way localization equivalence on random instances") {
  auto gen = testutil::engine(59);
  const double tol = 1e-8;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 5 + static_cast<int>(gen() % 8);
    const GftBasis basis = basis_of(testutil::random_er_graph(gen, n));
    const VertexSet s = testutil::random_vertex_subset(gen, n, 1 + static_cast<int>(gen() % n));
    const int f_size = 1 + static_cast<int>(gen() % (n - 1));
    const FrequencySet f = testutil::random_frequency_subset(gen, n, f_size);

    const bool by_spectrum = gsp::perfect_localization_exists(basis, s, f, tol).exists;
    const double bd_norm = gsp::spectral_norm(gsp::band_limiter(basis, f).matrix *
                                              gsp::vertex_limiter(s).matrix);
    const bool by_norm = bd_norm >= 1.0 - tol;
    const auto lm = gsp::localization_matrix(basis, s, f);
    const bool by_null_space = gsp::numerical_rank(lm.G, tol) < s.size();

    CHECK(by_spectrum == by_norm);
    CHECK(by_spectrum == by_null_space);
  }
}

TEST_CASE("localization guarantee is exhaustive on a small graph") {
  auto gen = testutil::engine(61);
  const int n = 5;
  const GftBasis basis = basis_of(testutil::random_connected_graph(gen, n));
  for (int f_size = 1; f_size <= n; ++f_size) {
    for (const auto& f_pick : testutil::all_subsets_of_size(n, f_size)) {
      const FrequencySet f = FrequencySet::from_zero_based(f_pick, n);
      for (int s_size = n - f_size + 1; s_size <= n; ++s_size) {
        for (const auto& s_pick : testutil::all_subsets_of_size(n, s_size)) {
          const VertexSet s = VertexSet::from_zero_based(s_pick, n);
          const SlepianBasis slep = gsp::slepian_vectors(basis, s, f);
          CHECK(slep.concentrations(0) >= 1.0 - 1e-8);
        }
      }
    }
  }
}
