#include "gsp/selection.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "gsp/errors.hpp"
#include "gsp/numerics.hpp"
#include "gsp/operators.hpp"
#include "gsp/rng.hpp"
#include "gsp/sampling.hpp"

namespace gsp {

namespace {

// Noise floor below which a computed eigen/singular value is treated as the
// structural zero it represents, so that symmetric candidates stay exact ties
// for the index tie-break.
constexpr double kStructuralZero = 1e-12;

void require_size(int m, int n) {
  if (m < 1 || m > n)
    fail(Errc::size_out_of_range,
         "requested size " + std::to_string(m) + " outside 1.." + std::to_string(n));
}

// ||B D^c||_2 of the set S, through the reduced |F| x |F| concentration
// matrix: the norm squared is 1 minus its smallest eigenvalue.
double bdc_norm_reduced(const Eigen::MatrixXd& concentration) {
  if (concentration.rows() == 0) return 0.0;  // empty band: B = 0
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(concentration);
  if (eig.info() != Eigen::Success)
    fail(Errc::eigensolver_failure, "candidate eigensolve failed");
  double min_eig = eig.eigenvalues()(0);
  if (min_eig < kStructuralZero) min_eig = 0.0;
  if (min_eig > 1.0) min_eig = 1.0;
  return std::sqrt(1.0 - min_eig);
}

bool feasible_for(const GftBasis& basis, const VertexSet& s, const FrequencySet& f) {
  return sampling_condition(basis, s, f).ok;
}

}  // namespace

const char* selection_method_name(SelectionMethod m) {
  switch (m) {
    case SelectionMethod::random: return "random";
    case SelectionMethod::greedy_bdc_norm: return "greedy-bdc";
    case SelectionMethod::greedy_g_conditioning: return "greedy-g";
  }
  return "unknown";
}

VertexSet random_vertex_set(int n, int m, std::uint64_t seed) {
  require_size(m, n);
  auto gen = make_engine(substream_seed(seed, static_cast<std::uint64_t>(n),
                                        static_cast<std::uint64_t>(m)));
  return VertexSet::from_zero_based(random_subset(gen, n, m), n);
}

SelectionResult select_random(const GftBasis& basis, const FrequencySet& f, int m,
                              std::uint64_t seed) {
  const VertexSet s = random_vertex_set(basis.size(), m, seed);
  const Eigen::MatrixXd u_band = band_columns(basis, f);
  Eigen::MatrixXd conc = Eigen::MatrixXd::Zero(f.size(), f.size());
  for (int v : s.indices()) conc += u_band.row(v).transpose() * u_band.row(v);
  return SelectionResult{s, bdc_norm_reduced(conc), SelectionMethod::random,
                         feasible_for(basis, s, f)};
}

SelectionResult select_greedy_min_bdc(const GftBasis& basis, const FrequencySet& f, int m) {
  const int n = basis.size();
  require_size(m, n);
  const Eigen::MatrixXd u_band = band_columns(basis, f);

  std::vector<int> chosen;
  std::vector<bool> in_set(static_cast<std::size_t>(n), false);
  Eigen::MatrixXd conc = Eigen::MatrixXd::Zero(f.size(), f.size());
  double final_score = 0.0;

  for (int step = 0; step < m; ++step) {
    int best = -1;
    double best_score = 0.0;
    for (int v = 0; v < n; ++v) {
      if (in_set[static_cast<std::size_t>(v)]) continue;
      const Eigen::MatrixXd candidate = conc + u_band.row(v).transpose() * u_band.row(v);
      const double score = bdc_norm_reduced(candidate);
      if (best < 0 || score < best_score) {  // strict: ties keep the smallest index
        best = v;
        best_score = score;
      }
    }
    chosen.push_back(best);
    in_set[static_cast<std::size_t>(best)] = true;
    conc += u_band.row(best).transpose() * u_band.row(best);
    final_score = best_score;
  }

  const VertexSet s = VertexSet::from_zero_based(std::move(chosen), n);
  return SelectionResult{s, final_score, SelectionMethod::greedy_bdc_norm,
                         feasible_for(basis, s, f)};
}

SelectionResult select_greedy_maxcond_g(const GftBasis& basis, const FrequencySet& f, int m) {
  const int n = basis.size();
  require_size(m, n);
  const FrequencySet fc = f.complement();
  const Eigen::MatrixXd u_rest = band_columns(basis, fc);

  std::vector<int> chosen;
  std::vector<bool> in_set(static_cast<std::size_t>(n), false);
  Eigen::MatrixXd grown(fc.size(), 0);
  double final_score = 0.0;

  for (int step = 0; step < m; ++step) {
    Eigen::MatrixXd candidate(fc.size(), step + 1);
    if (step > 0) candidate.leftCols(step) = grown;

    int best = -1;
    double best_score = 0.0;
    for (int v = 0; v < n; ++v) {
      if (in_set[static_cast<std::size_t>(v)]) continue;
      candidate.col(step) = u_rest.row(v).transpose();
      double score = column_min_singular_value(candidate);
      if (score < kStructuralZero) score = 0.0;
      if (best < 0 || score > best_score) {
        best = v;
        best_score = score;
      }
    }
    chosen.push_back(best);
    in_set[static_cast<std::size_t>(best)] = true;
    candidate.col(step) = u_rest.row(best).transpose();
    grown = candidate;
    final_score = best_score;
  }

  const VertexSet s = VertexSet::from_zero_based(std::move(chosen), n);
  return SelectionResult{s, final_score, SelectionMethod::greedy_g_conditioning,
                         feasible_for(basis, s, f)};
}

}  // namespace gsp
