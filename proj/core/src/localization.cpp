#include "gsp/localization.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gsp/errors.hpp"
#include "gsp/numerics.hpp"

namespace gsp {

namespace {

void require_tol(double tol) {
  if (!(tol > 0.0) || tol > 0.1)
    fail(Errc::invalid_tolerance, "tolerance must lie in (0, 0.1]");
}

void require_sets(const GftBasis& basis, const VertexSet& s, const FrequencySet& f) {
  if (s.universe() != basis.size() || f.universe() != basis.size())
    fail(Errc::dimension_mismatch, "index-set universe does not match basis size");
}

}  // namespace

int SlepianBasis::concentrated_count(double tol) const {
  int k = 0;
  while (k < size() && concentrations(k) > tol) ++k;
  return k;
}

SlepianBasis slepian_vectors(const GftBasis& basis, const VertexSet& s,
                             const FrequencySet& f) {
  require_sets(basis, s, f);
  const Projector d = vertex_limiter(s);
  const Projector b = band_limiter(basis, f);

  const Eigen::MatrixXd bdb = symmetrized(b.matrix * d.matrix * b.matrix);
  SymmetricEigen eig = symmetric_eigendecompose(bdb);

  // flip to descending concentration
  const Eigen::Index n = eig.values.size();
  SlepianBasis out{Eigen::MatrixXd(n, n), Eigen::VectorXd(n), s, f};
  for (Eigen::Index k = 0; k < n; ++k) {
    out.concentrations(k) = eig.values(n - 1 - k);
    out.vectors.col(k) = eig.vectors.col(n - 1 - k);
  }
  return out;
}

PerfectLocalization perfect_localization_exists(const GftBasis& basis,
                                                const VertexSet& s,
                                                const FrequencySet& f,
                                                double tol) {
  require_tol(tol);
  const SlepianBasis slep = slepian_vectors(basis, s, f);

  PerfectLocalization out;
  out.max_concentration = slep.size() ? slep.concentrations(0) : 0.0;
  int count = 0;
  while (count < slep.size() && slep.concentrations(count) >= 1.0 - tol) ++count;
  out.exists = count > 0;
  out.vectors = slep.vectors.leftCols(count);
  return out;
}

LocalizationMatrix localization_matrix(const GftBasis& basis, const VertexSet& s,
                                       const FrequencySet& f) {
  require_sets(basis, s, f);
  if (f.is_full())
    fail(Errc::empty_complement,
         "frequency set covers all indices; the localization matrix has no rows");

  const FrequencySet fc = f.complement();
  LocalizationMatrix out;
  out.row_freqs = fc.indices();
  out.col_verts = s.indices();
  out.G.resize(fc.size(), s.size());
  for (int k = 0; k < fc.size(); ++k)
    for (int l = 0; l < s.size(); ++l)
      out.G(k, l) = basis.U(out.col_verts[static_cast<std::size_t>(l)],
                            out.row_freqs[static_cast<std::size_t>(k)]);
  return out;
}

DofCounts dof_counts(const GftBasis& basis, const VertexSet& s, const FrequencySet& f,
                     double tol) {
  require_tol(tol);
  require_sets(basis, s, f);

  const Projector d = vertex_limiter(s);
  const Projector b = band_limiter(basis, f);
  const Eigen::MatrixXd dc = complement(d).matrix;
  const Eigen::MatrixXd bc = complement(b).matrix;

  const int n = basis.size();
  const int rank_d = s.size();  // exact: diagonal 0/1 matrix
  const int rank_b = f.size();  // exact: |F| unit eigenvalues by construction

  // A concentration within tol of 1 maps to a singular value within sqrt(tol)
  // of 0 in the complementary products, so this cutoff keeps the rank route
  // and the B D B spectrum route counting the same directions.
  const double cut = std::sqrt(tol);

  DofCounts out;
  out.unit_count = rank_d - numerical_rank(bc * d.matrix, cut);
  if (rank_d > rank_b) {
    out.transition_count = numerical_rank(b.matrix * dc, cut);
  } else if (rank_d < rank_b) {
    out.transition_count = numerical_rank(bc * d.matrix, cut);
  } else {
    const int q_bdc = numerical_rank(b.matrix * dc, cut);
    const int q_bcd = numerical_rank(bc * d.matrix, cut);
    out.transition_count = q_bdc;
    if (q_bdc != q_bcd) out.transition_other_branch = q_bcd;
  }
  out.zero_count = n - out.unit_count - out.transition_count;
  return out;
}

}  // namespace gsp
