#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "gsp/operators.hpp"
#include "gsp/sets.hpp"
#include "gsp/spectral.hpp"

namespace gsp {

/// Eigenpairs of B D B, sorted by decreasing concentration. The columns with
/// concentration above `bandlimited_tol` are orthonormal bandlimited vectors
/// that sequentially maximize the energy captured on S; the kernel columns
/// complete the basis but need not be bandlimited.
struct SlepianBasis {
  Eigen::MatrixXd vectors;         // columns psi_i
  Eigen::VectorXd concentrations;  // sigma_i^2, descending, in [0, 1]
  VertexSet S;
  FrequencySet F;

  int size() const { return static_cast<int>(concentrations.size()); }

  /// Number of columns certified as bandlimited concentration maximizers.
  int concentrated_count(double tol = 1e-8) const;
};

SlepianBasis slepian_vectors(const GftBasis& basis, const VertexSet& s,
                             const FrequencySet& f);

/// Outcome of the joint vertex-frequency localization test: whether some
/// unit vector is (numerically) invariant under both projectors, plus every
/// such vector found.
struct PerfectLocalization {
  bool exists = false;
  Eigen::MatrixXd vectors;  // one column per localized vector; 0 columns if none
  double max_concentration = 0.0;
};

/// A localized vector exists iff B D B has an eigenvalue within `tol` of 1.
/// Every returned column x satisfies ||Bx - x|| <= sqrt(tol) and
/// ||Dx - x|| <= sqrt(tol). tol must lie in (0, 0.1].
PerfectLocalization perfect_localization_exists(const GftBasis& basis,
                                                const VertexSet& s,
                                                const FrequencySet& f,
                                                double tol = 1e-8);

/// The (n - |F|) x |S| matrix whose entry (k, l) is the value of eigenvector
/// row_freqs[k] at vertex col_verts[l]. Its null space carries the sample
/// patterns of perfectly localized vectors: rank deficiency here is
/// equivalent to perfect localization.
struct LocalizationMatrix {
  Eigen::MatrixXd G;
  std::vector<int> row_freqs;  // 0-based indices into the eigenvalue order
  std::vector<int> col_verts;  // 0-based vertex indices
};

LocalizationMatrix localization_matrix(const GftBasis& basis, const VertexSet& s,
                                       const FrequencySet& f);

/// Degrees-of-freedom split of the singular values of B D: `unit_count`
/// at 1, `transition_count` strictly between 0 and 1, `zero_count` at 0.
struct DofCounts {
  int unit_count = 0;
  int transition_count = 0;
  int zero_count = 0;
  /// Set only when rank D == rank B and the two admissible transition-count
  /// expressions disagree numerically; holds the other branch's value.
  std::optional<int> transition_other_branch;
};

DofCounts dof_counts(const GftBasis& basis, const VertexSet& s, const FrequencySet& f,
                     double tol = 1e-8);

}  // namespace gsp
