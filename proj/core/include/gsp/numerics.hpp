#pragma once

#include <Eigen/Dense>
#include <optional>

namespace gsp {

/// (M + M^T) / 2. Scrubs roundoff asymmetry before symmetric eigensolves.
Eigen::MatrixXd symmetrized(const Eigen::MatrixXd& m);

/// Count of singular values above the cutoff. The default cutoff is
/// max(rows, cols) * eps * sigma_max; `threshold` overrides it with an
/// absolute singular-value cutoff. This single rule backs every rank
/// statement in the library so cross-checks stay consistent.
int numerical_rank(const Eigen::MatrixXd& m,
                   std::optional<double> threshold = std::nullopt);

/// Largest singular value; 0 for empty matrices.
double spectral_norm(const Eigen::MatrixXd& m);

/// Smallest singular value counted over the columns: zero whenever the
/// matrix has more columns than rows (a nontrivial null space is then
/// unavoidable), otherwise the smallest of the min(rows, cols) values.
double column_min_singular_value(const Eigen::MatrixXd& m);

struct SymmetricEigen {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // orthonormal columns, canonical order and signs
};

/// Dense symmetric eigendecomposition with a deterministic convention:
/// eigenvalues ascending; each column's first entry of magnitude > 1e-8 made
/// positive; exactly-equal eigenvalues ordered so the column with the larger
/// entry at the first differing position comes first.
SymmetricEigen symmetric_eigendecompose(const Eigen::MatrixXd& m);

}  // namespace gsp
