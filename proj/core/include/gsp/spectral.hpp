#pragma once

#include <Eigen/Dense>

namespace gsp {

/// Vertex signal and its transform, both aligned to the graph vertex /
/// eigenvalue order.
using Signal = Eigen::VectorXd;
using Spectrum = Eigen::VectorXd;

/// Orthonormal Laplacian eigenbasis. Columns of U are eigenvectors in
/// ascending eigenvalue order with a fixed sign convention, so the same
/// Laplacian always produces the same basis.
struct GftBasis {
  Eigen::MatrixXd U;
  Eigen::VectorXd lambdas;

  int size() const { return static_cast<int>(lambdas.size()); }
};

/// Dense symmetric eigendecomposition of a graph Laplacian into a GFT basis.
/// Rejects inputs that are asymmetric beyond 1e-12 and verifies the computed
/// basis (orthonormality, reconstruction, nonnegative spectrum) before
/// returning it.
GftBasis eigendecompose(const Eigen::MatrixXd& laplacian);

/// Forward transform: U^T f.
Spectrum gft(const GftBasis& basis, const Signal& f);

/// Inverse transform: U fhat.
Signal igft(const GftBasis& basis, const Spectrum& fhat);

}  // namespace gsp
