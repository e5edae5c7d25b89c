#include "gsp/spectral.hpp"

#include <cmath>
#include <string>

#include "gsp/errors.hpp"
#include "gsp/numerics.hpp"

namespace gsp {

namespace {

void check_dimensions(const GftBasis& basis, const Eigen::VectorXd& v, const char* what) {
  if (v.size() != basis.lambdas.size())
    fail(Errc::dimension_mismatch,
         std::string(what) + ": length " + std::to_string(v.size()) +
             " does not match basis size " + std::to_string(basis.size()));
}

}  // namespace

GftBasis eigendecompose(const Eigen::MatrixXd& laplacian) {
  if (laplacian.rows() != laplacian.cols())
    fail(Errc::not_symmetric, "Laplacian must be square");
  if (laplacian.rows() == 0) return GftBasis{Eigen::MatrixXd(0, 0), Eigen::VectorXd(0)};
  const double asym = (laplacian - laplacian.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12)
    fail(Errc::not_symmetric,
         "Laplacian asymmetry " + std::to_string(asym) + " exceeds 1e-12");

  SymmetricEigen eig = symmetric_eigendecompose(symmetrized(laplacian));

  GftBasis basis{std::move(eig.vectors), std::move(eig.values)};
  const Eigen::Index n = basis.lambdas.size();

  const double ortho =
      (basis.U.transpose() * basis.U - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (ortho > 1e-10)
    fail(Errc::eigensolver_failure, "basis not orthonormal: residual " + std::to_string(ortho));

  const double lam_max = n ? basis.lambdas.cwiseAbs().maxCoeff() : 0.0;
  const double recon =
      (laplacian - basis.U * basis.lambdas.asDiagonal() * basis.U.transpose())
          .cwiseAbs()
          .maxCoeff();
  if (recon > 1e-8 * (1.0 + lam_max))
    fail(Errc::eigensolver_failure, "eigendecomposition residual " + std::to_string(recon));
  if (n && basis.lambdas(0) < -1e-9)
    fail(Errc::eigensolver_failure,
         "negative Laplacian eigenvalue " + std::to_string(basis.lambdas(0)));

  return basis;
}

Spectrum gft(const GftBasis& basis, const Signal& f) {
  check_dimensions(basis, f, "gft");
  return basis.U.transpose() * f;
}

Signal igft(const GftBasis& basis, const Spectrum& fhat) {
  check_dimensions(basis, fhat, "igft");
  return basis.U * fhat;
}

}  // namespace gsp
