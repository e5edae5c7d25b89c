#include "gsp/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "gsp/errors.hpp"

namespace gsp {

Eigen::MatrixXd symmetrized(const Eigen::MatrixXd& m) {
  return 0.5 * (m + m.transpose());
}

int numerical_rank(const Eigen::MatrixXd& m, std::optional<double> threshold) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  const Eigen::VectorXd& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double smax = sv(0);
  if (smax == 0.0) return 0;
  const double cut =
      threshold ? *threshold
                : static_cast<double>(std::max(m.rows(), m.cols())) *
                      std::numeric_limits<double>::epsilon() * smax;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++rank;
  return rank;
}

double spectral_norm(const Eigen::MatrixXd& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

double column_min_singular_value(const Eigen::MatrixXd& m) {
  if (m.cols() == 0) return 0.0;
  if (m.cols() > m.rows()) return 0.0;
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  const Eigen::VectorXd& sv = svd.singularValues();
  return sv.size() ? sv(sv.size() - 1) : 0.0;
}

namespace {

constexpr double kSignificantEntry = 1e-8;

void fix_column_signs(Eigen::MatrixXd& u) {
  for (Eigen::Index j = 0; j < u.cols(); ++j) {
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
      if (std::abs(u(i, j)) > kSignificantEntry) {
        if (u(i, j) < 0.0) u.col(j) = -u.col(j);
        break;
      }
    }
  }
}

// For exactly-equal eigenvalues: the column with the larger entry at the
// first differing position sorts first, so a diagonal input keeps its
// natural axis order.
bool column_before(const Eigen::MatrixXd& u, Eigen::Index a, Eigen::Index b) {
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    if (u(i, a) != u(i, b)) return u(i, a) > u(i, b);
  }
  return false;
}

}  // namespace

SymmetricEigen symmetric_eigendecompose(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success)
    fail(Errc::eigensolver_failure, "symmetric eigendecomposition did not converge");

  Eigen::MatrixXd u = solver.eigenvectors();
  Eigen::VectorXd values = solver.eigenvalues();
  fix_column_signs(u);

  std::vector<Eigen::Index> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    if (values(a) != values(b)) return values(a) < values(b);
    return column_before(u, a, b);
  });

  SymmetricEigen out;
  out.values.resize(values.size());
  out.vectors.resize(u.rows(), u.cols());
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    out.values(k) = values(order[static_cast<std::size_t>(k)]);
    out.vectors.col(k) = u.col(order[static_cast<std::size_t>(k)]);
  }
  return out;
}

}  // namespace gsp
