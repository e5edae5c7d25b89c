#pragma once

#include <Eigen/Dense>
#include <variant>

#include "gsp/sets.hpp"
#include "gsp/spectral.hpp"

namespace gsp {

enum class ProjectorKind { vertex, band };

/// Dense orthogonal projector (symmetric, idempotent) together with the index
/// set that defines it. Vertex projectors are exact diagonal 0/1 matrices;
/// band projectors are U_F U_F^T, symmetrized.
struct Projector {
  Eigen::MatrixXd matrix;
  ProjectorKind kind = ProjectorKind::vertex;
  std::variant<VertexSet, FrequencySet> set;

  int size() const { return static_cast<int>(matrix.rows()); }
  int set_size() const;
};

/// Diagonal projector that keeps a signal on S and zeroes it elsewhere.
Projector vertex_limiter(const VertexSet& s);

/// Projector onto the span of the GFT basis columns indexed by F.
Projector band_limiter(const GftBasis& basis, const FrequencySet& f);

/// I - P, defined by the complement index set.
Projector complement(const Projector& p);

/// Convenience: columns of U indexed by F, in ascending frequency order.
Eigen::MatrixXd band_columns(const GftBasis& basis, const FrequencySet& f);

}  // namespace gsp
