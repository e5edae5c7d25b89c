#include "gsp/operators.hpp"

#include "gsp/errors.hpp"
#include "gsp/numerics.hpp"

namespace gsp {

int Projector::set_size() const {
  return std::visit([](const auto& s) { return s.size(); }, set);
}

Projector vertex_limiter(const VertexSet& s) {
  const int n = s.universe();
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (int i : s.indices()) d(i, i) = 1.0;
  return Projector{std::move(d), ProjectorKind::vertex, s};
}

Eigen::MatrixXd band_columns(const GftBasis& basis, const FrequencySet& f) {
  if (f.universe() != basis.size())
    fail(Errc::dimension_mismatch, "frequency set universe does not match basis size");
  Eigen::MatrixXd cols(basis.size(), f.size());
  int k = 0;
  for (int i : f.indices()) cols.col(k++) = basis.U.col(i);
  return cols;
}

Projector band_limiter(const GftBasis& basis, const FrequencySet& f) {
  const Eigen::MatrixXd uf = band_columns(basis, f);
  Eigen::MatrixXd b = symmetrized(uf * uf.transpose());
  return Projector{std::move(b), ProjectorKind::band, f};
}

Projector complement(const Projector& p) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(p.size(), p.size()) - p.matrix;
  auto set = std::visit(
      [](const auto& s) -> std::variant<VertexSet, FrequencySet> { return s.complement(); },
      p.set);
  return Projector{std::move(m), p.kind, std::move(set)};
}

}  // namespace gsp
