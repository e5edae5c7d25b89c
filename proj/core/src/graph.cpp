#include "gsp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "gsp/errors.hpp"

namespace gsp {

Graph::Graph(std::vector<std::string> ids, Eigen::MatrixXd weights)
    : ids_(std::move(ids)), weights_(std::move(weights)) {}

Graph Graph::from_edges(const std::vector<Edge>& edges) {
  std::set<std::string> id_set;
  for (const Edge& e : edges) {
    if (e.u == e.v)
      fail(Errc::self_loop, "self-loop on vertex '" + e.u + "'");
    if (!(e.w > 0.0))
      fail(Errc::negative_weight,
           "edge (" + e.u + "," + e.v + ") has non-positive weight");
    id_set.insert(e.u);
    id_set.insert(e.v);
  }

  std::vector<std::string> ids(id_set.begin(), id_set.end());  // lexicographic
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(ids.size()); ++i) index[ids[static_cast<std::size_t>(i)]] = i;

  const int n = static_cast<int>(ids.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : edges) {
    const int i = index[e.u];
    const int j = index[e.v];
    const double existing = a(i, j);
    if (existing != 0.0 && existing != e.w)
      fail(Errc::conflicting_duplicate_edge,
           "edge (" + e.u + "," + e.v + ") repeated with different weights");
    a(i, j) = e.w;
    a(j, i) = e.w;
  }
  return Graph(std::move(ids), std::move(a));
}

Graph Graph::from_adjacency(std::vector<std::string> ids, Eigen::MatrixXd weights) {
  const auto n = static_cast<Eigen::Index>(ids.size());
  if (weights.rows() != n || weights.cols() != n)
    fail(Errc::dimension_mismatch, "adjacency size does not match vertex count");
  std::set<std::string> seen;
  for (const auto& id : ids) {
    if (!seen.insert(id).second)
      fail(Errc::duplicate_station_id, "duplicate vertex id '" + id + "'");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (weights(i, i) != 0.0)
      fail(Errc::self_loop, "nonzero diagonal at vertex '" + ids[static_cast<std::size_t>(i)] + "'");
    for (Eigen::Index j = 0; j < n; ++j) {
      if (weights(i, j) < 0.0)
        fail(Errc::negative_weight, "negative adjacency entry");
      if (weights(i, j) != weights(j, i))
        fail(Errc::not_symmetric, "adjacency matrix is not symmetric");
    }
  }
  return Graph(std::move(ids), std::move(weights));
}

std::optional<int> Graph::index_of(const std::string& id) const {
  for (int i = 0; i < size(); ++i)
    if (ids_[static_cast<std::size_t>(i)] == id) return i;
  return std::nullopt;
}

Eigen::VectorXd Graph::degrees() const { return weights_.rowwise().sum(); }

Eigen::MatrixXd Graph::laplacian(LaplacianKind kind) const {
  const Eigen::VectorXd deg = degrees();
  Eigen::MatrixXd lap = -weights_;
  lap.diagonal() = deg;
  if (kind == LaplacianKind::combinatorial) return lap;

  for (int i = 0; i < size(); ++i) {
    if (deg(i) <= 0.0)
      fail(Errc::isolated_vertex_in_normalized,
           "vertex '" + ids_[static_cast<std::size_t>(i)] +
               "' has zero degree; normalized Laplacian undefined");
  }
  const Eigen::VectorXd inv_sqrt = deg.array().rsqrt();
  return inv_sqrt.asDiagonal() * lap * inv_sqrt.asDiagonal();
}

double haversine_km(double lat1_deg, double lon1_deg, double lat2_deg, double lon2_deg) {
  constexpr double deg = std::numbers::pi / 180.0;
  const double phi1 = lat1_deg * deg;
  const double phi2 = lat2_deg * deg;
  const double dphi = (lat2_deg - lat1_deg) * deg;
  const double dlam = (lon2_deg - lon1_deg) * deg;
  const double s = std::sin(dphi / 2.0);
  const double t = std::sin(dlam / 2.0);
  const double h = s * s + std::cos(phi1) * std::cos(phi2) * t * t;
  return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(h)));
}

Graph build_geo_graph(const std::vector<GeoStation>& stations, double radius_km) {
  if (!(radius_km > 0.0))
    fail(Errc::size_out_of_range, "coverage radius must be positive");
  if (stations.size() < 2)
    fail(Errc::size_out_of_range, "geo graph needs at least 2 stations");

  std::vector<std::string> ids;
  ids.reserve(stations.size());
  std::set<std::string> seen;
  for (const GeoStation& s : stations) {
    if (!seen.insert(s.id).second)
      fail(Errc::duplicate_station_id, "duplicate station id '" + s.id + "'");
    if (s.lat < -90.0 || s.lat > 90.0)
      fail(Errc::invalid_coordinate, "station '" + s.id + "': latitude outside [-90, 90]");
    if (s.lon < -180.0 || s.lon > 180.0)
      fail(Errc::invalid_coordinate, "station '" + s.id + "': longitude outside [-180, 180]");
    ids.push_back(s.id);
  }

  const int n = static_cast<int>(stations.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = haversine_km(stations[static_cast<std::size_t>(i)].lat,
                                    stations[static_cast<std::size_t>(i)].lon,
                                    stations[static_cast<std::size_t>(j)].lat,
                                    stations[static_cast<std::size_t>(j)].lon);
      if (d < radius_km) {
        a(i, j) = 1.0;
        a(j, i) = 1.0;
      }
    }
  }
  return Graph::from_adjacency(std::move(ids), std::move(a));
}

}  // namespace gsp
