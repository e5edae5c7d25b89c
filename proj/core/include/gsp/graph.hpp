#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

namespace gsp {

struct Edge {
  std::string u;
  std::string v;
  double w = 1.0;
};

enum class LaplacianKind { combinatorial, normalized };

/// Weighted undirected graph: symmetric nonnegative adjacency with a zero
/// diagonal, plus the external string id of each vertex. Immutable after
/// construction and safe for concurrent reads.
class Graph {
 public:
  /// Builds from an edge list. Vertices are ordered lexicographically by id.
  /// Duplicate (u,v)/(v,u) rows must carry equal weights.
  static Graph from_edges(const std::vector<Edge>& edges);

  /// Builds from an explicit adjacency matrix; `ids` fixes the vertex order.
  static Graph from_adjacency(std::vector<std::string> ids, Eigen::MatrixXd weights);

  int size() const { return static_cast<int>(weights_.rows()); }
  const std::vector<std::string>& vertex_ids() const { return ids_; }
  const Eigen::MatrixXd& adjacency() const { return weights_; }

  std::optional<int> index_of(const std::string& id) const;

  /// Weighted vertex degrees (adjacency row sums).
  Eigen::VectorXd degrees() const;

  /// K - A, or the degree-normalized variant K^{-1/2} (K - A) K^{-1/2}.
  /// The normalized kind requires every vertex to have positive degree.
  Eigen::MatrixXd laplacian(LaplacianKind kind) const;

 private:
  Graph(std::vector<std::string> ids, Eigen::MatrixXd weights);

  std::vector<std::string> ids_;
  Eigen::MatrixXd weights_;
};

struct GeoStation {
  std::string id;
  double lat = 0.0;  // degrees, [-90, 90]
  double lon = 0.0;  // degrees, [-180, 180]
  std::optional<double> value;  // attached signal sample, if any
};

inline constexpr double kEarthRadiusKm = 6371.0;

/// Great-circle distance between two (lat, lon) points in km, using the
/// haversine formula on a sphere of radius kEarthRadiusKm.
double haversine_km(double lat1_deg, double lon1_deg, double lat2_deg, double lon2_deg);

/// Unit-weight edge between stations closer than radius_km. Vertex order is
/// the input order. The result may be disconnected.
Graph build_geo_graph(const std::vector<GeoStation>& stations, double radius_km);

}  // namespace gsp
