#pragma once

#include <Eigen/Dense>
#include <random>
#include <string>
#include <vector>

#include "gsp/graph.hpp"

namespace benchutil {

/// Seeded Erdős–Rényi graph with weights in (0, 1].
inline gsp::Graph er_graph(int n, std::uint64_t seed, double p = 0.3) {
  std::mt19937_64 gen(seed);
  const auto unit = [&] { return (static_cast<double>(gen() >> 11) + 1.0) * 0x1p-53; };
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (unit() < p) a(i, j) = a(j, i) = unit();
  return gsp::Graph::from_adjacency(std::move(ids), std::move(a));
}

}  // namespace benchutil
