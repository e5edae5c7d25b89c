// Shared fixtures and independent oracles for the test suites. Everything in
// here deliberately avoids the library's own numerical paths wherever it is
// used as an oracle against them.
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "gsp/errors.hpp"
#include "gsp/graph.hpp"
#include "gsp/operators.hpp"
#include "gsp/sampling.hpp"
#include "gsp/sets.hpp"
#include "gsp/spectral.hpp"

namespace testutil {

/// True when fn throws a gsp::Error carrying exactly this code.
template <typename Fn>
bool fails_with(gsp::Errc code, Fn&& fn) {
  try {
    fn();
  } catch (const gsp::Error& e) {
    return e.code() == code;
  }
  return false;
}

inline std::mt19937_64 engine(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double unit_draw(std::mt19937_64& gen) {
  return (static_cast<double>(gen() >> 11) + 1.0) * 0x1p-53;  // (0, 1]
}

inline Eigen::VectorXd random_vector(std::mt19937_64& gen, int n) {
  Eigen::VectorXd v(n);
  std::normal_distribution<double> normal;
  for (int i = 0; i < n; ++i) v(i) = normal(gen);
  return v;
}

/// Erdős–Rényi graph, edge probability p, weights uniform in (0, 1].
inline gsp::Graph random_er_graph(std::mt19937_64& gen, int n, double p = 0.5) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (unit_draw(gen) < p) {
        const double w = unit_draw(gen);
        a(i, j) = w;
        a(j, i) = w;
      }
    }
  }
  return gsp::Graph::from_adjacency(std::move(ids), std::move(a));
}

inline bool is_connected(const gsp::Graph& g) {
  const int n = g.size();
  if (n == 0) return true;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = true;
  int reached = 1;
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int u = 0; u < n; ++u) {
      if (g.adjacency()(v, u) > 0.0 && !seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = true;
        frontier.push(u);
        ++reached;
      }
    }
  }
  return reached == n;
}

inline gsp::Graph random_connected_graph(std::mt19937_64& gen, int n, double p = 0.5) {
  for (;;) {
    gsp::Graph g = random_er_graph(gen, n, p);
    if (is_connected(g)) return g;
  }
}

inline gsp::Graph complete_graph(int n) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Ones(n, n);
  a.diagonal().setZero();
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back("k" + std::to_string(i + 1));
  return gsp::Graph::from_adjacency(std::move(ids), std::move(a));
}

inline gsp::Graph path_graph(int n) {
  std::vector<gsp::Edge> edges;
  for (int i = 0; i + 1 < n; ++i)
    edges.push_back({"p" + std::to_string(i + 1), "p" + std::to_string(i + 2), 1.0});
  // ids p1..p9 sort lexicographically in order for n < 10
  return gsp::Graph::from_edges(edges);
}

/// Random m-subset drawn with std::sample semantics (test-local, independent
/// of the library's generator).
inline std::vector<int> draw_subset(std::mt19937_64& gen, int n, int m) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
  std::shuffle(pool.begin(), pool.end(), gen);
  pool.resize(static_cast<std::size_t>(m));
  std::sort(pool.begin(), pool.end());
  return pool;
}

inline gsp::VertexSet random_vertex_subset(std::mt19937_64& gen, int n, int m) {
  return gsp::VertexSet::from_zero_based(draw_subset(gen, n, m), n);
}

inline gsp::FrequencySet random_frequency_subset(std::mt19937_64& gen, int n, int m) {
  return gsp::FrequencySet::from_zero_based(draw_subset(gen, n, m), n);
}

/// Rank oracle: Gaussian elimination with full pivoting, counting pivots
/// above tol. Independent of any SVD path.
inline int rank_by_pivoted_elimination(Eigen::MatrixXd m, double tol) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  int rank = 0;
  Eigen::Index r0 = 0;
  Eigen::Index c0 = 0;
  while (r0 < rows && c0 < cols) {
    Eigen::Index pr = r0;
    Eigen::Index pc = c0;
    double best = 0.0;
    for (Eigen::Index i = r0; i < rows; ++i)
      for (Eigen::Index j = c0; j < cols; ++j)
        if (std::abs(m(i, j)) > best) {
          best = std::abs(m(i, j));
          pr = i;
          pc = j;
        }
    if (best <= tol) break;
    m.row(r0).swap(m.row(pr));
    m.col(c0).swap(m.col(pc));
    for (Eigen::Index i = r0 + 1; i < rows; ++i) {
      const double factor = m(i, c0) / m(r0, c0);
      m.row(i).tail(cols - c0) -= factor * m.row(r0).tail(cols - c0);
    }
    ++rank;
    ++r0;
    ++c0;
  }
  return rank;
}

/// Least-squares bandlimited fit to the samples, via column-pivoted QR on the
/// sampled basis rows. Oracle for both reconstruction routes.
inline gsp::Signal least_squares_reconstruct(const gsp::GftBasis& basis,
                                             const gsp::FrequencySet& f,
                                             const gsp::SampledSignal& fs) {
  const Eigen::MatrixXd u_band = gsp::band_columns(basis, f);
  Eigen::MatrixXd rows(fs.S.size(), f.size());
  int k = 0;
  for (int v : fs.S.indices()) rows.row(k++) = u_band.row(v);
  const Eigen::VectorXd coeffs = rows.colPivHouseholderQr().solve(fs.values);
  return u_band * coeffs;
}

/// All m-subsets of {0..n-1}, for exhaustive baselines.
inline std::vector<std::vector<int>> all_subsets_of_size(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(static_cast<std::size_t>(m));
  const auto recurse = [&](auto&& self, int start, int depth) -> void {
    if (depth == m) {
      out.push_back(pick);
      return;
    }
    for (int v = start; v <= n - (m - depth); ++v) {
      pick[static_cast<std::size_t>(depth)] = v;
      self(self, v + 1, depth + 1);
    }
  };
  recurse(recurse, 0, 0);
  return out;
}

}  // namespace testutil
