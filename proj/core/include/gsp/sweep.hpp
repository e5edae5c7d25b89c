#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "gsp/spectral.hpp"

namespace gsp {

struct SweepOptions {
  std::vector<int> sample_sizes;  // |S| values, each in 1..n
  std::vector<int> bandwidths;    // |F| values, each in 1..n
  int trials = 1;
  std::uint64_t seed = 0;
  int threads = 1;
  double tol = 1e-8;  // sampling-condition tolerance per trial
};

/// One (|S|, |F|) cell of the reconstruction-error experiment. Cells where
/// every trial failed the sampling condition carry NaN statistics and
/// valid_trials == 0.
struct SweepCell {
  int sample_size = 0;
  int bandwidth = 0;
  double nmse_mean = 0.0;
  double nmse_std = 0.0;  // population standard deviation over valid trials
  int valid_trials = 0;
};

/// Reconstruction error of f versus bandwidth and sampling-set size.
///
/// For every cell, `trials` sampling sets are drawn uniformly at random;
/// trial t of cell (m, k) uses the dedicated substream
/// substream_seed(seed, m, k, t), so results are bitwise identical across
/// runs and thread counts. The frequency set is always the lowest-k prefix.
/// Trials that violate the sampling condition are skipped and the remainder
/// averaged: NMSE = ||f - f~||^2 / ||f||^2.
///
/// Throws no_valid_trials only if every cell is empty.
std::vector<SweepCell> nmse_sweep(const GftBasis& basis, const Signal& f,
                                  const SweepOptions& options);

}  // namespace gsp
