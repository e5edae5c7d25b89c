#include "gsp/sweep.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "gsp/errors.hpp"
#include "gsp/rng.hpp"

namespace gsp {

namespace {

struct TrialResult {
  bool valid = false;
  double nmse = 0.0;
};

// One reconstruction trial, evaluated on the |F| x |F| reduced problem: the
// nonzero spectrum of B D B equals the spectrum of R^T R with R the sampled
// rows of U_F, so this computes exactly the closed-form reconstruction at a
// fraction of the dense cost.
TrialResult run_trial(const Eigen::MatrixXd& u_band, const Signal& f,
                      const Signal& in_band, const Signal& out_band,
                      double f_sq_norm, const std::vector<int>& s, double tol) {
  const int k = static_cast<int>(u_band.cols());

  Eigen::MatrixXd rows(s.size(), k);
  Eigen::VectorXd out_band_samples(s.size());
  for (std::size_t r = 0; r < s.size(); ++r) {
    rows.row(static_cast<Eigen::Index>(r)) = u_band.row(s[r]);
    out_band_samples(static_cast<Eigen::Index>(r)) = out_band(s[r]);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(rows.transpose() * rows);
  if (eig.info() != Eigen::Success)
    fail(Errc::eigensolver_failure, "trial eigensolve failed");

  // ||B D^c||^2 = 1 - smallest concentration; the condition ||B D^c|| < 1-tol
  // becomes the bound below.
  const double min_conc = eig.eigenvalues()(0);
  if (!(min_conc > 1.0 - (1.0 - tol) * (1.0 - tol))) return {};

  const Eigen::VectorXd z = eig.eigenvectors().transpose() * (rows.transpose() * out_band_samples);
  const Eigen::VectorXd coeffs =
      eig.eigenvectors() * (z.array() / eig.eigenvalues().array()).matrix();

  const Signal reconstructed = in_band + u_band * coeffs;
  return {true, (f - reconstructed).squaredNorm() / f_sq_norm};
}

}  // namespace

std::vector<SweepCell> nmse_sweep(const GftBasis& basis, const Signal& f,
                                  const SweepOptions& options) {
  const int n = basis.size();
  if (f.size() != n)
    fail(Errc::dimension_mismatch, "signal length does not match basis size");
  if (options.trials < 1)
    fail(Errc::size_out_of_range, "sweep needs at least one trial");
  if (!(options.tol > 0.0) || options.tol > 0.1)
    fail(Errc::invalid_tolerance, "tolerance must lie in (0, 0.1]");
  for (int m : options.sample_sizes)
    if (m < 1 || m > n)
      fail(Errc::size_out_of_range, "sample size " + std::to_string(m) + " outside 1.." + std::to_string(n));
  for (int k : options.bandwidths)
    if (k < 1 || k > n)
      fail(Errc::size_out_of_range, "bandwidth " + std::to_string(k) + " outside 1.." + std::to_string(n));
  const double f_sq_norm = f.squaredNorm();
  if (f_sq_norm == 0.0)
    fail(Errc::size_out_of_range, "NMSE is undefined for the zero signal");

  const int threads = std::max(1, options.threads);
  std::vector<SweepCell> table;
  table.reserve(options.sample_sizes.size() * options.bandwidths.size());

  for (int m : options.sample_sizes) {
    for (int k : options.bandwidths) {
      const Eigen::MatrixXd u_band = basis.U.leftCols(k);
      const Signal in_band = u_band * (u_band.transpose() * f);
      const Signal out_band = f - in_band;

      std::vector<TrialResult> results(static_cast<std::size_t>(options.trials));
      auto worker = [&](int begin, int end) {
        for (int t = begin; t < end; ++t) {
          auto gen = make_engine(substream_seed(options.seed, static_cast<std::uint64_t>(m),
                                                static_cast<std::uint64_t>(k),
                                                static_cast<std::uint64_t>(t)));
          const std::vector<int> s = random_subset(gen, n, m);
          results[static_cast<std::size_t>(t)] =
              run_trial(u_band, f, in_band, out_band, f_sq_norm, s, options.tol);
        }
      };

      if (threads == 1) {
        worker(0, options.trials);
      } else {
        std::vector<std::thread> pool;
        const int chunk = (options.trials + threads - 1) / threads;
        for (int w = 0; w < threads; ++w) {
          const int begin = w * chunk;
          const int end = std::min(options.trials, begin + chunk);
          if (begin >= end) break;
          pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
      }

      // Fixed trial-order accumulation keeps the statistics bitwise
      // independent of the thread count.
      SweepCell cell{m, k, 0.0, 0.0, 0};
      double sum = 0.0;
      for (const TrialResult& r : results) {
        if (!r.valid) continue;
        sum += r.nmse;
        ++cell.valid_trials;
      }
      if (cell.valid_trials == 0) {
        cell.nmse_mean = std::numeric_limits<double>::quiet_NaN();
        cell.nmse_std = std::numeric_limits<double>::quiet_NaN();
      } else {
        cell.nmse_mean = sum / cell.valid_trials;
        double sq_dev = 0.0;
        for (const TrialResult& r : results) {
          if (!r.valid) continue;
          const double d = r.nmse - cell.nmse_mean;
          sq_dev += d * d;
        }
        cell.nmse_std = std::sqrt(sq_dev / cell.valid_trials);
      }
      table.push_back(cell);
    }
  }

  const bool any_valid =
      std::any_of(table.begin(), table.end(), [](const SweepCell& c) { return c.valid_trials > 0; });
  if (!table.empty() && !any_valid)
    fail(Errc::no_valid_trials, "every sweep cell failed the sampling condition in all trials");
  return table;
}

}  // namespace gsp
