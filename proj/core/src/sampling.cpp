#include "gsp/sampling.hpp"

#include <Eigen/LU>
#include <cmath>
#include <string>

#include "gsp/errors.hpp"
#include "gsp/numerics.hpp"

namespace gsp {

Signal SampledSignal::embedded() const {
  Signal full = Signal::Zero(S.universe());
  int k = 0;
  for (int i : S.indices()) full(i) = values(k++);
  return full;
}

SampledSignal sample(const Signal& f, const VertexSet& s) {
  if (f.size() != s.universe())
    fail(Errc::dimension_mismatch, "signal length does not match vertex-set universe");
  Eigen::VectorXd vals(s.size());
  int k = 0;
  for (int i : s.indices()) vals(k++) = f(i);
  return SampledSignal{s, std::move(vals)};
}

SamplingCondition sampling_condition(const GftBasis& basis, const VertexSet& s,
                                     const FrequencySet& f, double tol) {
  if (!(tol > 0.0) || tol > 0.1)
    fail(Errc::invalid_tolerance, "tolerance must lie in (0, 0.1]");
  if (s.universe() != basis.size() || f.universe() != basis.size())
    fail(Errc::dimension_mismatch, "index-set universe does not match basis size");

  const Projector b = band_limiter(basis, f);
  const Eigen::MatrixXd dc = complement(vertex_limiter(s)).matrix;

  SamplingCondition out;
  out.bd_c_norm = spectral_norm(b.matrix * dc);
  const bool norm_ok = out.bd_c_norm < 1.0 - tol;

  // Rank form of the same statement. A norm within tol of 1 corresponds to a
  // singular value of B^c D^c within sqrt(1 - (1-tol)^2) of 0, so the cutoff
  // below keeps the two criteria aligned.
  const int rank_dc = s.universe() - s.size();
  const double cut = std::sqrt(std::max(0.0, 1.0 - (1.0 - tol) * (1.0 - tol)));
  const Eigen::MatrixXd bc = complement(b).matrix;
  const int rank_bc_dc = numerical_rank(bc * dc, cut);
  const bool rank_ok = rank_dc == rank_bc_dc;

  if (norm_ok != rank_ok)
    fail(Errc::rank_norm_disagreement,
         "sampling criteria disagree: ||B D^c|| = " + std::to_string(out.bd_c_norm) +
             " vs rank(D^c) = " + std::to_string(rank_dc) +
             ", rank(B^c D^c) = " + std::to_string(rank_bc_dc));

  out.ok = norm_ok;
  return out;
}

Signal reconstruct_slepian(const SampledSignal& fs, const SlepianBasis& slep,
                           double tol) {
  if (!(fs.S == slep.S))
    fail(Errc::set_mismatch, "sample vertex set does not match the basis vertex set");

  const int band = slep.F.size();
  if (slep.concentrated_count(tol) < band)
    fail(Errc::condition_violated,
         "only " + std::to_string(slep.concentrated_count(tol)) + " of " +
             std::to_string(band) +
             " concentrations exceed tolerance; sampling condition violated");

  const Signal df = fs.embedded();
  Signal out = Signal::Zero(slep.vectors.rows());
  for (int i = 0; i < band; ++i) {
    const double coeff = slep.vectors.col(i).dot(df) / slep.concentrations(i);
    out += coeff * slep.vectors.col(i);
  }
  return out;
}

Signal reconstruct_direct(const SampledSignal& fs, const Projector& band,
                          const VertexSet& s) {
  if (band.kind != ProjectorKind::band)
    fail(Errc::set_mismatch, "reconstruct_direct needs a band projector");
  if (band.size() != s.universe())
    fail(Errc::dimension_mismatch, "projector size does not match vertex-set universe");

  const Eigen::MatrixXd dc = complement(vertex_limiter(s)).matrix;
  const Eigen::MatrixXd system =
      Eigen::MatrixXd::Identity(band.size(), band.size()) - dc * band.matrix;

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);
  // The norm-based estimate turns into NaN garbage when U carries an exact
  // zero pivot, so fold in the pivot-ratio estimate as well.
  const Eigen::VectorXd pivots = lu.matrixLU().diagonal().cwiseAbs();
  const double pivot_max = pivots.size() ? pivots.maxCoeff() : 0.0;
  const double pivot_ratio = pivot_max > 0.0 ? pivots.minCoeff() / pivot_max : 0.0;
  double rcond = lu.rcond();
  if (!std::isfinite(rcond)) rcond = 0.0;
  rcond = std::min(rcond, pivot_ratio);
  if (!(rcond >= 1e-12))
    fail(Errc::singular_system,
         "I - D^c B is numerically singular (rcond = " + std::to_string(rcond) + ")");
  return lu.solve(fs.embedded());
}

ReconstructionReport analyze_nonbandlimited(const Signal& f, const GftBasis& basis,
                                            const VertexSet& s, const FrequencySet& f_set,
                                            double tol) {
  if (f.size() != basis.size())
    fail(Errc::dimension_mismatch, "signal length does not match basis size");

  ReconstructionReport report;
  const SamplingCondition cond = sampling_condition(basis, s, f_set, tol);
  report.condition_ok = cond.ok;
  report.bd_c_norm = cond.bd_c_norm;
  if (!cond.ok)
    fail(Errc::condition_violated,
         "sampling condition violated: ||B D^c|| = " + std::to_string(cond.bd_c_norm));

  const SlepianBasis slep = slepian_vectors(basis, s, f_set);
  const Projector b = band_limiter(basis, f_set);

  const Signal in_band = b.matrix * f;
  const Signal out_band = f - in_band;

  // Aliasing: the out-of-band part seen through the sampler, spread over the
  // concentration basis.
  const int band = f_set.size();
  if (slep.concentrated_count(tol) < band)
    fail(Errc::condition_violated, "concentration basis too small for the band");

  const Signal d_out_band = sample(out_band, s).embedded();
  Signal aliasing = Signal::Zero(f.size());
  double aliasing_sq = 0.0;
  for (int i = 0; i < band; ++i) {
    const double proj = slep.vectors.col(i).dot(d_out_band);
    const double coeff = proj / slep.concentrations(i);
    aliasing += coeff * slep.vectors.col(i);
    aliasing_sq += coeff * coeff;
  }

  report.reconstructed = in_band + aliasing;
  report.out_of_band_sq_error = out_band.squaredNorm();
  report.aliasing_sq_error = aliasing_sq;
  report.total_sq_error = report.out_of_band_sq_error + report.aliasing_sq_error;
  return report;
}

}  // namespace gsp
