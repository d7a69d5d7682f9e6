#pragma once

#include <cstdint>
#include <vector>

#include "paralab/grid.hpp"
#include "paralab/io.hpp"

namespace paralab {

// Mollified space-time noise eta = zeta_eps * W built from a separable bump
// kernel zeta(t, x) = q(t) b(|x|) rescaled parabolically by eps.
struct NoiseSpec {
  double eps = 1.0;
  double time_support = 0.5;
  double space_radius = 0.5;

  void validate() const;
  static NoiseSpec white() { return NoiseSpec{0.0, 0.0, 0.0}; }
  bool is_white() const { return eps == 0.0; }
};

// Discretization of the mollifier on a fixed grid and time step. Time weights
// tw sum to one (dt folded in); sm is the spectral multiplier of the
// volume-normalized space bump, sm[0] = 1. A collapsed kernel (support below
// the step or spacing) degenerates to discrete white noise in that variable.
struct NoiseKernel {
  Grid grid;
  double dt = 0;
  NoiseSpec spec;
  Eigen::ArrayXd tw;
  Eigen::ArrayXd sm;

  int frames() const { return int(tw.size()); }
  // sum_m tw[m] tw[m+|lag|]
  double time_corr(int lag) const;
  // per-mode covariance E[etahat^n_k conj(etahat^{n+lag}_k)]
  Eigen::ArrayXd mode_autocov(int lag) const;
  // pointwise Var eta(t, x)
  double cov_zero() const;
  // z -> Cov(eta(t, y), eta(t + lag dt, y + z))
  RealField cov_field(int lag) const;
};

NoiseKernel build_kernel(const NoiseSpec& spec, const Grid& g, double dt);

// Independent N(0, 1/(dt h^d)) per frame and site; frame streams are indexed
// absolutely so realizations with different kernels couple through the same W.
RealField white_frame(const Grid& g, double dt, uint64_t seed, long frame);

SpaceTimeField sample_white(const Grid& g, double T, double dt, uint64_t seed);
SpaceTimeField sample_eta(const NoiseSpec& spec, const Grid& g, double T, double dt,
                          uint64_t seed);

// Parabolic rescaling eps^{-(d+2)/2} eta(t/eps^2, x/eps) as an exact grid
// relabeling: output lives on the box scaled by eps with step eps^2 dt.
SpaceTimeField rescale_eta(const SpaceTimeField& eta, double eps);
// Resampled variant on the relabeled grid with target step; linear in time.
// Throws bounds_error when the requested horizon exceeds the source.
SpaceTimeField rescale_eta(const SpaceTimeField& eta, double eps, double target_T,
                           double target_dt);

struct GaussianEnsemble {
  uint64_t master_seed = 0;
  std::vector<uint64_t> members;

  static GaussianEnsemble make(uint64_t master, int count);
  json manifest() const;
};

struct NoiseCalibration {
  double claimed = 0;
  double estimated = 0;
  double se = 0;
};

// Ensemble check of the discrete variance bookkeeping; throws
// calibration_error when the empirical variance strays by more than 5 se.
NoiseCalibration calibrate_noise(const NoiseSpec& spec, const Grid& g, double T, double dt,
                                 uint64_t master, int count);

}  // namespace paralab
