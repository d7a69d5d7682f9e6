#pragma once

#include "paralab/noise.hpp"

namespace paralab {

// Discrete Ornstein-Uhlenbeck field driven by exponential Euler steps
// Yhat^{n+1} = e^{-lambda dt} Yhat^n + D_k etahat^n, lambda = mu + |k|^2.
// All covariance bookkeeping below is exact for that recursion.

struct OuStats {
  Eigen::ArrayXd mode_var;  // stationary E |Yhat_k|^2
  double field_variance() const { return mode_var.sum(); }
};

OuStats ou_stationary_stats(const NoiseKernel& kern, double mu);

// Stationary Cov(Yhat^n_k, Yhat^{n+lag}_k).
Eigen::ArrayXd ou_mode_autocov(const NoiseKernel& kern, double mu, int lag);

// z -> Cov(Y(t, y), Y(t + lag dt, y + z)) in the stationary state.
RealField ou_cov_field(const NoiseKernel& kern, double mu, int lag);

double sigma_eps2(const NoiseKernel& kern, double mu, double eps);

// Plain stepping from an initial condition (zero when absent); Y keeps the
// frame layout of eta and the last forcing frame is unused.
SpaceTimeField ou_evolve(const SpaceTimeField& eta, double mu, const RealField* y0 = nullptr);

// Evolution started from an exact draw of the stationary marginal,
// independent of the supplied forcing. For white forcing the joint law is
// exactly stationary; for a smooth kernel the missing init-forcing
// correlation decays like e^{-mu t}.
SpaceTimeField stationary_Y(const SpaceTimeField& eta, double mu, uint64_t init_seed,
                            const NoiseKernel* kern = nullptr);

// Jointly stationary pair (Y, eta) from one master seed: the initial state is
// split into the part explained by the shared white-noise prefix plus an
// independent remainder with the exact residual variance, so every output
// frame has the stationary law.
struct OuPath {
  SpaceTimeField Y;
  SpaceTimeField eta;
};

OuPath sample_stationary_ou(const NoiseSpec& spec, const Grid& g, double mu, double T,
                            double dt, uint64_t seed);

struct OuCalibration {
  double claimed = 0;
  double estimated = 0;
  double se = 0;
};

// Ensemble check of the stationary variance; throws calibration_error beyond 5 se.
OuCalibration calibrate_ou(const NoiseSpec& spec, const Grid& g, double mu, double T,
                           double dt, uint64_t master, int count);

}  // namespace paralab
