#pragma once

#include <functional>

#include "paralab/fft.hpp"
#include "paralab/grid.hpp"

namespace paralab {

// e^{-t(-Lap + mu)} applied spectrally; t >= 0.
RealField heat_propagate(const RealField& f, double t, double mu);
SpectralField heat_propagate(const SpectralField& f, double t, double mu);

// One-step exponential integrator for d/dt v = -(-Lap + mu) v + f with f frozen
// over the step: vhat <- E vhat + D fhat, E = e^{-dt lam}, D = (1 - E)/lam.
// Exact for frame-wise-constant forcing; shared by every trajectory in the lab
// so that pathwise algebraic identities survive discretization.
struct Stepper {
  Grid grid;
  double dt = 0;
  double mu = 0;
  Eigen::ArrayXd E, D;

  Stepper() = default;
  Stepper(const Grid& g, double dt_, double mu_);

  void advance(Eigen::ArrayXcd& vhat, const Eigen::ArrayXcd& fhat) const {
    vhat = E * vhat + D * fhat;
  }
};

// Trajectory of the zero-or-v0 initial value problem driven by the given
// forcing frames. Frame n of the result is the state at time n*dt; forcing
// frame n acts on the step n -> n+1.
SpaceTimeField duhamel_solve(const SpaceTimeField& forcing, double mu,
                             const RealField* v0 = nullptr);

struct HkfResult {
  double value = 0;
  double truncation_bound = 0;
  int evals = 0;
};

// integral_0^{T_cut} integral_box P_s(x) g(s)(x) dx ds with the mass-normalized
// heat kernel P_s (box integral e^{-s mu}). T_cut < 0 selects a cutoff with
// e^{-mu T_cut}/mu below 1e-12. Requires mu > 0.
HkfResult heat_kernel_functional(const Grid& g, const std::function<RealField(double)>& integrand,
                                 double mu, double T_cut = -1.0, int nodes_per_panel = 12);

}  // namespace paralab
