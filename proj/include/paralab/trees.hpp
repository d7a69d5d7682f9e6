#pragma once

#include <array>
#include <string>
#include <vector>

#include "paralab/para.hpp"
#include "paralab/renorm.hpp"
#include "paralab/spectral.hpp"
#include "paralab/stats.hpp"

namespace paralab {

// Spatial regularity targets of the nine enhancement components, kappa > 0 a
// diagnostic offset. Order matches Enhancement::components().
struct HomogeneityTable {
  double kappa = 0;
  std::array<std::string, 9> names;
  std::array<double, 9> alpha;

  double target(const std::string& name) const;
};

HomogeneityTable homogeneity_table(double kappa);

// Enhanced noise built over one stationary realization Y. The nine named
// components are
//   y0   = (1/6) tF^(3)(sqrt(eps) Y)
//   y1   = (1/6) eps^{-1/2} tF^(2)(sqrt(eps) Y)
//   y2   = (1/3) eps^{-1} tF^(1)(sqrt(eps) Y)
//   yb2  = eps^{-1/2} f2 (Y^2 - E[Y^2])
//   iy3  = time integral of y3 = eps^{-3/2} tF(sqrt(eps) Y) against the heat flow
//   r31  = iy3 o y1 - d31
//   r22  = iy2 o y2 - d22
//   rb22 = iyb2 o y2 - d22_bar
//   r32  = iy3 o y2 - d32' Y - d32
// with tF the chaos tail at the report's variance, all integrated trees
// started from zero, and the scalar subtractions taken from the report.
struct Enhancement {
  double eps = 1, mu = 1, dt = 0;
  double sigma2 = 0;
  ChaosExpansion chaos;
  DConstants d;
  LambdaVector lambda;

  SpaceTimeField Y;
  SpaceTimeField y0, y1, y2, yb2;
  SpaceTimeField iy3, iy2, iyb2;
  SpaceTimeField r31, r22, rb22, r32;

  std::array<const SpaceTimeField*, 9> components() const {
    return {&y0, &y1, &y2, &yb2, &iy3, &r31, &r22, &rb22, &r32};
  }
};

// Builds all components from the realization and the renormalization report.
// The report must match the realization's dt; its chaos tail defines tF. The
// overload taking the nonlinearity re-expands it at the report variance and
// rejects a stale report.
Enhancement build_enhancement(const SpaceTimeField& Y, const RenormReport& rc);
Enhancement build_enhancement(const SpaceTimeField& Y, const NonlinearitySpec& F,
                              const RenormReport& rc);

// Scalar-weighted assembly of the limiting enhancement from unit-coupling base
// trees: weights (l3, l3, l3, l2, l3, l3^2, l3^2, l3 l2, l3^2) applied to base
// slots (y0, y1, y2, y2, iy3, r31, r22, r22, r32). Requires l3 > 0.
Enhancement limit_enhancement(const LambdaVector& lambda, const Enhancement& base);

// Ensemble mean of the spatial average of iy2 o y2 per frame, and its 3x
// multiple, the time-dependent centering constant of the resonance. se gets
// the standard error of the mean curve.
struct ResonanceCurve {
  Eigen::ArrayXd t;
  Eigen::ArrayXd mean;
  Eigen::ArrayXd se;
};

ResonanceCurve resonance_mean_curve(const NonlinearitySpec& F, const NoiseSpec& noise,
                                    const Grid& g, double mu, double T, double dt, double eps,
                                    int seeds, uint64_t master);
ResonanceCurve b_curve(const NonlinearitySpec& F, const NoiseSpec& noise, const Grid& g,
                       double mu, double T, double dt, double eps, int seeds, uint64_t master);

// Ensemble regularity table of Y plus the nine components at one epsilon;
// row order: y then the components() order.
std::vector<TreeRegRow> tree_regularity_table(const NonlinearitySpec& F, const NoiseSpec& noise,
                                              const Grid& g, double mu, double T, double dt,
                                              double eps, int seeds, uint64_t master,
                                              double kappa, const Weight& w);

// member x eps matrices of C_T Besov norms for the decay statistics:
// || y0 - lambda3 ||, respectively || (sqrt(eps) Y)^k - E (sqrt(eps) Y)^k ||,
// measured in C^{alpha}(w) with alpha = -kappa - eps_reg.
Eigen::ArrayXXd y0_deviation_norms(const NonlinearitySpec& F, const NoiseSpec& noise,
                                   const Grid& g, double mu, double T, double dt,
                                   const Eigen::ArrayXd& eps_grid, int seeds, uint64_t master,
                                   double kappa, double eps_reg, const Weight& w);
Eigen::ArrayXXd power_deviation_norms(int k, const NoiseSpec& noise, const Grid& g, double mu,
                                      double T, double dt, const Eigen::ArrayXd& eps_grid,
                                      int seeds, uint64_t master, double kappa, double eps_reg,
                                      const Weight& w);

}  // namespace paralab
