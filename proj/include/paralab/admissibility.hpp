#pragma once

#include <vector>

#include "paralab/renorm.hpp"

namespace paralab {

// Exact Gaussian mean E[p(Z)], Z ~ N(0, sigma2).
double gaussian_mean(const Poly& p, double sigma2);

struct AdmissibilityReport {
  bool shape_ok = false;
  std::string shape_note;
  int m1 = 0;
  double C1 = 0;
  // sup over probes of sum_{k<=9} |F^(k)(x)| e^{-|x|}
  double derivative_budget = 0;
  std::vector<double> eps_grid;
  std::vector<RenormReport> reports;
  double cauchy_defect = 0;  // late-to-early ratio of lambda increments
  double lambda3_min = 0;
  double delta = 0;
  double margin = 0;  // min over eps and the direction grid of lhs - rhs
  double witness_eps = 0, witness_x = 0, witness_y = 0;
  bool admissible = false;
};

// Checks the standing conditions on a nonlinearity family over a dyadic eps
// grid: shape of F, derivative budget, convergence of the lambda vector,
// positivity of lambda3, and the homogeneous coefficient inequality with the
// slack delta. Witnesses locate the tightest direction.
AdmissibilityReport admissibility_check(const NonlinearitySpec& F, const NoiseSpec& noise,
                                        const Grid& g, double mu, double dt,
                                        const std::vector<double>& eps_grid, double delta,
                                        int direction_points = 2001);

}  // namespace paralab
