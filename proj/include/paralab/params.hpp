#pragma once

#include "paralab/common.hpp"

namespace paralab {

// Exponent bookkeeping for the pathwise analysis. Defaults satisfy every
// regime constraint; validate() names the first violated one.
struct AnalysisParams {
  int m = 5;             // leading odd power of the potential
  int m1 = 4;            // order with a uniform derivative bound
  double mu = 1.0;       // mass
  double nu = 1.0;       // weight decay rate
  double alpha = 0.05;   // base regularity budget
  double kappa = 0.044;  // roughness offset, gamma = alpha - kappa
  double gamma = 0.006;
  double eps_exp = 0.003;
  double gamma1 = 0.25;
  double gamma_prime = 0.24;
  double gamma_dprime = 0.22;
  double sigma_w = 0.1;  // weight power for diagnostic norms
  double delta = 0.5;    // localization decay rate
  double delta0 = 0.5;   // max-principle slack

  void validate() const;
};

AnalysisParams default_params();

}  // namespace paralab
