#pragma once

#include <string>

#include "paralab/dyadic.hpp"
#include "paralab/io.hpp"
#include "paralab/weight.hpp"

namespace paralab {

double linf_weighted(const RealField& f, const Weight& w);

// Weighted Besov sup-norm: sup_j 2^{j alpha} || rho Delta_j f ||_inf, the
// weight applied inside, after the block projection.
double besov_norm(const RealField& f, double alpha, const Weight& w);
double besov_norm_pre(const BlockDecomp& blocks, double alpha, const Eigen::ArrayXd& wfield);

// Weighted Hoelder norm for alpha in (0, 1): || rho f ||_inf plus the sup over
// axis-aligned lattice shifts 0 < |h| <= 1 of |h|^-alpha || rho (f(.+h) - f) ||_inf.
double holder_norm(const RealField& f, double alpha, const Weight& w);

struct NormReport {
  std::string family;      // "besov" or "linf" in space
  double space_alpha = 0;  // ignored for linf
  double time_alpha = 0;   // 0: no time-Hoelder part
  double weight_power = 0;
  double sup_value = 0;     // sup over frames of the spatial norm
  double holder_value = 0;  // time-Hoelder part over dyadic frame lags
  double total = 0;
  json to_json() const;
};

NormReport spacetime_norm(const SpaceTimeField& f, const std::string& family, double space_alpha,
                          double time_alpha, const Weight& w);

// Interpolation diagnostic: compares sup_t besov(f(t), alpha, w1) against
// linf^(1-theta) * besov(2-kappa)^theta with theta = alpha/(2-kappa) and the
// geometrically matched weight w1 = w2^(1-theta) w3^theta.
struct GapReport {
  double theta = 0;
  double lhs = 0;
  double rhs = 0;
  double ratio = 0;
  json to_json() const;
};

GapReport interpolation_gap(const SpaceTimeField& psi, double alpha, double kappa,
                            const Weight& w2, const Weight& w3);

}  // namespace paralab
