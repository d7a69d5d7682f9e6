#pragma once

#include "paralab/grid.hpp"

namespace paralab {

// Polynomial weight rho(x)^a with rho(x) = (1 + |x|^2)^{-nu/2}; a may be
// negative (growing weight). Weights with equal nu compose by adding powers.
struct Weight {
  double nu = 1.0;
  double a = 0.0;

  Weight() = default;
  Weight(double nu_, double a_) : nu(nu_), a(a_) {
    if (!(nu > 0)) throw std::domain_error("weight: nu must be positive");
  }

  double value(double r2) const { return std::pow(1.0 + r2, -0.5 * nu * a); }

  RealField field(const Grid& g) const {
    Eigen::ArrayXd r2 = g.radius2();
    RealField out(g);
    for (long i = 0; i < g.size(); ++i) out.data[i] = value(r2[i]);
    return out;
  }

  Weight pow(double p) const { return Weight(nu, a * p); }

  Weight operator*(const Weight& o) const {
    if (nu != o.nu) throw dimension_error("weight: cannot combine different decay rates");
    return Weight(nu, a + o.a);
  }
};

}  // namespace paralab
