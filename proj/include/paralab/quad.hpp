#pragma once

#include <Eigen/Dense>

#include "paralab/common.hpp"

namespace paralab {

struct Quad {
  Eigen::ArrayXd x;
  Eigen::ArrayXd w;
};

// Gauss-Legendre rule on [-1, 1]; weights sum to 2.
Quad gauss_legendre(int n);

// Gauss-Legendre rule mapped to [a, b].
Quad gauss_legendre_on(int n, double a, double b);

// Gauss-Hermite rule for the standard normal weight; weights sum to 1, so
// sum_i w_i f(x_i) ~ E[f(Z)], Z ~ N(0,1), exact for polynomials of degree < 2n.
Quad gauss_hermite_prob(int n);

}  // namespace paralab
