#pragma once

#include "paralab/chaos.hpp"
#include "paralab/io.hpp"
#include "paralab/ou.hpp"

namespace paralab {

// E[tF^{(a)}(Z1) tF^{(b)}(Z2)] as a polynomial in c = Cov(Z1, Z2), where tF is
// the level >= 3 chaos tail held by a TildeF. Closed form
//   sum_p f_{p+a} f_{p+b} (p+a)! (p+b)! / p! c^p.
Poly mehler_pair(const ChaosExpansion& tails, int a, int b);

// Same expectation through conditional Gauss-Hermite quadrature in two
// variables; exact for polynomials when nodes exceed half the degree.
double pair_expectation_quad(const Poly& fa, const Poly& fb, double sigma2, double c,
                             int nodes);

struct DConstants {
  double d22 = 0, d22_bar = 0, d31 = 0, d32 = 0;
  double d32_prime() const { return 2.0 * d31 + 3.0 * d22; }
  int lags = 0;
  double tail_bound = 0;
};

enum class PairPath { mehler, quadrature };

// Renormalization constants of the discrete tree enhancement: heat-weighted
// lag sums of pair correlation functions of the stationary OU covariance,
// exactly matched to the exponential Euler stepping.
DConstants d_constants(const NonlinearitySpec& F, const NoiseSpec& noise, const Grid& g,
                       double mu, double dt, double eps, PairPath path = PairPath::mehler);

struct DMonteCarlo {
  DConstants value;
  DConstants se;  // propagated standard errors in the value fields
  long pairs_per_node = 0;
};

// Monte Carlo oracle over the same lag nodes: heat-kernel importance sampling
// in space, one Gaussian pair per draw.
DMonteCarlo d_constants_mc(const NonlinearitySpec& F, const NoiseSpec& noise, const Grid& g,
                           double mu, double dt, double eps, long pairs_per_node,
                           uint64_t seed);

struct LambdaVector {
  double l0 = 0, l1 = 0, l2 = 0, l3 = 0;
  double c0 = 0;  // constant term seen by the solver: l0 + eps^{-1/2} f2 d31
};

LambdaVector lambda_vector(const ChaosExpansion& chaos, double eps, const DConstants& d);

struct RenormReport {
  double eps = 0, mu = 0, dt = 0;
  double sigma2 = 0;
  ChaosExpansion chaos;
  DConstants d;
  LambdaVector lambda;
};

RenormReport renormalize(const NonlinearitySpec& F, const NoiseSpec& noise, const Grid& g,
                         double mu, double dt, double eps,
                         PairPath path = PairPath::mehler);

// One row per report: eps, f0..f3, d22, d22_bar, d31, d32, lambda0..lambda3.
void write_renorm_csv(CsvWriter& csv, const std::vector<RenormReport>& rows);

}  // namespace paralab
