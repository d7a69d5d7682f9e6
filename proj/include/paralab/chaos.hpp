#pragma once

#include "paralab/hermite.hpp"

namespace paralab {

// Odd-leading nonlinearity F(x) = C0 x^m + G(x), deg G < m.
struct NonlinearitySpec {
  double C0 = 1.0;
  int m = 5;
  Poly G;

  NonlinearitySpec() = default;
  NonlinearitySpec(double C0_, int m_, Poly G_ = Poly());

  Poly F() const;
  int degree() const { return m; }

  static NonlinearitySpec quintic();            // x^5
  static NonlinearitySpec cubic(double a = 1);  // a x^3
};

// Hermite (Wiener chaos) expansion of a polynomial at variance sigma2:
// F = sum_n f[n] H_n(., sigma2).
struct ChaosExpansion {
  double sigma2 = 1.0;
  Eigen::ArrayXd f;

  int nmax() const { return int(f.size()) - 1; }
  double coeff(int n) const { return n <= nmax() ? f[n] : 0.0; }
  double eval_series(double x) const;
};

// Exact expansion by triangular elimination against monic Hermite leading terms.
ChaosExpansion hermite_expand(const Poly& F, double sigma2);

// Quadrature route: f_n = E[F(Z) H_n(Z)] / (n! sigma2^n) with Z ~ N(0, sigma2),
// Gauss-Hermite with `nodes` points. Throws accuracy_error unless the rule is
// exact for every integrand, i.e. 2*nodes - 1 >= deg F + nmax.
ChaosExpansion chaos_coeffs(const Poly& F, double sigma2, int nmax, int nodes);

// F with chaos levels 0..2 removed: tilde F = F - f0 - f1 x - f2 H_2.
struct TildeF {
  double sigma2 = 1.0;
  Poly poly;              // direct polynomial representation
  ChaosExpansion chaos;   // same object as a Hermite series (levels >= 3)

  double operator()(double x) const { return poly(x); }
  Eigen::ArrayXd operator()(const Eigen::ArrayXd& x) const { return poly(x); }
  Poly derivative(int k) const { return poly.derivative(k); }
};

TildeF tilde_F(const Poly& F, double sigma2);

}  // namespace paralab
