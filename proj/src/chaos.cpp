#include "paralab/chaos.hpp"

#include <cmath>

#include "paralab/common.hpp"
#include "paralab/quad.hpp"

namespace paralab {

NonlinearitySpec::NonlinearitySpec(double C0_, int m_, Poly G_)
    : C0(C0_), m(m_), G(std::move(G_)) {
  require(C0 > 0, "nonlinearity: leading coefficient must be positive");
  require(m >= 3 && m % 2 == 1, "nonlinearity: leading degree must be odd and >= 3");
  require(G.degree() < m, "nonlinearity: lower-order part must have degree < m");
}

Poly NonlinearitySpec::F() const { return Poly::monomial(m, C0) + G; }

NonlinearitySpec NonlinearitySpec::quintic() { return NonlinearitySpec(1.0, 5); }
NonlinearitySpec NonlinearitySpec::cubic(double a) { return NonlinearitySpec(a, 3); }

double ChaosExpansion::eval_series(double x) const {
  double acc = 0;
  for (int n = 0; n <= nmax(); ++n)
    if (f[n] != 0.0) acc += f[n] * hermite(n, x, sigma2);
  return acc;
}

ChaosExpansion hermite_expand(const Poly& F, double sigma2) {
  require(sigma2 > 0, "hermite_expand: variance must be positive");
  int deg = std::max(F.degree(), 0);
  ChaosExpansion out;
  out.sigma2 = sigma2;
  out.f = Eigen::ArrayXd::Zero(deg + 1);
  Poly rem = F;
  for (int n = deg; n >= 0; --n) {
    double a = (rem.degree() == n) ? rem.c[size_t(n)] : 0.0;
    out.f[n] = a;
    if (a != 0.0) rem = rem - hermite_poly(n, sigma2).scaled(a);
  }
  return out;
}

ChaosExpansion chaos_coeffs(const Poly& F, double sigma2, int nmax, int nodes) {
  require(sigma2 > 0, "chaos_coeffs: variance must be positive");
  require(nmax >= 0, "chaos_coeffs: nmax must be nonnegative");
  int deg = std::max(F.degree(), 0);
  if (2 * nodes - 1 < deg + nmax)
    throw accuracy_error("chaos_coeffs: quadrature rule not exact for degree " +
                         std::to_string(deg + nmax) + " with " + std::to_string(nodes) +
                         " nodes");
  Quad q = gauss_hermite_prob(nodes);
  double sigma = std::sqrt(sigma2);
  ChaosExpansion out;
  out.sigma2 = sigma2;
  out.f = Eigen::ArrayXd::Zero(nmax + 1);
  double fact = 1.0, spow = 1.0;
  for (int n = 0; n <= nmax; ++n) {
    if (n > 0) {
      fact *= double(n);
      spow *= sigma2;
    }
    double acc = 0;
    for (Eigen::Index i = 0; i < q.x.size(); ++i) {
      double z = sigma * q.x[i];
      acc += q.w[i] * F(z) * hermite(n, z, sigma2);
    }
    out.f[n] = acc / (fact * spow);
  }
  return out;
}

TildeF tilde_F(const Poly& F, double sigma2) {
  ChaosExpansion full = hermite_expand(F, sigma2);
  TildeF out;
  out.sigma2 = sigma2;
  out.poly = F - Poly::monomial(0, full.coeff(0)) - Poly::monomial(1, full.coeff(1)) -
             hermite_poly(2, sigma2).scaled(full.coeff(2));
  out.chaos = full;
  for (int n = 0; n <= std::min(2, out.chaos.nmax()); ++n) out.chaos.f[n] = 0.0;
  return out;
}

}  // namespace paralab
