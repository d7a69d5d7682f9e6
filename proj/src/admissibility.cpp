#include "paralab/admissibility.hpp"

#include <cmath>

#include "paralab/common.hpp"

namespace paralab {

namespace {

double double_factorial_odd(int k) {
  // (k-1)!! for even k
  double f = 1;
  for (int j = k - 1; j >= 1; j -= 2) f *= j;
  return f;
}

}  // namespace

double gaussian_mean(const Poly& p, double sigma2) {
  require(sigma2 >= 0, "gaussian_mean: variance must be nonnegative");
  double acc = 0, spow = 1;
  for (int k = 0; k <= p.degree(); k += 2) {
    if (k > 0) spow *= sigma2;
    acc += p.c[size_t(k)] * double_factorial_odd(k) * spow;
  }
  return acc;
}

AdmissibilityReport admissibility_check(const NonlinearitySpec& F, const NoiseSpec& noise,
                                        const Grid& g, double mu, double dt,
                                        const std::vector<double>& eps_grid, double delta,
                                        int direction_points) {
  require(!eps_grid.empty(), "admissibility: need at least one eps");
  require(delta > 0, "admissibility: delta must be positive");
  require(direction_points >= 3, "admissibility: need at least 3 direction points");
  AdmissibilityReport rep;
  rep.delta = delta;
  rep.eps_grid = eps_grid;

  // Shape: odd leading degree with positive coefficient is enforced by the
  // spec type; the derivative bound additionally needs deg G <= m1 <= m for a
  // finite C1, with m1 at least 4.
  rep.m1 = std::max(4, F.G.degree());
  rep.shape_ok = true;
  if (F.m == 3) {
    rep.m1 = 0;  // no intermediate band; only the leading term matters
    if (F.G.degree() >= 3) {
      rep.shape_ok = false;
      rep.shape_note = "cubic leading term cannot dominate a lower band";
    }
  } else if (rep.m1 > F.m) {
    rep.shape_ok = false;
    rep.shape_note = "lower-order part too steep for the leading term";
  }
  if (rep.m1 >= 4) {
    Poly gm1 = F.G.derivative(rep.m1);
    // deg G <= m1, so the m1-th derivative is constant
    rep.C1 = gm1.zero() ? 0.0 : std::abs(gm1.c[0]);
  }

  Poly f = F.F();
  double budget = 0;
  for (int i = 0; i <= 400; ++i) {
    double x = -20.0 + 0.1 * i;
    double s = 0;
    Poly d = f;
    for (int k = 0; k <= 9; ++k) {
      s += std::abs(d(x));
      d = d.derivative(1);
    }
    budget = std::max(budget, s * std::exp(-std::abs(x)));
  }
  rep.derivative_budget = budget;

  for (double eps : eps_grid) rep.reports.push_back(renormalize(F, noise, g, mu, dt, eps));

  rep.lambda3_min = rep.reports.front().lambda.l3;
  for (const auto& r : rep.reports) rep.lambda3_min = std::min(rep.lambda3_min, r.lambda.l3);

  if (rep.reports.size() >= 3) {
    auto inc = [&](size_t j) {
      const LambdaVector &a = rep.reports[j].lambda, &b = rep.reports[j + 1].lambda;
      return std::max(std::max(std::abs(a.l0 - b.l0), std::abs(a.l1 - b.l1)),
                      std::max(std::abs(a.l2 - b.l2), std::abs(a.l3 - b.l3)));
    };
    size_t half = (rep.reports.size() - 1) / 2;
    double early = 0, late = 0;
    for (size_t j = 0; j + 1 < rep.reports.size(); ++j) {
      if (j < half)
        early = std::max(early, inc(j));
      else
        late = std::max(late, inc(j));
    }
    rep.cauchy_defect = early > 0 ? late / early : 0.0;
  }

  // Homogeneous inequality: both sides are 1-homogeneous in (x, y), so it is
  // enough to scan the segment x = t, y = 1 - t.
  rep.margin = std::numeric_limits<double>::infinity();
  for (size_t ri = 0; ri < rep.reports.size(); ++ri) {
    const RenormReport& r = rep.reports[ri];
    double eps = r.eps;
    double s2 = r.sigma2;
    double lam3 = r.lambda.l3;
    std::vector<double> rhs_coef, rhs_theta;
    if (rep.m1 >= 4) {
      for (int l = 4; l <= rep.m1 - 1; ++l) {
        double cl = gaussian_mean(F.G.derivative(l), s2) / std::tgamma(double(l) + 1.0);
        double theta = double(l - 3) / double(F.m - 3);
        if (l % 2 == 0) {
          rhs_coef.push_back(2.0 * std::abs(cl));
        } else {
          double bl = F.C0 * std::tgamma(double(F.m) + 1.0) /
                      (std::tgamma(double(F.m - l) + 1.0) * std::tgamma(double(l) + 1.0));
          double mom = double_factorial_odd(F.m - l) * std::pow(s2, 0.5 * (F.m - l));
          double al = bl * mom + cl;
          rhs_coef.push_back(2.0 * std::abs(std::min(al, 0.0)));
        }
        rhs_theta.push_back(theta);
      }
      double cfac = 2.0 * rep.C1 / std::tgamma(double(rep.m1) + 1.0);
      rhs_coef.push_back(cfac);
      rhs_theta.push_back(double(rep.m1 - 3) / double(F.m - 3));
    }
    for (int i = 0; i < direction_points; ++i) {
      double t = double(i) / double(direction_points - 1);
      double lhs = (F.C0 - delta) * t + (lam3 - delta) * (1.0 - t);
      double rhs = 0;
      for (size_t j = 0; j < rhs_coef.size(); ++j)
        rhs += rhs_coef[j] * std::pow(t, rhs_theta[j]) * std::pow(1.0 - t, 1.0 - rhs_theta[j]);
      double m = lhs - rhs;
      if (m < rep.margin) {
        rep.margin = m;
        rep.witness_eps = eps;
        rep.witness_x = t;
        rep.witness_y = 1.0 - t;
      }
    }
  }

  rep.admissible = rep.shape_ok && rep.lambda3_min > 0 && rep.margin >= 0;
  return rep;
}

}  // namespace paralab
