#include "paralab/spectral.hpp"

#include <cmath>

#include "paralab/quad.hpp"

namespace paralab {

SpectralField heat_propagate(const SpectralField& f, double t, double mu) {
  if (t < 0) throw std::domain_error("heat_propagate: time must be nonnegative");
  Eigen::ArrayXd lam = f.grid.mode_k2() + mu;
  SpectralField out(f.grid);
  out.data = f.data * (-t * lam).exp().cast<std::complex<double>>();
  return out;
}

RealField heat_propagate(const RealField& f, double t, double mu) {
  return to_physical(heat_propagate(to_spectral(f), t, mu));
}

Stepper::Stepper(const Grid& g, double dt_, double mu_) : grid(g), dt(dt_), mu(mu_) {
  if (!(dt > 0)) throw std::domain_error("stepper: dt must be positive");
  Eigen::ArrayXd lam = g.mode_k2() + mu;
  E = (-dt * lam).exp();
  D.resize(lam.size());
  for (long i = 0; i < lam.size(); ++i) {
    double l = lam[i];
    if (std::abs(l) * dt < 1e-8)
      D[i] = dt * (1.0 - 0.5 * l * dt);
    else
      D[i] = (1.0 - std::exp(-dt * l)) / l;
  }
}

SpaceTimeField duhamel_solve(const SpaceTimeField& forcing, double mu, const RealField* v0) {
  const Grid& g = forcing.grid;
  Stepper st(g, forcing.dt, mu);
  SpaceTimeField out(g, forcing.dt, forcing.nt());
  Eigen::ArrayXcd vhat;
  if (v0) {
    check_same_grid(g, v0->grid);
    vhat = to_spectral(*v0).data;
    out.set_frame(0, *v0);
  } else {
    vhat = Eigen::ArrayXcd::Zero(g.size());
  }
  for (int n = 0; n + 1 < forcing.nt(); ++n) {
    Eigen::ArrayXcd fhat = to_spectral(forcing.frame(n)).data;
    st.advance(vhat, fhat);
    out.set_frame(n + 1, to_physical(SpectralField(g, vhat)));
  }
  return out;
}

HkfResult heat_kernel_functional(const Grid& g, const std::function<RealField(double)>& integrand,
                                 double mu, double T_cut, int nodes_per_panel) {
  if (!(mu > 0)) throw std::domain_error("heat_kernel_functional: mass mu must be positive");
  if (T_cut < 0) T_cut = std::max(1.0, 28.0 / mu);
  if (nodes_per_panel < 2) throw std::domain_error("heat_kernel_functional: need at least 2 nodes");

  const double hd = std::pow(g.spacing(), g.dim);
  const double vol = std::pow(g.box, g.dim);
  Eigen::ArrayXd lam = g.mode_k2() + mu;

  auto eval = [&](double s) {
    SpectralField ker(g);
    ker.data = ((-s * lam).exp() / vol).cast<std::complex<double>>();
    RealField P = to_physical(ker);
    RealField gs = integrand(s);
    check_same_grid(g, gs.grid);
    return hd * (P.data * gs.data).sum();
  };

  // Panel layout: fine near s = 0 where the kernel sharpens, then coarser.
  std::vector<double> edges{0.0};
  double head = std::min(1.0, T_cut);
  for (int j = 1; j <= 12; ++j) edges.push_back(head * j / 12.0);
  double w = std::max(0.5, 1.0 / mu);
  for (double s = head + w; s < T_cut; s += w) edges.push_back(s);
  if (edges.back() < T_cut) edges.push_back(T_cut);

  HkfResult res;
  double acc = 0;
  for (size_t p = 0; p + 1 < edges.size(); ++p) {
    Quad q = gauss_legendre_on(nodes_per_panel, edges[p], edges[p + 1]);
    for (int i = 0; i < q.x.size(); ++i) {
      acc += q.w[i] * eval(q.x[i]);
      ++res.evals;
    }
  }
  res.value = acc;

  double tail_scale = integrand(T_cut).data.abs().maxCoeff();
  res.truncation_bound = tail_scale * std::exp(-mu * T_cut) / mu;
  return res;
}

}  // namespace paralab
