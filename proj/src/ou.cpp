#include "paralab/ou.hpp"

#include <cmath>

#include "paralab/common.hpp"
#include "paralab/fft.hpp"
#include "paralab/rng.hpp"

namespace paralab {

namespace {

struct ModeCoeffs {
  Eigen::ArrayXd lam, x, D, one_minus_x2;
};

ModeCoeffs mode_coeffs(const Grid& g, double mu, double dt) {
  require(mu > 0, "ou: mass mu must be positive");
  require(dt > 0, "ou: dt must be positive");
  ModeCoeffs c;
  c.lam = g.mode_k2() + mu;
  c.x = (-dt * c.lam).exp();
  c.D = -(-dt * c.lam).unaryExpr([](double v) { return std::expm1(v); }) / c.lam;
  c.one_minus_x2 = -(-2.0 * dt * c.lam).unaryExpr([](double v) { return std::expm1(v); });
  return c;
}

Eigen::ArrayXd stationary_mode_cov(const NoiseKernel& kern, double mu, int lag) {
  ModeCoeffs c = mode_coeffs(kern.grid, mu, kern.dt);
  int K = kern.frames();
  double vol = std::pow(kern.grid.box, kern.grid.dim);
  Eigen::ArrayXd acc = Eigen::ArrayXd::Zero(kern.grid.size());
  for (int d = -(K - 1); d <= K - 1; ++d) {
    double tc = kern.time_corr(d);
    if (tc == 0) continue;
    acc += tc * c.x.pow(double(std::abs(lag + d)));
  }
  return c.D.square() / c.one_minus_x2 * kern.sm.square() * acc / (kern.dt * vol);
}

}  // namespace

OuStats ou_stationary_stats(const NoiseKernel& kern, double mu) {
  return OuStats{stationary_mode_cov(kern, mu, 0)};
}

Eigen::ArrayXd ou_mode_autocov(const NoiseKernel& kern, double mu, int lag) {
  return stationary_mode_cov(kern, mu, lag);
}

RealField ou_cov_field(const NoiseKernel& kern, double mu, int lag) {
  SpectralField spec(kern.grid);
  spec.data = stationary_mode_cov(kern, mu, lag).cast<std::complex<double>>();
  return to_physical(spec);
}

double sigma_eps2(const NoiseKernel& kern, double mu, double eps) {
  require(eps > 0, "sigma_eps2: eps must be positive");
  return eps * ou_stationary_stats(kern, mu).field_variance();
}

SpaceTimeField ou_evolve(const SpaceTimeField& eta, double mu, const RealField* y0) {
  ModeCoeffs c = mode_coeffs(eta.grid, mu, eta.dt);
  SpaceTimeField out(eta.grid, eta.dt, eta.nt());
  Eigen::ArrayXcd yhat;
  if (y0) {
    check_same_grid(eta.grid, y0->grid);
    yhat = to_spectral(*y0).data;
  } else {
    yhat = Eigen::ArrayXcd::Zero(eta.grid.size());
  }
  auto xc = c.x.cast<std::complex<double>>();
  auto Dc = c.D.cast<std::complex<double>>();
  for (int n = 0; n < eta.nt(); ++n) {
    SpectralField cur(eta.grid, yhat);
    out.frames.col(n) = to_physical(cur).data;
    if (n + 1 < eta.nt()) {
      Eigen::ArrayXcd fh = to_spectral(eta.frame(n)).data;
      yhat = xc * yhat + Dc * fh;
    }
  }
  return out;
}

SpaceTimeField stationary_Y(const SpaceTimeField& eta, double mu, uint64_t init_seed,
                            const NoiseKernel* kern) {
  NoiseKernel white;
  if (!kern) {
    white = build_kernel(NoiseSpec::white(), eta.grid, eta.dt);
    kern = &white;
  }
  check_same_grid(eta.grid, kern->grid);
  Eigen::ArrayXd V = stationary_mode_cov(*kern, mu, 0);
  Rng rng(derive_seed(init_seed, 0xA11CEull));
  Eigen::ArrayXcd ghat = to_spectral(gaussian_field(eta.grid, rng, 1.0)).data;
  Eigen::ArrayXcd y0hat =
      (V * double(eta.grid.size())).sqrt().cast<std::complex<double>>() * ghat;
  RealField y0 = to_physical(SpectralField(eta.grid, y0hat));
  return ou_evolve(eta, mu, &y0);
}

OuPath sample_stationary_ou(const NoiseSpec& spec, const Grid& g, double mu, double T,
                            double dt, uint64_t seed) {
  NoiseKernel kern = build_kernel(spec, g, dt);
  ModeCoeffs c = mode_coeffs(g, mu, dt);
  Eigen::ArrayXd V = stationary_mode_cov(kern, mu, 0);
  int K = kern.frames();
  require(dt > 0 && T >= dt, "sample_stationary_ou: need T >= dt > 0");
  int nt = int(std::lround(T / dt)) + 1;
  long N = g.size();
  double vol = std::pow(g.box, g.dim);

  // Initial state: contribution of the shared white-noise prefix plus an
  // independent remainder carrying the exact residual variance.
  std::vector<Eigen::ArrayXcd> win(K);
  auto what = [&](long j) { return to_spectral(white_frame(g, dt, seed, j)).data; };
  Eigen::ArrayXcd y0hat = Eigen::ArrayXcd::Zero(N);
  Eigen::ArrayXd var_a = Eigen::ArrayXd::Zero(N);
  Eigen::ArrayXd gamma(N);
  for (int j = -(K - 1); j <= -1; ++j) {
    Eigen::ArrayXcd wj = what(j);
    win[((j % K) + K) % K] = wj;
    gamma.setZero();
    int mtop = std::min(K - 1, -j - 1);
    for (int m = 0; m <= mtop; ++m) gamma += kern.tw[m] * c.x.pow(double(-j - m - 1));
    gamma *= c.D * kern.sm;
    y0hat += gamma.cast<std::complex<double>>() * wj;
    var_a += gamma.square() / (dt * vol);
  }
  Eigen::ArrayXd resid = (V - var_a).max(0.0);
  Rng rng(derive_seed(seed, 1ull << 40));
  Eigen::ArrayXcd ghat = to_spectral(gaussian_field(g, rng, 1.0)).data;
  y0hat += (resid * double(N)).sqrt().cast<std::complex<double>>() * ghat;

  OuPath path{SpaceTimeField(g, dt, nt), SpaceTimeField(g, dt, nt)};
  auto xc = c.x.cast<std::complex<double>>();
  auto Dc = c.D.cast<std::complex<double>>();
  auto smc = kern.sm.cast<std::complex<double>>();
  Eigen::ArrayXcd yhat = y0hat, acc(N);
  for (int n = 0; n < nt; ++n) {
    win[((n % K) + K) % K] = what(n);
    acc.setZero();
    for (int m = 0; m < K; ++m) acc += kern.tw[m] * win[(((n - m) % K) + K) % K];
    Eigen::ArrayXcd ehat = smc * acc;
    path.Y.frames.col(n) = to_physical(SpectralField(g, yhat)).data;
    path.eta.frames.col(n) = to_physical(SpectralField(g, ehat)).data;
    yhat = xc * yhat + Dc * ehat;
  }
  return path;
}

OuCalibration calibrate_ou(const NoiseSpec& spec, const Grid& g, double mu, double T,
                           double dt, uint64_t master, int count) {
  require(count >= 8, "calibrate_ou: need at least 8 ensemble members");
  NoiseKernel kern = build_kernel(spec, g, dt);
  OuCalibration cal;
  cal.claimed = ou_stationary_stats(kern, mu).field_variance();
  GaussianEnsemble ens = GaussianEnsemble::make(master, count);
  Eigen::ArrayXd xs(count);
  for (int r = 0; r < count; ++r)
    xs[r] = sample_stationary_ou(spec, g, mu, T, dt, ens.members[r]).Y.frames.square().mean();
  cal.estimated = xs.mean();
  cal.se = std::sqrt((xs - cal.estimated).square().sum() / (count - 1.0) / count);
  if (std::abs(cal.estimated - cal.claimed) > 5 * cal.se)
    throw calibration_error("ou variance bookkeeping disagrees with samples");
  return cal;
}

}  // namespace paralab
