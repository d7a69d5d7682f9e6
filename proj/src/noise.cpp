#include "paralab/noise.hpp"

#include <cmath>
#include <set>

#include "paralab/common.hpp"
#include "paralab/fft.hpp"
#include "paralab/rng.hpp"

namespace paralab {

namespace {

constexpr long kFrameStreamOffset = 1L << 20;

double bump(double s) {
  double s2 = s * s;
  return s2 < 1.0 ? std::exp(-1.0 / (1.0 - s2)) : 0.0;
}

}  // namespace

void NoiseSpec::validate() const {
  if (is_white()) return;
  require(eps > 0 && eps <= 1, "noise: eps must lie in (0, 1]");
  require(time_support > 0, "noise: time support must be positive");
  require(space_radius > 0, "noise: space radius must be positive");
}

double NoiseKernel::time_corr(int lag) const {
  int a = std::abs(lag);
  int K = frames();
  if (a >= K) return 0.0;
  double acc = 0;
  for (int m = 0; m + a < K; ++m) acc += tw[m] * tw[m + a];
  return acc;
}

Eigen::ArrayXd NoiseKernel::mode_autocov(int lag) const {
  double vol = std::pow(grid.box, grid.dim);
  return sm.square() * (time_corr(lag) / (dt * vol));
}

double NoiseKernel::cov_zero() const { return mode_autocov(0).sum(); }

RealField NoiseKernel::cov_field(int lag) const {
  SpectralField spec(grid);
  spec.data = mode_autocov(lag).cast<std::complex<double>>();
  return to_physical(spec);
}

NoiseKernel build_kernel(const NoiseSpec& spec, const Grid& g, double dt) {
  spec.validate();
  require(dt > 0, "noise kernel: dt must be positive");
  NoiseKernel kern;
  kern.grid = g;
  kern.dt = dt;
  kern.spec = spec;
  if (spec.is_white()) {
    kern.tw = Eigen::ArrayXd::Ones(1);
    kern.sm = Eigen::ArrayXd::Ones(g.size());
    return kern;
  }
  if (!(dt < 0.25) || !(g.spacing() < 0.25))
    throw resolution_error("noise kernel: need dt < 1/4 and spacing < 1/4");
  double ts = spec.time_support * spec.eps * spec.eps;
  double sr = spec.space_radius * spec.eps;
  require(sr < 0.5 * g.box, "noise kernel: space bump does not fit the box");

  int K = std::max(1, int(std::floor(ts / dt)) + 1);
  Eigen::ArrayXd q(K);
  for (int m = 0; m < K; ++m) q[m] = bump(2.0 * (m * dt) / ts - 1.0);
  double qs = q.sum();
  if (qs <= 0) {
    kern.tw = Eigen::ArrayXd::Ones(1);
  } else {
    kern.tw = q / qs;
  }

  Eigen::ArrayXd r = g.radius2().sqrt();
  RealField b(g);
  for (long i = 0; i < g.size(); ++i) b.data[i] = bump(r[i] / sr);
  double hd = std::pow(g.spacing(), g.dim);
  double bs = b.data.sum() * hd;
  b.data /= bs;
  SpectralField bhat = to_spectral(b);
  double vol = std::pow(g.box, g.dim);
  kern.sm = bhat.data.real() * vol;
  if ((bhat.data.imag() * vol).abs().maxCoeff() > 1e-10)
    throw accuracy_error("noise kernel: space bump transform is not real");
  return kern;
}

RealField white_frame(const Grid& g, double dt, uint64_t seed, long frame) {
  require(frame + kFrameStreamOffset >= 0, "white noise: frame index out of stream range");
  Rng rng(derive_seed(seed, std::uint64_t(frame + kFrameStreamOffset)));
  double hd = std::pow(g.spacing(), g.dim);
  return gaussian_field(g, rng, 1.0 / std::sqrt(dt * hd));
}

SpaceTimeField sample_white(const Grid& g, double T, double dt, uint64_t seed) {
  require(dt > 0 && T >= dt, "sample_white: need T >= dt > 0");
  int nt = int(std::lround(T / dt)) + 1;
  SpaceTimeField out(g, dt, nt);
  for (int n = 0; n < nt; ++n) out.frames.col(n) = white_frame(g, dt, seed, n).data;
  return out;
}

SpaceTimeField sample_eta(const NoiseSpec& spec, const Grid& g, double T, double dt,
                          uint64_t seed) {
  if (spec.is_white()) return sample_white(g, T, dt, seed);
  NoiseKernel kern = build_kernel(spec, g, dt);
  int K = kern.frames();
  require(K <= kFrameStreamOffset, "sample_eta: kernel window exceeds stream range");
  require(dt > 0 && T >= dt, "sample_eta: need T >= dt > 0");
  int nt = int(std::lround(T / dt)) + 1;
  SpaceTimeField out(g, dt, nt);

  std::vector<Eigen::ArrayXcd> win(K);
  auto what = [&](long j) { return to_spectral(white_frame(g, dt, seed, j)).data; };
  auto slot = [K](long j) { return size_t(((j % K) + K) % K); };
  for (int j = -(K - 1); j <= -1; ++j) win[slot(j)] = what(j);
  Eigen::ArrayXcd acc(g.size());
  auto smc = kern.sm.cast<std::complex<double>>();
  for (int n = 0; n < nt; ++n) {
    win[slot(n)] = what(n);  // replaces the expired frame n - K
    acc.setZero();
    for (int m = 0; m < K; ++m) acc += kern.tw[m] * win[slot(n - m)];
    SpectralField eh(g, (smc * acc).eval());
    out.frames.col(n) = to_physical(eh).data;
  }
  return out;
}

SpaceTimeField rescale_eta(const SpaceTimeField& eta, double eps) {
  require(eps > 0 && eps <= 1, "rescale_eta: eps must lie in (0, 1]");
  Grid g2(eta.grid.dim, eta.grid.n, eta.grid.box * eps);
  SpaceTimeField out(g2, eta.dt * eps * eps, eta.nt());
  double amp = std::pow(eps, -0.5 * (eta.grid.dim + 2));
  out.frames = amp * eta.frames;
  return out;
}

SpaceTimeField rescale_eta(const SpaceTimeField& eta, double eps, double target_T,
                           double target_dt) {
  require(eps > 0 && eps <= 1, "rescale_eta: eps must lie in (0, 1]");
  require(target_dt > 0 && target_T >= target_dt, "rescale_eta: need T >= dt > 0");
  double horizon = eps * eps * eta.horizon();
  if (target_T > horizon * (1 + 1e-12))
    throw bounds_error("rescale_eta: requested horizon exceeds the rescaled source");
  Grid g2(eta.grid.dim, eta.grid.n, eta.grid.box * eps);
  int nt = int(std::lround(target_T / target_dt)) + 1;
  SpaceTimeField out(g2, target_dt, nt);
  double amp = std::pow(eps, -0.5 * (eta.grid.dim + 2));
  double src_dt = eps * eps * eta.dt;
  for (int n = 0; n < nt; ++n) {
    double s = n * target_dt / src_dt;
    int i0 = std::min(int(std::floor(s)), eta.nt() - 1);
    int i1 = std::min(i0 + 1, eta.nt() - 1);
    double w = s - i0;
    out.frames.col(n) = amp * ((1 - w) * eta.frames.col(i0) + w * eta.frames.col(i1));
  }
  return out;
}

GaussianEnsemble GaussianEnsemble::make(uint64_t master, int count) {
  require(count >= 1, "ensemble: count must be positive");
  GaussianEnsemble e;
  e.master_seed = master;
  std::set<uint64_t> seen;
  uint64_t salt = 0;
  for (int i = 0; i < count; ++i) {
    uint64_t s = derive_seed(master, uint64_t(i) + salt);
    while (!seen.insert(s).second) s = derive_seed(master, uint64_t(i) + (++salt));
    e.members.push_back(s);
  }
  return e;
}

json GaussianEnsemble::manifest() const {
  json j;
  j["master_seed"] = master_seed;
  j["count"] = members.size();
  j["members"] = members;
  return j;
}

NoiseCalibration calibrate_noise(const NoiseSpec& spec, const Grid& g, double T, double dt,
                                 uint64_t master, int count) {
  require(count >= 8, "calibrate_noise: need at least 8 ensemble members");
  NoiseKernel kern = build_kernel(spec, g, dt);
  NoiseCalibration cal;
  cal.claimed = kern.cov_zero();
  GaussianEnsemble ens = GaussianEnsemble::make(master, count);
  Eigen::ArrayXd xs(count);
  for (int r = 0; r < count; ++r)
    xs[r] = sample_eta(spec, g, T, dt, ens.members[r]).frames.square().mean();
  cal.estimated = xs.mean();
  cal.se = std::sqrt((xs - cal.estimated).square().sum() / (count - 1.0) / count);
  if (std::abs(cal.estimated - cal.claimed) > 5 * cal.se)
    throw calibration_error("noise variance bookkeeping disagrees with samples");
  return cal;
}

}  // namespace paralab
