#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "paralab/localize.hpp"
#include "paralab/mollify.hpp"
#include "paralab/norms.hpp"
#include "paralab/para.hpp"
#include "paralab/rng.hpp"
#include "paralab/spectral.hpp"

using namespace paralab;

namespace {

RealField cosine_mode(const Grid& g, int k0, int axis = 0) {
  double k = 2.0 * pi / g.box * k0;
  return sample(g, [&](const std::array<double, 3>& x) { return std::cos(k * x[axis]); });
}

}  // namespace

TEST_CASE("bony decomposition reconstructs the product") {
  std::vector<Grid> grids{Grid(1, 32, 2.0), Grid(1, 64, 4.0), Grid(2, 32, 4.0), Grid(3, 16, 4.0)};
  for (const Grid& g : grids) {
    for (std::uint64_t s = 0; s < 8; ++s) {
      Rng rng(10 * s + g.dim);
      RealField f = gaussian_field(g, rng, 1.0);
      RealField h = gaussian_field(g, rng, 1.0);
      Eigen::ArrayXd prod = f.data * h.data;
      Eigen::ArrayXd sum = para_lt(f, h).data + resonant(f, h).data + para_gt(f, h).data;
      CHECK((sum - prod).abs().maxCoeff() <= 1e-10 * prod.abs().maxCoeff());
    }
  }
}

TEST_CASE("composite half-products match their definitions") {
  Grid g(1, 64, 4.0);
  Rng rng(77);
  RealField f = gaussian_field(g, rng, 1.0);
  RealField h = gaussian_field(g, rng, 1.0);
  CHECK((para_leq(f, h).data - (para_lt(f, h).data + resonant(f, h).data)).abs().maxCoeff() <=
        1e-13);
  CHECK((para_geq(f, h).data - (para_gt(f, h).data + resonant(f, h).data)).abs().maxCoeff() <=
        1e-13);
  CHECK((resonant(f, h).data - resonant(h, f).data).abs().maxCoeff() <= 1e-13);
  Grid g2(1, 32, 4.0);
  RealField other(g2);
  CHECK_THROWS_AS(para_lt(f, RealField(g2)), dimension_error);
}

TEST_CASE("separated spectral supports: low<high is the whole product") {
  Grid g(1, 512, 2.0);
  RealField f = cosine_mode(g, 6);     // inside block 2's flat window
  RealField h = cosine_mode(g, 180);   // inside the top block (j = 7)
  Eigen::ArrayXd prod = f.data * h.data;
  CHECK((para_lt(f, h).data - prod).abs().maxCoeff() <= 1e-10);
  CHECK(resonant(f, h).data.abs().maxCoeff() <= 1e-10);
  CHECK(para_gt(f, h).data.abs().maxCoeff() <= 1e-10);
}

TEST_CASE("constant low factor: 1<g drops the two lowest blocks") {
  Grid g(1, 128, 4.0);
  Rng rng(9);
  RealField h = gaussian_field(g, rng, 1.0);
  RealField one(g);
  one.data.setConstant(1.0);
  const DyadicPartition& P = partition_for(g);
  Eigen::ArrayXd want = h.data - lp_block(h, -1, P).data - lp_block(h, 0, P).data;
  CHECK((para_lt(one, h).data - want).abs().maxCoeff() <= 1e-12 * h.data.abs().maxCoeff());
}

TEST_CASE("paraproduct norm bound: low regularity carries over") {
  Grid g(1, 128, 8.0);
  Weight w1(1.0, 0.2), w2(1.0, 0.15);
  double beta = -0.4;
  double worst = 0;
  for (std::uint64_t s = 0; s < 10; ++s) {
    Rng rng(400 + s);
    RealField f = heat_propagate(gaussian_field(g, rng, 1.0), 0.01, 1.0);
    RealField h = gaussian_field(g, rng, 1.0);
    double lhs = besov_norm(para_lt(f, h), beta, w1 * w2);
    double rhs = linf_weighted(f, w1) * besov_norm(h, beta, w2);
    if (rhs > 0) worst = std::max(worst, lhs / rhs);
  }
  // frozen regression constant for the low-high bound on this ensemble
  CHECK(worst <= 3.0);
}

TEST_CASE("commutator: trilinear bound with the expected regularity gain") {
  Grid g(1, 128, 8.0);
  Weight w(1.0, 0.1);
  double alpha = 0.6, beta = -0.3, gamma = -0.2;  // alpha+beta+gamma = 0.1 > 0
  double worst = 0;
  for (std::uint64_t s = 0; s < 8; ++s) {
    Rng rng(500 + s);
    RealField f = heat_propagate(gaussian_field(g, rng, 1.0), 0.02, 1.0);
    RealField h = gaussian_field(g, rng, 1.0);
    RealField k = gaussian_field(g, rng, 1.0);
    RealField c = commutator(f, h, k);
    double lhs = besov_norm(c, alpha + beta + gamma, w.pow(3.0));
    double rhs = holder_norm(f, alpha, w) * besov_norm(h, beta, w) * besov_norm(k, gamma, w);
    if (rhs > 0) worst = std::max(worst, lhs / rhs);
  }
  CHECK(worst <= 2.0);  // frozen regression constant

  // the resonant product of the paraproduct alone obeys no such bound:
  // the commutator must genuinely cancel, so it is much smaller than either term
  Rng rng(55);
  RealField f = heat_propagate(gaussian_field(g, rng, 1.0), 0.05, 1.0);
  RealField h = gaussian_field(g, rng, 1.0);
  RealField k = gaussian_field(g, rng, 1.0);
  double com_sz = commutator(f, h, k).data.abs().maxCoeff();
  double raw_sz = resonant(para_lt(f, h), k).data.abs().maxCoeff();
  CHECK(com_sz < 0.5 * raw_sz);
}

TEST_CASE("mollifier: unit mass, compact support") {
  Mollifier q;
  CHECK(std::abs(q.mass_check() - 1.0) <= 1e-10);
  CHECK(q(1.0) == 0.0);
  CHECK(q(-1.0) == 0.0);
  CHECK(q(2.0) == 0.0);
  CHECK(q(0.0) > 0.0);
  CHECK(q(0.5) == q(-0.5));
}

TEST_CASE("time-smoothed paraproduct equals the plain one for static fields") {
  Grid g(1, 64, 2.0);
  double dt = 0.01;
  int nt = 40;
  Rng rng(21);
  RealField f0 = gaussian_field(g, rng, 1.0);
  SpaceTimeField f(g, dt, nt), h(g, dt, nt);
  for (int n = 0; n < nt; ++n) {
    f.frames.col(n) = f0.data;
    h.frames.col(n) = gaussian_field(g, rng, 1.0).data;
  }
  ModifiedPara mp = modified_para_lt(f, h);
  for (int n = 0; n < nt; ++n) {
    Eigen::ArrayXd want = para_lt(f.frame(n), h.frame(n)).data;
    CHECK((mp.field.frames.col(n) - want).abs().maxCoeff() <=
          1e-10 * (1.0 + want.abs().maxCoeff()));
  }
}

TEST_CASE("time-smoothed paraproduct: kernel degeneration is flagged") {
  Grid g(1, 64, 2.0);
  // dt = 0.02 > 2^{-2j} for j >= 3
  SpaceTimeField f(g, 0.02, 12), h(g, 0.02, 12);
  Rng rng(22);
  for (int n = 0; n < 12; ++n) {
    f.frames.col(n) = gaussian_field(g, rng, 1.0).data;
    h.frames.col(n) = gaussian_field(g, rng, 1.0).data;
  }
  ModifiedPara mp = modified_para_lt(f, h);
  const DyadicPartition& P = partition_for(g);
  std::vector<int> want;
  for (int j = 1; j <= P.jmax(); ++j)
    if (std::pow(2.0, -2.0 * j) < 0.02) want.push_back(j);
  CHECK(mp.degenerate_blocks == want);
}

TEST_CASE("time-smoothed paraproduct: smoothing bias shrinks like the block scale") {
  Grid g(1, 128, 2.0);
  double dt = 1.0 / 512.0;
  int nt = 257;  // T = 0.5
  Rng rng(23);
  RealField prof = gaussian_field(g, rng, 1.0);
  RealField hf = gaussian_field(g, rng, 1.0);
  SpaceTimeField f(g, dt, nt), h(g, dt, nt);
  for (int n = 0; n < nt; ++n) {
    double t = n * dt;
    f.frames.col(n) = (t * t) * prof.data;  // curvature makes the bias visible
    h.frames.col(n) = hf.data;
  }
  ModifiedPara mp = modified_para_lt(f, h);
  const DyadicPartition& P = partition_for(g);
  int mid = nt / 2;

  std::vector<double> errs;
  for (int j = 1; j <= 3; ++j) {
    if (std::pow(2.0, -2.0 * j) < dt) break;
    // isolate block j's contribution by restricting h to that block
    SpaceTimeField hj(g, dt, nt);
    RealField hblk = lp_block(hf, j, P);
    for (int n = 0; n < nt; ++n) hj.frames.col(n) = hblk.data;
    ModifiedPara mj = modified_para_lt(f, hj);
    Eigen::ArrayXd plain = para_lt(f.frame(mid), hj.frame(mid)).data;
    errs.push_back((mj.field.frames.col(mid) - plain).abs().maxCoeff());
  }
  REQUIRE(errs.size() >= 3);
  // kernel width 2^{-2j} gives an O(width^2) = O(2^{-4j}) bias per block
  CHECK(errs[1] <= 0.3 * errs[0] + 1e-12);
  CHECK(errs[2] <= 0.3 * errs[1] + 1e-12);
}

TEST_CASE("time-smoothed paraproduct: clamped kernel at t = 0") {
  Grid g(1, 64, 2.0);
  double dt = 0.005;
  int nt = 120;
  RealField prof = cosine_mode(g, 1);
  SpaceTimeField f(g, dt, nt), h(g, dt, nt);
  Rng rng(24);
  RealField hf = gaussian_field(g, rng, 1.0);
  for (int n = 0; n < nt; ++n) {
    f.frames.col(n) = (n * dt) * prof.data;
    h.frames.col(n) = hf.data;
  }
  Mollifier q;
  ModifiedPara mp = modified_para_lt(f, h, q);

  // hand-built trapezoid for block 1 at t = 0: nodes below 0 clamp to frame 0
  const DyadicPartition& P = partition_for(g);
  double width = std::pow(2.0, -2.0);
  int m1 = int(std::ceil(width / dt));
  Eigen::ArrayXd smoothed = Eigen::ArrayXd::Zero(g.size());
  double wsum = 0;
  for (int m = -m1; m <= m1; ++m) {
    double wgt = q((-m * dt) / width);
    if (wgt == 0.0) continue;
    if (m == -m1 || m == m1) wgt *= 0.5;
    int mc = std::max(0, m);
    smoothed += wgt * f.frames.col(mc);
    wsum += wgt;
  }
  smoothed /= wsum;
  // clamping only adds mass at f(0) = 0, so the smoothed ramp at t=0 is
  // strictly positive where prof is positive
  long center = g.encode({g.n / 2, 0, 0});
  CHECK(smoothed[center] > 0.0);

  // a mode inside block 1's flat window keeps the block sum to the j = 1 term
  RealField mode = cosine_mode(g, 3);
  SpaceTimeField h1(g, dt, nt);
  for (int n = 0; n < nt; ++n) h1.frames.col(n) = mode.data;
  ModifiedPara m1p = modified_para_lt(f, h1, q);
  Eigen::ArrayXd want = lp_block(RealField(g, smoothed), -1, P).data * mode.data;
  CHECK((m1p.field.frames.col(0) - want).abs().maxCoeff() <= 1e-12);
}

TEST_CASE("localization: the two parts sum to the identity") {
  Grid g(1, 256, 16.0);
  double dt = 0.05;
  int nt = 30;
  Localizer loc(g, dt, nt);
  Rng rng(31);
  SpaceTimeField f(g, dt, nt);
  for (int n = 0; n < nt; ++n) f.frames.col(n) = gaussian_field(g, rng, 1.0).data;

  // shells partition space and time exactly
  Eigen::ArrayXd wsum = Eigen::ArrayXd::Zero(g.size());
  for (const auto& s : loc.shells) wsum += s;
  CHECK((wsum - 1.0).abs().maxCoeff() <= 1e-12);
  for (const auto& v : loc.tshells) {
    double t = 0;
    for (double x : v) t += x;
    CHECK(std::abs(t - 1.0) <= 1e-12);
  }

  for (int L : {0, 2, 5}) {
    SpaceTimeField hi = loc.highpass_part(f, L);
    SpaceTimeField lo = loc.lowpass_part(f, L);
    double scale = f.frames.abs().maxCoeff();
    CHECK((hi.frames + lo.frames - f.frames).abs().maxCoeff() <= 1e-10 * scale);
  }

  CHECK(loc.level(3, -1, -1) == 2);
  CHECK(loc.level(3, 2, 1) == 5);
}

TEST_CASE("localization: high part decays geometrically in the cutoff") {
  Grid g(1, 512, 64.0);
  double dt = 0.1;
  int nt = 11;
  Localizer loc(g, dt, nt);
  Rng rng(32);
  SpaceTimeField f(g, dt, nt);
  for (int n = 0; n < nt; ++n) f.frames.col(n) = gaussian_field(g, rng, 1.0).data;

  double a = 1.0, delta = 0.5, alpha = 0.55;
  Weight lhs_w(1.0, -a), rhs_w(1.0, -(a - delta));
  double rhs = 0;
  for (int n = 0; n < nt; ++n)
    rhs = std::max(rhs, besov_norm(f.frame(n), -alpha, rhs_w));

  std::vector<double> logr;
  for (int L = 0; L <= 6; ++L) {
    SpaceTimeField hi = loc.highpass_part(f, L);
    double lhs = 0;
    for (int n = 0; n < nt; ++n)
      lhs = std::max(lhs, besov_norm(hi.frame(n), -alpha - delta, lhs_w));
    logr.push_back(std::log2(lhs / rhs));
  }
  // least-squares slope of log2(ratio) against L
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = int(logr.size());
  for (int i = 0; i < n; ++i) {
    sx += i;
    sy += logr[size_t(i)];
    sxx += double(i) * i;
    sxy += i * logr[size_t(i)];
  }
  double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  CHECK(slope <= -0.8 * delta);
}
