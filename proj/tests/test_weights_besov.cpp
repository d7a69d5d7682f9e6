#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "paralab/norms.hpp"
#include "paralab/params.hpp"
#include "paralab/rng.hpp"
#include "paralab/spectral.hpp"

using namespace paralab;

namespace {

RealField cosine_mode(const Grid& g, int k0) {
  double k = 2.0 * pi / g.box * k0;
  return sample(g, [&](const std::array<double, 3>& x) { return std::cos(k * x[0]); });
}

// Integer wavenumber inside the flat window of block j: theta_j == 1 there.
int flat_mode(int j) {
  double lo = 4.0 / 3.0 * std::pow(2.0, j), hi = 1.5 * std::pow(2.0, j);
  int k = int(std::ceil(lo - 1e-9));
  if (k > hi + 1e-9) throw std::runtime_error("no flat integer mode at this block");
  return k;
}

}  // namespace

TEST_CASE("weight algebra: powers compose exactly") {
  Grid g(2, 16, 8.0);
  Weight wa(1.0, 0.7), wb(1.0, -0.3);
  RealField fa = wa.field(g), fb = wb.field(g), fc = (wa * wb).field(g);
  CHECK(((fa.data * fb.data - fc.data).abs() / fc.data).maxCoeff() <= 1e-13);
  CHECK_THROWS_AS(wa * Weight(2.0, 0.1), dimension_error);
  CHECK_THROWS_AS(Weight(0.0, 1.0), std::domain_error);
  RealField f1 = wa.pow(2.0).field(g);
  CHECK(((f1.data - fa.data.square()).abs() / f1.data).maxCoeff() <= 1e-13);
  // center value 1, decays outward
  long center = g.encode({g.n / 2, g.n / 2, 0});
  CHECK(fa.data[center] == doctest::Approx(1.0));
  CHECK(fa.data[0] < fa.data[center]);
}

TEST_CASE("dyadic partition: exact unity, supports, disjointness") {
  for (auto [dim, n] : {std::pair{1, 64}, {2, 32}, {3, 16}}) {
    Grid g(dim, n, 5.0);
    DyadicPartition P(g);
    CHECK(P.jmax() == int(std::log2(n / 2)) - 1);

    Eigen::ArrayXd total = Eigen::ArrayXd::Zero(g.size());
    for (int j = -1; j <= P.jmax(); ++j) total += P.theta(j);
    CHECK((total - 1.0).abs().maxCoeff() <= 1e-12);

    Eigen::ArrayXd ks = g.mode_ksup();
    for (int j = -1; j <= P.jmax(); ++j) {
      double lo = (j < 0) ? 0.0 : 0.75 * std::pow(2.0, j);
      double hi = (j < 0) ? 4.0 / 3.0 : 8.0 / 3.0 * std::pow(2.0, j);
      for (long i = 0; i < g.size(); ++i)
        if (P.theta(j)[i] != 0.0) {
          CHECK(ks[i] >= lo - 1e-12);
          CHECK(ks[i] <= hi + 1e-12);
        }
    }
    for (int i = -1; i <= P.jmax(); ++i)
      for (int j = i + 2; j <= P.jmax(); ++j)
        CHECK((P.theta(i) * P.theta(j)).abs().maxCoeff() == 0.0);

    CHECK_THROWS_AS(P.theta(P.jmax() + 1), index_error);
    CHECK_THROWS_AS(P.theta(-2), index_error);
    CHECK((P.lowpass(P.jmax()) - 1.0).abs().maxCoeff() <= 1e-12);
    CHECK(P.lowpass(-2).abs().maxCoeff() == 0.0);
  }
}

TEST_CASE("block reconstruction and single-mode capture") {
  Grid g(1, 128, 4.0);
  const DyadicPartition& P = partition_for(g);
  Rng rng(5);
  RealField f = gaussian_field(g, rng, 1.0);
  Eigen::ArrayXd sum = Eigen::ArrayXd::Zero(g.size());
  for (int j = -1; j <= P.jmax(); ++j) sum += lp_block(f, j, P).data;
  CHECK((sum - f.data).abs().maxCoeff() <= 1e-10 * f.data.abs().maxCoeff());

  int j = 3, k0 = flat_mode(j);
  RealField mode = cosine_mode(g, k0);
  RealField blk = lp_block(mode, j, P);
  CHECK((blk.data - mode.data).abs().maxCoeff() <= 1e-12);
  for (int jo = -1; jo <= P.jmax(); ++jo) {
    if (jo == j) continue;
    CHECK(lp_block(mode, jo, P).data.abs().maxCoeff() <= 1e-12);
  }

  BlockDecomp bd = decompose_blocks(f, P);
  CHECK((bd.slow[size_t(P.jmax() + 1)] - f.data).abs().maxCoeff() <= 1e-10);
}

TEST_CASE("besov norm scales like 2^{j alpha} on single modes") {
  Grid g(1, 256, 4.0);
  Weight w(1.0, 0.25);
  for (double alpha : {-0.6, 0.0, 0.9}) {
    for (int j : {1, 3, 5}) {
      RealField mode = cosine_mode(g, flat_mode(j));
      double v = besov_norm(mode, alpha, w);
      double target = std::pow(2.0, alpha * j);
      CHECK(v >= 0.5 * target);
      CHECK(v <= 2.0 * target);
    }
  }
}

TEST_CASE("holder norm: domain, hand oracle, besov comparability") {
  Grid g(1, 8, 4.0);
  Weight w(1.0, 0.3);
  RealField f(g);
  for (int i = 0; i < 8; ++i) f.data[i] = std::sin(1.7 * i) + 0.2 * i;

  CHECK_THROWS_AS(holder_norm(f, 0.0, w), std::domain_error);
  CHECK_THROWS_AS(holder_norm(f, 1.0, w), std::domain_error);

  // brute-force oracle with an independent modular index walk
  double alpha = 0.4, h = g.spacing();
  Eigen::ArrayXd wf = w.field(g).data;
  double want = (wf * f.data).abs().maxCoeff();
  for (int r = 1; r <= 2; ++r) {
    double d = 0;
    for (int i = 0; i < 8; ++i) d = std::max(d, wf[i] * std::abs(f.data[(i + r) % 8] - f.data[i]));
    want = std::max(want, d / std::pow(r * h, alpha));
  }
  CHECK(holder_norm(f, alpha, w) == doctest::Approx(want).epsilon(1e-13));

  // spacing > 1 leaves no admissible lattice shift
  Grid coarse(1, 8, 16.0);
  RealField fc(coarse);
  CHECK_THROWS_AS(holder_norm(fc, 0.5, Weight(1.0, 0.0)), resolution_error);

  // comparability with the block-sum norm on a mixed-regularity ensemble
  Grid g2(1, 128, 4.0);
  Weight w2(1.0, 0.2);
  for (std::uint64_t s = 0; s < 6; ++s) {
    Rng rng(100 + s);
    RealField rough = gaussian_field(g2, rng, 1.0);
    RealField fld = heat_propagate(rough, 0.002 * double(s + 1), 1.0);
    double hn = holder_norm(fld, 0.35, w2);
    double bn = besov_norm(fld, 0.35, w2) + linf_weighted(fld, w2);
    CHECK(hn / bn >= 1.0 / 8.0);
    CHECK(hn / bn <= 8.0);
  }
}

TEST_CASE("spacetime norm: linear ramp has exact sqrt(T) time-holder norm") {
  Grid g(1, 32, 4.0);
  Weight w(1.0, 0.5);
  double dt = 0.01;
  int nt = 65;
  RealField prof = cosine_mode(g, 2);
  SpaceTimeField f(g, dt, nt);
  for (int n = 0; n < nt; ++n) f.frames.col(n) = (n * dt) * prof.data;

  NormReport rep = spacetime_norm(f, "linf", 0.0, 0.5, w);
  double T = dt * (nt - 1);
  double base = linf_weighted(prof, w);
  CHECK(rep.holder_value == doctest::Approx(std::sqrt(T) * base).epsilon(1e-12));
  CHECK(rep.sup_value == doctest::Approx(T * base).epsilon(1e-12));
  json j = rep.to_json();
  CHECK(j["family"] == "linf");
  CHECK(double(j["total"]) == doctest::Approx(rep.sup_value + rep.holder_value));
}

TEST_CASE("interpolation gap: exponent domain and single-mode sharpness") {
  Grid g(1, 256, 4.0);
  double kappa = 0.3;
  SpaceTimeField psi(g, 0.1, 3);
  RealField mode = cosine_mode(g, flat_mode(4));
  for (int n = 0; n < 3; ++n) psi.frames.col(n) = mode.data;

  CHECK_THROWS_AS(interpolation_gap(psi, -0.1, kappa, Weight(1, 0), Weight(1, 0)),
                  std::domain_error);
  CHECK_THROWS_AS(interpolation_gap(psi, 2.0 - kappa + 0.01, kappa, Weight(1, 0), Weight(1, 0)),
                  std::domain_error);
  CHECK_THROWS_AS(interpolation_gap(psi, 0.5, 1.5, Weight(1, 0), Weight(1, 0)), std::domain_error);

  for (double alpha : {0.0, 0.5, 1.2, 1.7}) {
    GapReport rep = interpolation_gap(psi, alpha, kappa, Weight(1.0, 0.0), Weight(1.0, 0.0));
    CHECK(rep.theta == doctest::Approx(alpha / (2.0 - kappa)));
    CHECK(rep.ratio >= 0.5);
    CHECK(rep.ratio <= 2.0);
  }

  // nontrivial weights with matched geometric mean
  GapReport rep = interpolation_gap(psi, 0.8, kappa, Weight(1.0, 0.4), Weight(1.0, 0.1));
  CHECK(rep.ratio >= 0.25);
  CHECK(rep.ratio <= 4.0);
  CHECK(rep.to_json().contains("ratio"));
}

TEST_CASE("interpolation gap: bounded ratio on a mixed ensemble") {
  Grid g(1, 128, 8.0);
  double kappa = 0.3;
  double worst = 0;
  for (std::uint64_t s = 0; s < 10; ++s) {
    Rng rng(300 + s);
    SpaceTimeField psi(g, 0.05, 4);
    RealField base = gaussian_field(g, rng, 1.0);
    for (int n = 0; n < 4; ++n)
      psi.frames.col(n) = heat_propagate(base, 0.001 + 0.004 * n, 1.0).data;
    GapReport rep = interpolation_gap(psi, 0.9, kappa, Weight(1.0, 0.3), Weight(1.0, 0.1));
    worst = std::max(worst, rep.ratio);
  }
  // frozen regression bound for the interpolation constant on this ensemble
  CHECK(worst <= 4.0);
}

TEST_CASE("analysis params: defaults valid, each constraint enforced") {
  AnalysisParams p = default_params();

  auto expect_bad = [](AnalysisParams q) { CHECK_THROWS_AS(q.validate(), config_error); };

  {
    AnalysisParams q = p;
    q.m = 6;
    expect_bad(q);
  }
  {
    AnalysisParams q = p;
    q.m = 3;
    expect_bad(q);
  }
  {
    AnalysisParams q = p;
    q.m1 = 3;
    expect_bad(q);
  }
  {
    AnalysisParams q = p;
    q.m1 = q.m + 1;
    expect_bad(q);
  }
  {
    AnalysisParams q = p;
    q.alpha = 0.07;  // 3/(10 m) = 0.06
    expect_bad(q);
  }
  {
    AnalysisParams q = p;
    q.kappa = q.alpha + 0.01;
    expect_bad(q);
  }
  {
    AnalysisParams q = p;
    q.gamma = 0.01;  // breaks gamma = alpha - kappa
    expect_bad(q);
  }
  {
    AnalysisParams q = p;
    q.eps_exp = q.gamma;
    expect_bad(q);
  }
  {
    AnalysisParams q = p;
    q.kappa = 0.03;
    q.gamma = q.alpha - q.kappa;  // gamma + eps_exp = 0.023 > 4 alpha^2 = 0.01
    expect_bad(q);
  }
  {
    AnalysisParams q = p;
    q.gamma1 = 0.19;
    expect_bad(q);
  }
  {
    AnalysisParams q = p;
    q.gamma_prime = q.gamma1 + 0.01;
    expect_bad(q);
  }
  {
    AnalysisParams q = p;
    q.mu = 0.0;
    expect_bad(q);
  }
  {
    AnalysisParams q = p;
    q.delta = 1.0;
    expect_bad(q);
  }
}
