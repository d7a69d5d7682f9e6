#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "paralab/fft.hpp"
#include "paralab/io.hpp"
#include "paralab/quad.hpp"
#include "paralab/rng.hpp"
#include "paralab/spectral.hpp"

using namespace paralab;

namespace {

RealField random_field(const Grid& g, std::uint64_t seed) {
  Rng rng(seed);
  return gaussian_field(g, rng, 1.0);
}

}  // namespace

TEST_CASE("grid validation and index conventions") {
  CHECK_THROWS_AS(Grid(0, 8, 1.0), dimension_error);
  CHECK_THROWS_AS(Grid(4, 8, 1.0), dimension_error);
  CHECK_THROWS_AS(Grid(1, 7, 1.0), std::domain_error);
  CHECK_THROWS_AS(Grid(1, 4, 1.0), std::domain_error);
  CHECK_THROWS_AS(Grid(1, 8, 0.0), std::domain_error);

  Grid g(1, 8, 2.0);
  CHECK(g.size() == 8);
  CHECK(g.spacing() == doctest::Approx(0.25));
  CHECK(g.coord(0) == doctest::Approx(-1.0));
  int kints[8] = {0, 1, 2, 3, 4, -3, -2, -1};
  for (int i = 0; i < 8; ++i) CHECK(g.kint(i) == kints[i]);

  Grid g3(3, 16, 4.0);
  CHECK(g3.size() == 16 * 16 * 16);
  auto m = g3.decode(g3.encode({3, 7, 11}));
  CHECK(m[0] == 3);
  CHECK(m[1] == 7);
  CHECK(m[2] == 11);
}

TEST_CASE("field constructors enforce geometry") {
  Grid g(2, 8, 1.0);
  CHECK_THROWS_AS(RealField(g, Eigen::ArrayXd::Zero(17)), dimension_error);
  Grid h(1, 8, 1.0);
  CHECK_THROWS_AS(check_same_grid(g, h), dimension_error);
}

TEST_CASE("fft roundtrip and Parseval") {
  for (auto [dim, n] : {std::pair{1, 64}, {2, 32}, {3, 16}}) {
    Grid g(dim, n, 3.0);
    RealField f = random_field(g, 42 + dim);
    double scale = f.data.abs().maxCoeff();
    RealField back = to_physical(to_spectral(f));
    CHECK((back.data - f.data).abs().maxCoeff() <= 1e-12 * scale);

    SpectralField fh = to_spectral(f);
    double phys = (f.data * f.data).sum() / double(g.size());
    double spec = fh.data.abs2().sum();
    CHECK(phys == doctest::Approx(spec).epsilon(1e-10));
  }
}

TEST_CASE("fft amplitude convention: single cosine mode") {
  Grid g(1, 32, 2.0);
  double k = 2.0 * pi / g.box * 3.0;
  RealField f = sample(g, [&](const std::array<double, 3>& x) { return std::cos(k * x[0]); });
  SpectralField fh = to_spectral(f);
  for (int i = 0; i < g.n; ++i) {
    double want = (std::abs(g.kint(i)) == 3) ? 0.5 : 0.0;
    CHECK(std::abs(fh.data[i].real() - want) <= 1e-12);
    CHECK(std::abs(fh.data[i].imag()) <= 1e-12);
  }
}

TEST_CASE("to_physical rejects non-Hermitian spectra") {
  Grid g(1, 16, 1.0);
  SpectralField s(g);
  s.data[1] = {0.0, 1.0};
  CHECK_THROWS_AS(to_physical(s), accuracy_error);
}

TEST_CASE("heat propagation: exact mode decay and semigroup") {
  Grid g(2, 32, 4.0);
  double mu = 1.3;
  RealField f = random_field(g, 7);
  CHECK_THROWS_AS(heat_propagate(f, -0.1, mu), std::domain_error);

  RealField one(g);
  one.data.setConstant(2.5);
  RealField ht = heat_propagate(one, 0.7, mu);
  CHECK((ht.data - 2.5 * std::exp(-0.7 * mu)).abs().maxCoeff() <= 1e-12);

  double kx = 2.0 * pi / g.box * 2.0, ky = 2.0 * pi / g.box * 5.0;
  RealField mode = sample(g, [&](const std::array<double, 3>& x) {
    return std::sin(kx * x[0]) * std::cos(ky * x[1]);
  });
  double t = 0.31;
  RealField hm = heat_propagate(mode, t, mu);
  double fac = std::exp(-t * (kx * kx + ky * ky + mu));
  CHECK((hm.data - fac * mode.data).abs().maxCoeff() <= 1e-12 * fac + 1e-14);

  RealField a = heat_propagate(heat_propagate(f, 0.2, mu), 0.3, mu);
  RealField b = heat_propagate(f, 0.5, mu);
  CHECK((a.data - b.data).abs().maxCoeff() <= 1e-12 * f.data.abs().maxCoeff());
}

TEST_CASE("duhamel: constant forcing is integrated exactly") {
  Grid g(1, 16, 2.0);
  double mu = 1.0, dt = 0.05;
  int nt = 41;
  SpaceTimeField force(g, dt, nt);
  force.frames.setConstant(3.0);
  SpaceTimeField v = duhamel_solve(force, mu);
  for (int n = 0; n < nt; ++n) {
    double want = 3.0 * (1.0 - std::exp(-mu * v.time(n))) / mu;
    CHECK((v.frames.col(n) - want).abs().maxCoeff() <= 1e-12 * (1.0 + want));
  }
  CHECK(v.frame(0).data.abs().maxCoeff() == 0.0);
}

TEST_CASE("duhamel: per-mode recursion oracle with time-varying forcing") {
  Grid g(1, 16, 2.0);
  double mu = 0.8, dt = 0.02;
  int nt = 60;
  double k = 2.0 * pi / g.box * 4.0;
  RealField mode = sample(g, [&](const std::array<double, 3>& x) { return std::cos(k * x[0]); });
  SpaceTimeField force(g, dt, nt);
  for (int n = 0; n < nt; ++n) force.frames.col(n) = std::sin(0.9 * n * dt) * mode.data;
  SpaceTimeField v = duhamel_solve(force, mu);

  double lam = k * k + mu;
  double E = std::exp(-dt * lam), D = (1.0 - E) / lam;
  double c = 0.0;
  for (int n = 0; n + 1 < nt; ++n) {
    c = E * c + D * std::sin(0.9 * n * dt);
    CHECK((v.frames.col(n + 1) - c * mode.data).abs().maxCoeff() <= 1e-12 * (1.0 + std::abs(c)));
  }
}

TEST_CASE("duhamel: first-order convergence for smooth forcing") {
  Grid g(1, 16, 2.0);
  double mu = 1.0, T = 1.0;
  double k = 2.0 * pi / g.box * 2.0;
  RealField mode = sample(g, [&](const std::array<double, 3>& x) { return std::cos(k * x[0]); });

  auto solve_dt = [&](int steps) {
    double dt = T / steps;
    SpaceTimeField force(g, dt, steps + 1);
    for (int n = 0; n <= steps; ++n) force.frames.col(n) = std::sin(3.0 * n * dt) * mode.data;
    SpaceTimeField v = duhamel_solve(force, mu);
    return RealField(g, v.frames.col(steps));
  };

  RealField ref = solve_dt(1 << 14);
  double errs[3];
  int base = 1 << 5;
  for (int j = 0; j < 3; ++j)
    errs[j] = (solve_dt(base << j).data - ref.data).abs().maxCoeff();
  double r01 = errs[0] / errs[1], r12 = errs[1] / errs[2];
  CHECK(r01 == doctest::Approx(2.0).epsilon(0.15));
  CHECK(r12 == doctest::Approx(2.0).epsilon(0.15));
  double order = std::log2(errs[0] / errs[2]) / 2.0;
  CHECK(order >= 0.9);
}

TEST_CASE("heat kernel functional: unit integrand, unit mass") {
  Grid g(2, 16, 6.0);
  auto one = [&](double) {
    RealField f(g);
    f.data.setConstant(1.0);
    return f;
  };
  CHECK_THROWS_AS(heat_kernel_functional(g, one, 0.0), std::domain_error);
  CHECK_THROWS_AS(heat_kernel_functional(g, one, -2.0), std::domain_error);
  HkfResult r = heat_kernel_functional(g, one, 1.0);
  CHECK(std::abs(r.value - 1.0) <= r.truncation_bound + 1e-9);
  CHECK(r.truncation_bound < 1e-10);
}

TEST_CASE("heat kernel functional: separable oracle") {
  Grid g(2, 16, 6.0);
  double mu = 0.7;
  double k1 = 2.0 * pi / g.box * 2.0;
  RealField mode = sample(g, [&](const std::array<double, 3>& x) { return std::cos(k1 * x[0]); });
  auto integ = [&](double s) { return RealField(g, std::exp(-0.5 * s) * mode.data); };
  // integral_0^inf e^{-s/2} e^{-s(k1^2+mu)} ds over the closed mode pairing
  double lam = k1 * k1 + mu + 0.5;
  HkfResult r = heat_kernel_functional(g, integ, mu, 40.0);
  CHECK(std::abs(r.value - 1.0 / lam) <= 1e-6);
}

TEST_CASE("SPDEFLD1 round trip and validation") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "paralab_io_test";
  fs::create_directories(dir);
  std::string path = (dir / "field.spde").string();

  Grid g(2, 16, 3.5);
  RealField f = random_field(g, 99);
  json extra;
  extra["label"] = "unit test";
  write_field(path, f, extra);

  json meta;
  RealField back = read_field(path, &meta);
  CHECK(back.grid.same(g));
  CHECK((back.data - f.data).abs().maxCoeff() == 0.0);
  CHECK(meta["format"] == "SPDEFLD1");
  CHECK(meta["label"] == "unit test");
  CHECK(meta["n_points"] == 16);

  std::string raw = read_text_file(path);
  std::string bad = raw;
  bad[0] = 'X';
  write_text_file(path + ".bad", bad);
  CHECK_THROWS_AS(read_field(path + ".bad"), format_error);

  std::string trunc = raw.substr(0, raw.size() - 8);
  write_text_file(path + ".trunc", trunc);
  CHECK_THROWS_AS(read_field(path + ".trunc"), format_error);

  CHECK_THROWS_AS(read_field((dir / "missing.spde").string()), format_error);
}

TEST_CASE("csv writer: rfc 4180 quoting and row discipline") {
  CsvWriter w({"a", "b"});
  w.row({"1", "plain"});
  w.row({"2", "needs,\"quote\"\nhere"});
  CHECK_THROWS_AS(w.row({"only one"}), format_error);
  std::string s = w.str();
  CHECK(s == "a,b\r\n1,plain\r\n2,\"needs,\"\"quote\"\"\nhere\"\r\n");
  CHECK(CsvWriter::num(0.1) == "0.10000000000000001");
}

TEST_CASE("rng: determinism, stream separation, gaussian moments") {
  Rng a(123), b(123), c(124);
  bool same = true, diff = false;
  for (int i = 0; i < 1000; ++i) {
    double x = a.gauss(), y = b.gauss(), z = c.gauss();
    same = same && (x == y);
    diff = diff || (x != z);
  }
  CHECK(same);
  CHECK(diff);

  std::set<std::uint64_t> seeds;
  for (std::uint64_t i = 0; i < 1000; ++i) seeds.insert(derive_seed(777, i));
  CHECK(seeds.size() == 1000);

  Rng r(2024);
  const int N = 200000;
  double s1 = 0, s2 = 0;
  for (int i = 0; i < N; ++i) {
    double x = r.gauss();
    s1 += x;
    s2 += x * x;
  }
  double mean = s1 / N, var = s2 / N - mean * mean;
  CHECK(std::abs(mean) <= 4.0 / std::sqrt(double(N)));
  CHECK(std::abs(var - 1.0) <= 4.0 * std::sqrt(2.0 / N));
}

TEST_CASE("gauss-legendre exactness") {
  Quad q = gauss_legendre(12);
  CHECK(q.w.sum() == doctest::Approx(2.0).epsilon(1e-14));
  for (int p = 0; p <= 23; ++p) {
    double acc = 0;
    for (int i = 0; i < q.x.size(); ++i) acc += q.w[i] * std::pow(q.x[i], p);
    double want = (p % 2 == 0) ? 2.0 / (p + 1) : 0.0;
    CHECK(std::abs(acc - want) <= 1e-12);
  }
  Quad qm = gauss_legendre_on(8, 1.0, 3.0);
  double acc = 0;
  for (int i = 0; i < qm.x.size(); ++i) acc += qm.w[i] * qm.x[i] * qm.x[i];
  CHECK(acc == doctest::Approx((27.0 - 1.0) / 3.0).epsilon(1e-13));
}

TEST_CASE("gauss-hermite exactness for normal moments") {
  Quad q = gauss_hermite_prob(10);
  CHECK(q.w.sum() == doctest::Approx(1.0).epsilon(1e-13));
  double want[9] = {1, 0, 1, 0, 3, 0, 15, 0, 105};
  for (int p = 0; p <= 8; ++p) {
    double acc = 0;
    for (int i = 0; i < q.x.size(); ++i) acc += q.w[i] * std::pow(q.x[i], p);
    CHECK(std::abs(acc - want[p]) <= 1e-10 * std::max(1.0, want[p]));
  }
}
