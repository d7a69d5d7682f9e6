#include "paralab/renorm.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "paralab/common.hpp"
#include "paralab/fft.hpp"
#include "paralab/quad.hpp"
#include "paralab/rng.hpp"

namespace paralab {

namespace {

double factorial(int n) {
  double f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

struct LagContext {
  NoiseKernel kern;
  Eigen::ArrayXd x, D;       // per-mode step multiplier and Duhamel weight
  Eigen::ArrayXd mode_var;   // stationary V_k
  double sigma2 = 0;         // eps * sum V_k
  int max_lag = 0;
};

LagContext make_context(const NoiseSpec& noise, const Grid& g, double mu, double dt,
                        double eps) {
  require(mu > 0, "renorm: mass mu must be positive");
  require(eps > 0 && eps <= 1, "renorm: eps must lie in (0, 1]");
  LagContext ctx;
  ctx.kern = build_kernel(noise, g, dt);
  Eigen::ArrayXd lam = g.mode_k2() + mu;
  ctx.x = (-dt * lam).exp();
  ctx.D = -(-dt * lam).unaryExpr([](double v) { return std::expm1(v); }) / lam;
  ctx.mode_var = ou_stationary_stats(ctx.kern, mu).mode_var;
  ctx.sigma2 = eps * ctx.mode_var.sum();
  ctx.max_lag = int(std::ceil(46.0 / (mu * dt)));
  return ctx;
}

// Covariance of sqrt(eps) Y between frames lag apart, as a field in the
// spatial separation.
RealField pair_cov_field(const LagContext& ctx, double mu, double eps, int lag) {
  RealField c = ou_cov_field(ctx.kern, mu, lag);
  c.data *= eps;
  return c;
}

struct PairKernels {
  // pair correlation functions of c for the four renormalized diagrams,
  // prefactors included
  std::function<double(double)> w22, wb22, w31, w32;
};

DConstants accumulate_lags(const LagContext& ctx, double mu, double eps,
                           const PairKernels& pk) {
  DConstants out;
  const Grid& g = ctx.kern.grid;
  long N = g.size();
  Eigen::ArrayXd weight = ctx.D;  // x^{lag-1} D, updated in the loop
  double xbar = std::exp(-mu * ctx.kern.dt);
  int calm = 0;
  double last = 0;
  for (int lag = 1; lag <= ctx.max_lag; ++lag) {
    RealField c = pair_cov_field(ctx, mu, eps, lag);
    RealField w22f(g), wb22f(g), w31f(g), w32f(g);
    for (long i = 0; i < N; ++i) {
      double ci = c.data[i];
      w22f.data[i] = pk.w22(ci);
      wb22f.data[i] = pk.wb22(ci);
      w31f.data[i] = pk.w31(ci);
      w32f.data[i] = pk.w32(ci);
    }
    double c22 = (weight * to_spectral(w22f).data.real()).sum();
    double cb22 = (weight * to_spectral(wb22f).data.real()).sum();
    double c31 = (weight * to_spectral(w31f).data.real()).sum();
    double c32 = (weight * to_spectral(w32f).data.real()).sum();
    out.d22 += c22;
    out.d22_bar += cb22;
    out.d31 += c31;
    out.d32 += c32;
    out.lags = lag;
    last = std::abs(c22) + std::abs(cb22) + std::abs(c31) + std::abs(c32);
    double scale = std::abs(out.d22) + std::abs(out.d22_bar) + std::abs(out.d31) +
                   std::abs(out.d32) + 1e-300;
    if (lag > ctx.kern.frames() + 2 && last < 1e-15 * scale) {
      if (++calm >= 5) break;
    } else {
      calm = 0;
    }
    weight *= ctx.x;
  }
  out.tail_bound = last * xbar / (1.0 - xbar);
  return out;
}

}  // namespace

Poly mehler_pair(const ChaosExpansion& tails, int a, int b) {
  require(a >= 0 && b >= 0, "mehler_pair: derivative orders must be nonnegative");
  int nmax = tails.nmax();
  require(nmax <= 9, "mehler_pair: chaos order limited to 9");
  std::vector<double> coef;
  for (int p = 0; p + std::max(a, b) <= nmax; ++p) {
    double fa = tails.coeff(p + a), fb = tails.coeff(p + b);
    double v = fa * fb * factorial(p + a) * factorial(p + b) / factorial(p);
    coef.push_back(v);
  }
  return Poly(std::move(coef));
}

double pair_expectation_quad(const Poly& fa, const Poly& fb, double sigma2, double c,
                             int nodes) {
  require(sigma2 > 0, "pair_expectation_quad: variance must be positive");
  if (std::abs(c) > sigma2 * (1 + 1e-12))
    throw std::domain_error("pair_expectation_quad: |c| exceeds the variance");
  double sigma = std::sqrt(sigma2);
  double alpha = c / sigma2;
  double beta = std::sqrt(std::max(0.0, sigma2 - c * c / sigma2));
  Quad q = gauss_hermite_prob(nodes);
  double acc = 0;
  for (Eigen::Index i = 0; i < q.x.size(); ++i) {
    double z1 = sigma * q.x[i];
    double inner = 0;
    for (Eigen::Index j = 0; j < q.x.size(); ++j) inner += q.w[j] * fb(alpha * z1 + beta * q.x[j]);
    acc += q.w[i] * fa(z1) * inner;
  }
  return acc;
}

DConstants d_constants(const NonlinearitySpec& F, const NoiseSpec& noise, const Grid& g,
                       double mu, double dt, double eps, PairPath path) {
  require(F.degree() <= 9, "d_constants: chaos order limited to 9");
  LagContext ctx = make_context(noise, g, mu, dt, eps);
  TildeF tf = tilde_F(F.F(), ctx.sigma2);
  ChaosExpansion full = hermite_expand(F.F(), ctx.sigma2);
  double f2 = full.coeff(2), f3 = full.coeff(3);
  double i2 = 1.0 / (eps * eps);
  double i52 = std::pow(eps, -2.5);

  PairKernels pk;
  if (path == PairPath::mehler) {
    Poly m11 = mehler_pair(tf.chaos, 1, 1);
    Poly m02 = mehler_pair(tf.chaos, 0, 2);
    Poly m01 = mehler_pair(tf.chaos, 0, 1);
    pk.w22 = [m11, i2](double c) { return i2 / 9.0 * m11(c); };
    pk.w31 = [m02, i2](double c) { return i2 / 6.0 * m02(c); };
    pk.w32 = [m01, i52](double c) { return i52 / 3.0 * m01(c); };
    pk.wb22 = [f2, f3, i52](double c) { return 2.0 * i52 * f2 * f3 * c * c; };
  } else {
    int nodes = F.degree() + 2;
    double s2 = ctx.sigma2;
    Poly t0 = tf.poly, t1 = tf.derivative(1), t2 = tf.derivative(2);
    Poly h2 = hermite_poly(2, s2);
    pk.w22 = [t1, s2, nodes, i2](double c) {
      return i2 / 9.0 * pair_expectation_quad(t1, t1, s2, c, nodes);
    };
    pk.w31 = [t0, t2, s2, nodes, i2](double c) {
      return i2 / 6.0 * pair_expectation_quad(t0, t2, s2, c, nodes);
    };
    pk.w32 = [t0, t1, s2, nodes, i52](double c) {
      return i52 / 3.0 * pair_expectation_quad(t0, t1, s2, c, nodes);
    };
    pk.wb22 = [h2, t1, f2, s2, nodes, i52](double c) {
      return i52 / 3.0 * f2 * pair_expectation_quad(h2, t1, s2, c, nodes);
    };
  }
  return accumulate_lags(ctx, mu, eps, pk);
}

DMonteCarlo d_constants_mc(const NonlinearitySpec& F, const NoiseSpec& noise, const Grid& g,
                           double mu, double dt, double eps, long pairs_per_node,
                           uint64_t seed) {
  require(F.degree() <= 9, "d_constants_mc: chaos order limited to 9");
  require(pairs_per_node >= 16, "d_constants_mc: need at least 16 pairs per node");
  LagContext ctx = make_context(noise, g, mu, dt, eps);
  TildeF tf = tilde_F(F.F(), ctx.sigma2);
  ChaosExpansion full = hermite_expand(F.F(), ctx.sigma2);
  double f2 = full.coeff(2);
  double s2 = ctx.sigma2, sigma = std::sqrt(s2);
  Poly t0 = tf.poly, t1 = tf.derivative(1), t2 = tf.derivative(2);
  Poly h2 = hermite_poly(2, s2);
  double i2 = 1.0 / (eps * eps);
  double i52 = std::pow(eps, -2.5);

  // Deterministic lag count from a dry Mehler pass so both paths share nodes.
  DConstants det = d_constants(F, noise, g, mu, dt, eps, PairPath::mehler);
  int lags = det.lags;

  const Grid& grid = ctx.kern.grid;
  long N = grid.size();
  Eigen::ArrayXd weight = ctx.D;
  Rng rng(derive_seed(seed, 0xD0C5ull));
  DMonteCarlo mc;
  mc.pairs_per_node = pairs_per_node;
  double var22 = 0, varb = 0, var31 = 0, var32 = 0;
  std::vector<double> cdf(static_cast<size_t>(N), 0.0);
  for (int lag = 1; lag <= lags; ++lag) {
    RealField c = pair_cov_field(ctx, mu, eps, lag);
    RealField P = to_physical(SpectralField(grid, weight.cast<std::complex<double>>()));
    double total = 0;
    for (long i = 0; i < N; ++i) {
      total += std::abs(P.data[i]);
      cdf[size_t(i)] = total;
    }
    double m22 = 0, mb = 0, m31 = 0, m32 = 0;
    double q22 = 0, qb = 0, q31 = 0, q32 = 0;
    for (long p = 0; p < pairs_per_node; ++p) {
      double u = rng.uniform() * total;
      long i = std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
      if (i >= N) i = N - 1;
      double sgn = P.data[i] >= 0 ? 1.0 : -1.0;
      double ci = std::min(std::max(c.data[i], -s2), s2);
      double z1 = sigma * rng.gauss();
      double z2 = ci / s2 * z1 + std::sqrt(std::max(0.0, s2 - ci * ci / s2)) * rng.gauss();
      double s1 = sgn * i2 / 9.0 * t1(z1) * t1(z2);
      double sb = sgn * i52 / 3.0 * f2 * h2(z1) * t1(z2);
      double s3 = sgn * i2 / 6.0 * t0(z1) * t2(z2);
      double s4 = sgn * i52 / 3.0 * t0(z1) * t1(z2);
      m22 += s1; mb += sb; m31 += s3; m32 += s4;
      q22 += s1 * s1; qb += sb * sb; q31 += s3 * s3; q32 += s4 * s4;
    }
    double np = double(pairs_per_node);
    double scale = total / double(N);
    mc.value.d22 += scale * m22 / np;
    mc.value.d22_bar += scale * mb / np;
    mc.value.d31 += scale * m31 / np;
    mc.value.d32 += scale * m32 / np;
    var22 += scale * scale * (q22 / np - (m22 / np) * (m22 / np)) / np;
    varb += scale * scale * (qb / np - (mb / np) * (mb / np)) / np;
    var31 += scale * scale * (q31 / np - (m31 / np) * (m31 / np)) / np;
    var32 += scale * scale * (q32 / np - (m32 / np) * (m32 / np)) / np;
    weight *= ctx.x;
  }
  mc.value.lags = lags;
  mc.se.d22 = std::sqrt(var22);
  mc.se.d22_bar = std::sqrt(varb);
  mc.se.d31 = std::sqrt(var31);
  mc.se.d32 = std::sqrt(var32);
  return mc;
}

LambdaVector lambda_vector(const ChaosExpansion& chaos, double eps, const DConstants& d) {
  require(eps > 0, "lambda_vector: eps must be positive");
  LambdaVector l;
  double si = 1.0 / std::sqrt(eps);
  l.l3 = chaos.coeff(3);
  l.l2 = si * chaos.coeff(2);
  l.l1 = chaos.coeff(1) / eps - 9.0 * d.d22 - 6.0 * d.d31;
  l.l0 = si / eps * chaos.coeff(0) - si * chaos.coeff(2) * d.d31 - 3.0 * d.d32 -
         3.0 * d.d22_bar;
  l.c0 = l.l0 + si * chaos.coeff(2) * d.d31;
  return l;
}

RenormReport renormalize(const NonlinearitySpec& F, const NoiseSpec& noise, const Grid& g,
                         double mu, double dt, double eps, PairPath path) {
  RenormReport rep;
  rep.eps = eps;
  rep.mu = mu;
  rep.dt = dt;
  LagContext ctx = make_context(noise, g, mu, dt, eps);
  rep.sigma2 = ctx.sigma2;
  rep.chaos = hermite_expand(F.F(), ctx.sigma2);
  rep.d = d_constants(F, noise, g, mu, dt, eps, path);
  rep.lambda = lambda_vector(rep.chaos, eps, rep.d);
  return rep;
}

void write_renorm_csv(CsvWriter& csv, const std::vector<RenormReport>& rows) {
  for (const auto& r : rows) {
    csv.row({CsvWriter::num(r.eps), CsvWriter::num(r.chaos.coeff(0)),
             CsvWriter::num(r.chaos.coeff(1)), CsvWriter::num(r.chaos.coeff(2)),
             CsvWriter::num(r.chaos.coeff(3)), CsvWriter::num(r.d.d22),
             CsvWriter::num(r.d.d22_bar), CsvWriter::num(r.d.d31), CsvWriter::num(r.d.d32),
             CsvWriter::num(r.lambda.l0), CsvWriter::num(r.lambda.l1),
             CsvWriter::num(r.lambda.l2), CsvWriter::num(r.lambda.l3)});
  }
}

}  // namespace paralab
