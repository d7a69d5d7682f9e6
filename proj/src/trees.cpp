#include "paralab/trees.hpp"

#include <cmath>

#include "paralab/admissibility.hpp"
#include "paralab/rng.hpp"

namespace paralab {

namespace {

// Chaos tail sum_{n>=3} f_n H_n(., sigma2) as a plain polynomial.
Poly tail_poly(const ChaosExpansion& chaos) {
  Poly tail;
  for (int n = 3; n <= chaos.nmax(); ++n)
    tail = tail + hermite_poly(n, chaos.sigma2).scaled(chaos.coeff(n));
  return tail;
}

SpaceTimeField like(const SpaceTimeField& ref) {
  return SpaceTimeField(ref.grid, ref.dt, ref.nt());
}

SpaceTimeField scaled(const SpaceTimeField& f, double w) {
  SpaceTimeField out = f;
  out.frames *= w;
  return out;
}

NoiseSpec at_eps(NoiseSpec base, double eps) {
  if (!base.is_white()) base.eps = eps;
  return base;
}

uint64_t member_seed(uint64_t master, int i) { return derive_seed(master, 0x7265ull + uint64_t(i)); }

}  // namespace

double HomogeneityTable::target(const std::string& name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return alpha[i];
  throw index_error("homogeneity table: unknown component " + name);
}

HomogeneityTable homogeneity_table(double kappa) {
  require(kappa > 0, "homogeneity table: kappa must be positive");
  HomogeneityTable t;
  t.kappa = kappa;
  t.names = {"y0", "y1", "y2", "yb2", "iy3", "r31", "r22", "rb22", "r32"};
  t.alpha = {-kappa,          -0.5 - kappa, -1.0 - kappa, -1.0 - kappa, 0.5 - kappa,
             -kappa,          -kappa,       -kappa,       -0.5 - kappa};
  return t;
}

Enhancement build_enhancement(const SpaceTimeField& Y, const RenormReport& rc) {
  if (!(rc.eps > 0 && rc.eps <= 1))
    throw dependency_error("enhancement: report epsilon outside (0, 1]");
  if (Y.dt != rc.dt) throw dependency_error("enhancement: report built for a different time step");
  if (!(rc.sigma2 > 0)) throw dependency_error("enhancement: report carries no variance");
  if (rc.chaos.sigma2 != rc.sigma2)
    throw dependency_error("enhancement: chaos expansion variance mismatch");

  Enhancement e;
  e.eps = rc.eps;
  e.mu = rc.mu;
  e.dt = rc.dt;
  e.sigma2 = rc.sigma2;
  e.chaos = rc.chaos;
  e.d = rc.d;
  e.lambda = rc.lambda;
  e.Y = Y;

  Poly tf = tail_poly(rc.chaos);
  Poly tf1 = tf.derivative(1);
  Poly tf2 = tf.derivative(2);
  Poly tf3 = tf.derivative(3);

  double eps = rc.eps;
  double se = std::sqrt(eps);
  double vY = rc.sigma2 / eps;  // E[Y^2]
  double f2 = rc.chaos.coeff(2);

  SpaceTimeField y3 = like(Y);
  e.y0 = like(Y);
  e.y1 = like(Y);
  e.y2 = like(Y);
  e.yb2 = like(Y);
  for (int n = 0; n < Y.nt(); ++n) {
    Eigen::ArrayXd ey = se * Y.frames.col(n);
    y3.frames.col(n) = std::pow(eps, -1.5) * tf(ey);
    e.y2.frames.col(n) = (1.0 / 3.0) / eps * tf1(ey);
    e.y1.frames.col(n) = (1.0 / 6.0) / se * tf2(ey);
    e.y0.frames.col(n) = (1.0 / 6.0) * tf3(ey);
    e.yb2.frames.col(n) = f2 / se * (Y.frames.col(n).square() - vY);
  }

  e.iy3 = duhamel_solve(y3, rc.mu);
  e.iy2 = duhamel_solve(e.y2, rc.mu);
  e.iyb2 = duhamel_solve(e.yb2, rc.mu);

  e.r31 = like(Y);
  e.r22 = like(Y);
  e.rb22 = like(Y);
  e.r32 = like(Y);
  const DyadicPartition& P = partition_for(Y.grid);
  double d32p = rc.d.d32_prime();
  for (int n = 0; n < Y.nt(); ++n) {
    BlockDecomp b_y1 = decompose_blocks(e.y1.frame(n), P);
    BlockDecomp b_y2 = decompose_blocks(e.y2.frame(n), P);
    BlockDecomp b_iy3 = decompose_blocks(e.iy3.frame(n), P);
    BlockDecomp b_iy2 = decompose_blocks(e.iy2.frame(n), P);
    BlockDecomp b_iyb2 = decompose_blocks(e.iyb2.frame(n), P);
    e.r31.frames.col(n) = resonant(b_iy3, b_y1).data - rc.d.d31;
    e.r22.frames.col(n) = resonant(b_iy2, b_y2).data - rc.d.d22;
    e.rb22.frames.col(n) = resonant(b_iyb2, b_y2).data - rc.d.d22_bar;
    e.r32.frames.col(n) =
        resonant(b_iy3, b_y2).data - d32p * Y.frames.col(n) - rc.d.d32;
  }
  return e;
}

Enhancement build_enhancement(const SpaceTimeField& Y, const NonlinearitySpec& F,
                              const RenormReport& rc) {
  ChaosExpansion fresh = hermite_expand(F.F(), rc.sigma2);
  double scale = std::max(1.0, fresh.f.abs().maxCoeff());
  for (int n = 0; n <= std::max(fresh.nmax(), rc.chaos.nmax()); ++n)
    if (std::abs(fresh.coeff(n) - rc.chaos.coeff(n)) > 1e-10 * scale)
      throw dependency_error("enhancement: report does not match the nonlinearity");
  return build_enhancement(Y, rc);
}

Enhancement limit_enhancement(const LambdaVector& lambda, const Enhancement& base) {
  require(lambda.l3 > 0, "limit enhancement: cubic coupling must be positive");
  double l3 = lambda.l3, l2 = lambda.l2;

  Enhancement e;
  e.eps = base.eps;
  e.mu = base.mu;
  e.dt = base.dt;
  e.sigma2 = base.sigma2;
  e.chaos = base.chaos;
  e.lambda = lambda;
  e.d.d22 = l3 * l3 * base.d.d22;
  e.d.d22_bar = l3 * l2 * base.d.d22;
  e.d.d31 = l3 * l3 * base.d.d31;
  e.d.d32 = l3 * l3 * base.d.d32;
  e.d.lags = base.d.lags;
  e.d.tail_bound = l3 * l3 * base.d.tail_bound;

  e.Y = base.Y;
  e.y0 = scaled(base.y0, l3);
  e.y1 = scaled(base.y1, l3);
  e.y2 = scaled(base.y2, l3);
  e.yb2 = scaled(base.y2, l2);
  e.iy3 = scaled(base.iy3, l3);
  e.iy2 = scaled(base.iy2, l3);
  e.iyb2 = scaled(base.iy2, l2);
  e.r31 = scaled(base.r31, l3 * l3);
  e.r22 = scaled(base.r22, l3 * l3);
  e.rb22 = scaled(base.r22, l3 * l2);
  e.r32 = scaled(base.r32, l3 * l3);
  return e;
}

ResonanceCurve resonance_mean_curve(const NonlinearitySpec& F, const NoiseSpec& noise,
                                    const Grid& g, double mu, double T, double dt, double eps,
                                    int seeds, uint64_t master) {
  require(seeds >= 2, "resonance curve: need at least two members");
  NoiseSpec spec = at_eps(noise, eps);
  RenormReport rc = renormalize(F, spec, g, mu, dt, eps);

  ResonanceCurve out;
  int nt = 0;
  Eigen::ArrayXd sum, sumsq;
  for (int i = 0; i < seeds; ++i) {
    OuPath path = sample_stationary_ou(spec, g, mu, T, dt, member_seed(master, i));
    Enhancement e = build_enhancement(path.Y, rc);
    Eigen::ArrayXd avg = (e.r22.frames.colwise().mean()).transpose() + rc.d.d22;
    if (i == 0) {
      nt = e.r22.nt();
      sum = Eigen::ArrayXd::Zero(nt);
      sumsq = Eigen::ArrayXd::Zero(nt);
      out.t = dt * Eigen::ArrayXd::LinSpaced(nt, 0, nt - 1);
    }
    sum += avg;
    sumsq += avg.square();
  }
  double R = double(seeds);
  out.mean = sum / R;
  out.se = ((sumsq / R - out.mean.square()).max(0.0) / (R - 1)).sqrt();
  return out;
}

ResonanceCurve b_curve(const NonlinearitySpec& F, const NoiseSpec& noise, const Grid& g,
                       double mu, double T, double dt, double eps, int seeds, uint64_t master) {
  ResonanceCurve c = resonance_mean_curve(F, noise, g, mu, T, dt, eps, seeds, master);
  c.mean *= 3.0;
  c.se *= 3.0;
  return c;
}

std::vector<TreeRegRow> tree_regularity_table(const NonlinearitySpec& F, const NoiseSpec& noise,
                                              const Grid& g, double mu, double T, double dt,
                                              double eps, int seeds, uint64_t master,
                                              double kappa, const Weight& w) {
  require(seeds >= 2, "tree regularity: need at least two members");
  NoiseSpec spec = at_eps(noise, eps);
  RenormReport rc = renormalize(F, spec, g, mu, dt, eps);
  HomogeneityTable table = homogeneity_table(kappa);

  std::vector<std::vector<double>> alphas(10);
  for (int i = 0; i < seeds; ++i) {
    OuPath path = sample_stationary_ou(spec, g, mu, T, dt, member_seed(master, i));
    Enhancement e = build_enhancement(path.Y, rc);
    alphas[0].push_back(measure_regularity(e.Y, w).alpha());
    auto comps = e.components();
    for (size_t c = 0; c < comps.size(); ++c)
      alphas[c + 1].push_back(measure_regularity(*comps[c], w).alpha());
  }

  std::vector<TreeRegRow> rows;
  for (size_t c = 0; c < 10; ++c) {
    EnsembleRegularity agg = regularity_ensemble(alphas[c]);
    TreeRegRow row;
    row.component = c == 0 ? "y" : table.names[c - 1];
    row.eps = eps;
    row.alpha = agg.mean;
    row.ci95 = agg.ci95;
    row.target = c == 0 ? -0.5 - kappa : table.alpha[c - 1];
    rows.push_back(row);
  }
  return rows;
}

Eigen::ArrayXXd y0_deviation_norms(const NonlinearitySpec& F, const NoiseSpec& noise,
                                   const Grid& g, double mu, double T, double dt,
                                   const Eigen::ArrayXd& eps_grid, int seeds, uint64_t master,
                                   double kappa, double eps_reg, const Weight& w) {
  require(seeds >= 1, "decay statistics: need members");
  double alpha = -kappa - eps_reg;
  Eigen::ArrayXXd norms(seeds, eps_grid.size());
  for (int c = 0; c < eps_grid.size(); ++c) {
    double eps = eps_grid[c];
    NoiseSpec spec = at_eps(noise, eps);
    NoiseKernel kern = build_kernel(spec, g, dt);
    double sigma2 = sigma_eps2(kern, mu, eps);
    ChaosExpansion chaos = hermite_expand(F.F(), sigma2);
    Poly tf3 = tail_poly(chaos).derivative(3);
    double l3 = chaos.coeff(3);
    double se = std::sqrt(eps);
    for (int i = 0; i < seeds; ++i) {
      OuPath path = sample_stationary_ou(spec, g, mu, T, dt, member_seed(master, i));
      SpaceTimeField dev = like(path.Y);
      for (int n = 0; n < path.Y.nt(); ++n)
        dev.frames.col(n) = (1.0 / 6.0) * tf3((se * path.Y.frames.col(n)).eval()) - l3;
      norms(i, c) = spacetime_norm(dev, "besov", alpha, 0.0, w).total;
    }
  }
  return norms;
}

Eigen::ArrayXXd power_deviation_norms(int k, const NoiseSpec& noise, const Grid& g, double mu,
                                      double T, double dt, const Eigen::ArrayXd& eps_grid,
                                      int seeds, uint64_t master, double kappa, double eps_reg,
                                      const Weight& w) {
  require(k >= 1 && k <= 8, "decay statistics: power out of range");
  require(seeds >= 1, "decay statistics: need members");
  double alpha = -kappa - eps_reg;
  Eigen::ArrayXXd norms(seeds, eps_grid.size());
  for (int c = 0; c < eps_grid.size(); ++c) {
    double eps = eps_grid[c];
    NoiseSpec spec = at_eps(noise, eps);
    NoiseKernel kern = build_kernel(spec, g, dt);
    double sigma2 = sigma_eps2(kern, mu, eps);
    double mean = gaussian_mean(Poly::monomial(k, 1.0), sigma2);
    double se = std::sqrt(eps);
    for (int i = 0; i < seeds; ++i) {
      OuPath path = sample_stationary_ou(spec, g, mu, T, dt, member_seed(master, i));
      SpaceTimeField dev = like(path.Y);
      for (int n = 0; n < path.Y.nt(); ++n)
        dev.frames.col(n) = (se * path.Y.frames.col(n)).pow(double(k)) - mean;
      norms(i, c) = spacetime_norm(dev, "besov", alpha, 0.0, w).total;
    }
  }
  return norms;
}

}  // namespace paralab
