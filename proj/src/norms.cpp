#include "paralab/norms.hpp"

#include <cmath>

namespace paralab {

double linf_weighted(const RealField& f, const Weight& w) {
  return (w.field(f.grid).data * f.data).abs().maxCoeff();
}

double besov_norm_pre(const BlockDecomp& blocks, double alpha, const Eigen::ArrayXd& wfield) {
  const DyadicPartition& P = *blocks.part;
  double best = 0;
  for (int j = -1; j <= P.jmax(); ++j) {
    double amp = (wfield * blocks.delta[size_t(j + 1)]).abs().maxCoeff();
    best = std::max(best, std::pow(2.0, alpha * j) * amp);
  }
  return best;
}

double besov_norm(const RealField& f, double alpha, const Weight& w) {
  const DyadicPartition& P = partition_for(f.grid);
  BlockDecomp blocks = decompose_blocks(f, P);
  return besov_norm_pre(blocks, alpha, w.field(f.grid).data);
}

double holder_norm(const RealField& f, double alpha, const Weight& w) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw std::domain_error("holder_norm: exponent must lie in (0, 1)");
  const Grid& g = f.grid;
  double h = g.spacing();
  int rmax = int(std::floor(1.0 / h));
  if (rmax < 1) throw resolution_error("holder_norm: grid spacing exceeds the unit shift scale");
  rmax = std::min(rmax, g.n / 2);

  Eigen::ArrayXd wf = w.field(g).data;
  double best = (wf * f.data).abs().maxCoeff();
  long stride = 1;
  for (int axis = 0; axis < g.dim; ++axis) {
    const long block = stride * g.n;
    for (int r = 1; r <= rmax; ++r) {
      double diff = 0;
      for (long idx = 0; idx < g.size(); ++idx) {
        long i = (idx / stride) % g.n;
        long shifted = idx + ((i + r < g.n) ? stride * r : stride * r - block);
        diff = std::max(diff, wf[idx] * std::abs(f.data[shifted] - f.data[idx]));
      }
      best = std::max(best, diff / std::pow(r * h, alpha));
    }
    stride *= g.n;
  }
  return best;
}

namespace {

double space_norm(const RealField& f, const std::string& family, double alpha, const Weight& w) {
  if (family == "besov") return besov_norm(f, alpha, w);
  if (family == "linf") return linf_weighted(f, w);
  throw std::domain_error("spacetime_norm: unknown family " + family);
}

}  // namespace

json NormReport::to_json() const {
  json j;
  j["family"] = family;
  j["space_alpha"] = space_alpha;
  j["time_alpha"] = time_alpha;
  j["weight_power"] = weight_power;
  j["sup_value"] = sup_value;
  j["holder_value"] = holder_value;
  j["total"] = total;
  return j;
}

NormReport spacetime_norm(const SpaceTimeField& f, const std::string& family, double space_alpha,
                          double time_alpha, const Weight& w) {
  NormReport rep;
  rep.family = family;
  rep.space_alpha = space_alpha;
  rep.time_alpha = time_alpha;
  rep.weight_power = w.a;

  for (int n = 0; n < f.nt(); ++n)
    rep.sup_value = std::max(rep.sup_value, space_norm(f.frame(n), family, space_alpha, w));

  if (time_alpha > 0) {
    // Dyadic frame lags plus the full range; enough to see every scale of the
    // time increment without an O(n_t^2) sweep.
    std::vector<int> lags;
    for (int L = 1; L < f.nt(); L *= 2) lags.push_back(L);
    if (lags.empty() || lags.back() != f.nt() - 1) lags.push_back(f.nt() - 1);
    for (int L : lags) {
      for (int n = 0; n + L < f.nt(); ++n) {
        RealField diff(f.grid, f.frames.col(n + L) - f.frames.col(n));
        double v = space_norm(diff, family, space_alpha, w) / std::pow(L * f.dt, time_alpha);
        rep.holder_value = std::max(rep.holder_value, v);
      }
    }
  }
  rep.total = rep.sup_value + rep.holder_value;
  return rep;
}

json GapReport::to_json() const {
  json j;
  j["theta"] = theta;
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["ratio"] = ratio;
  return j;
}

GapReport interpolation_gap(const SpaceTimeField& psi, double alpha, double kappa,
                            const Weight& w2, const Weight& w3) {
  if (!(kappa > 0) || !(kappa < 1))
    throw std::domain_error("interpolation_gap: kappa must lie in (0, 1)");
  if (!(alpha >= 0) || !(alpha <= 2.0 - kappa))
    throw std::domain_error("interpolation_gap: alpha must lie in [0, 2 - kappa]");
  GapReport rep;
  rep.theta = alpha / (2.0 - kappa);
  Weight w1 = w2.pow(1.0 - rep.theta) * w3.pow(rep.theta);

  double low = 0, high = 0;
  for (int n = 0; n < psi.nt(); ++n) {
    RealField fr = psi.frame(n);
    rep.lhs = std::max(rep.lhs, besov_norm(fr, alpha, w1));
    low = std::max(low, linf_weighted(fr, w2));
    high = std::max(high, besov_norm(fr, 2.0 - kappa, w3));
  }
  rep.rhs = std::pow(low, 1.0 - rep.theta) * std::pow(high, rep.theta);
  rep.ratio = rep.rhs > 0 ? rep.lhs / rep.rhs : (rep.lhs > 0 ? HUGE_VAL : 0.0);
  return rep;
}

}  // namespace paralab
