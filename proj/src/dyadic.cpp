#include "paralab/dyadic.hpp"

#include <cmath>
#include <map>

namespace paralab {

double DyadicPartition::chi(double r) {
  constexpr double lo = 0.75, hi = 4.0 / 3.0;
  r = std::abs(r);
  if (r <= lo) return 1.0;
  if (r >= hi) return 0.0;
  double u = (r - lo) / (hi - lo);
  double s = u * u * u * (10.0 + u * (-15.0 + 6.0 * u));  // quintic smoothstep
  return 1.0 - s;
}

DyadicPartition::DyadicPartition(const Grid& g) : grid_(g) {
  jmax_ = int(std::lround(std::log2(double(g.n) / 2.0))) - 1;
  Eigen::ArrayXd ks = g.mode_ksup();
  thetas_.resize(size_t(jmax_ + 2));
  Eigen::ArrayXd prev(g.size());
  for (long i = 0; i < g.size(); ++i) prev[i] = chi(ks[i]);
  thetas_[0] = prev;  // j = -1
  for (int j = 0; j < jmax_; ++j) {
    Eigen::ArrayXd next(g.size());
    double scale = std::pow(2.0, j + 1);
    for (long i = 0; i < g.size(); ++i) next[i] = chi(ks[i] / scale);
    thetas_[size_t(j + 1)] = next - prev;
    prev = next;
  }
  thetas_[size_t(jmax_ + 1)] = 1.0 - prev;  // remainder top block
}

Eigen::ArrayXd DyadicPartition::lowpass(int j) const {
  if (j < -2 || j > jmax_) throw index_error("dyadic: lowpass level out of range");
  Eigen::ArrayXd acc = Eigen::ArrayXd::Zero(grid_.size());
  for (int i = -1; i <= j; ++i) acc += theta(i);
  return acc;
}

const DyadicPartition& partition_for(const Grid& g) {
  thread_local std::map<std::tuple<int, int, double>, DyadicPartition> cache;
  auto key = std::make_tuple(g.dim, g.n, g.box);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, DyadicPartition(g)).first;
  return it->second;
}

SpectralField lp_block(const SpectralField& f, int j, const DyadicPartition& P) {
  check_same_grid(f.grid, P.grid());
  SpectralField out(f.grid);
  out.data = f.data * P.theta(j).cast<std::complex<double>>();
  return out;
}

RealField lp_block(const RealField& f, int j, const DyadicPartition& P) {
  return to_physical(lp_block(to_spectral(f), j, P));
}

BlockDecomp decompose_blocks(const RealField& f, const DyadicPartition& P) {
  check_same_grid(f.grid, P.grid());
  BlockDecomp out;
  out.part = &P;
  SpectralField fh = to_spectral(f);
  int nb = P.blocks();
  out.delta.resize(size_t(nb));
  out.slow.resize(size_t(nb));
  Eigen::ArrayXd acc = Eigen::ArrayXd::Zero(f.grid.size());
  for (int j = -1; j <= P.jmax(); ++j) {
    SpectralField bh(f.grid);
    bh.data = fh.data * P.theta(j).cast<std::complex<double>>();
    Eigen::ArrayXd b = to_physical(bh).data;
    acc += b;
    out.delta[size_t(j + 1)] = std::move(b);
    out.slow[size_t(j + 1)] = acc;
  }
  return out;
}

}  // namespace paralab
