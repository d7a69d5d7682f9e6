#include "paralab/localize.hpp"

#include <cmath>
#include <map>

#include "paralab/fft.hpp"

namespace paralab {

namespace {

std::vector<double> shell_profile(double r, int top) {
  std::vector<double> w(size_t(top + 2));
  double prev = DyadicPartition::chi(r);
  w[0] = prev;
  for (int k = 0; k < top; ++k) {
    double next = DyadicPartition::chi(r / std::pow(2.0, k + 1));
    w[size_t(k + 1)] = next - prev;
    prev = next;
  }
  w[size_t(top + 1)] = 1.0 - prev;
  return w;
}

}  // namespace

Localizer::Localizer(const Grid& g, double dt, int nt) : grid(g) {
  Eigen::ArrayXd r2 = g.radius2();
  double rmax = std::sqrt(r2.maxCoeff());
  int ktop = std::max(0, int(std::ceil(std::log2(std::max(rmax, 1.5)))));
  shells.assign(size_t(ktop + 2), Eigen::ArrayXd::Zero(g.size()));
  for (long i = 0; i < g.size(); ++i) {
    auto w = shell_profile(std::sqrt(r2[i]), ktop);
    for (size_t k = 0; k < w.size(); ++k) shells[k][i] = w[k];
  }

  double T = dt * (nt - 1);
  int ltop = std::max(0, int(std::ceil(std::log2(std::max(T, 1.5)))));
  tshells.resize(size_t(nt));
  for (int n = 0; n < nt; ++n) tshells[size_t(n)] = shell_profile(dt * n, ltop);
}

namespace {

SpaceTimeField localized_part(const Localizer& loc, const SpaceTimeField& f, int L, bool high) {
  check_same_grid(loc.grid, f.grid);
  if (int(loc.tshells.size()) != f.nt())
    throw dimension_error("localizer: frame count mismatch");
  const DyadicPartition& P = partition_for(f.grid);
  SpaceTimeField out(f.grid, f.dt, f.nt());

  for (int n = 0; n < f.nt(); ++n) {
    SpectralField fhat = to_spectral(f.frame(n));
    std::map<int, Eigen::ArrayXd> part_by_level;
    auto part = [&](int M) -> const Eigen::ArrayXd& {
      M = std::max(-2, std::min(M, P.jmax()));
      auto it = part_by_level.find(M);
      if (it == part_by_level.end()) {
        SpectralField lp(f.grid);
        lp.data = fhat.data * P.lowpass(M).cast<std::complex<double>>();
        Eigen::ArrayXd low = to_physical(lp).data;
        if (high) low = f.frames.col(n) - low;  // exact complement
        it = part_by_level.emplace(M, std::move(low)).first;
      }
      return it->second;
    };

    Eigen::ArrayXd acc = Eigen::ArrayXd::Zero(f.grid.size());
    const auto& v = loc.tshells[size_t(n)];
    for (int l = -1; l < int(v.size()) - 1; ++l) {
      if (v[size_t(l + 1)] == 0.0) continue;
      for (int k = -1; k <= loc.kmax(); ++k) {
        const Eigen::ArrayXd& w = loc.shells[size_t(k + 1)];
        acc += v[size_t(l + 1)] * w * part(loc.level(L, k, l));
      }
    }
    out.frames.col(n) = acc;
  }
  return out;
}

}  // namespace

SpaceTimeField Localizer::highpass_part(const SpaceTimeField& f, int L) const {
  return localized_part(*this, f, L, true);
}

SpaceTimeField Localizer::lowpass_part(const SpaceTimeField& f, int L) const {
  return localized_part(*this, f, L, false);
}

}  // namespace paralab
