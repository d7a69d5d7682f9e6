#pragma once

#include <vector>

#include "paralab/fft.hpp"
#include "paralab/grid.hpp"

namespace paralab {

// Littlewood-Paley partition over integer wavenumbers in the sup norm, so the
// top block covers the full discrete spectrum incl. box corners. Profiles are
// telescoped from one even quintic ramp chi (1 below 3/4, 0 above 4/3):
//   theta_{-1} = chi(|k|), theta_j = chi(|k|/2^{j+1}) - chi(|k|/2^j),
// and the top block j_max = log2(n/2) - 1 is the remainder 1 - chi(|k|/2^{j_max}),
// which keeps the exact telescoping identity sum_j theta_j = 1.
class DyadicPartition {
 public:
  explicit DyadicPartition(const Grid& g);

  static double chi(double r);

  int jmin() const { return -1; }
  int jmax() const { return jmax_; }
  int blocks() const { return jmax_ + 2; }

  const Eigen::ArrayXd& theta(int j) const {
    if (j < -1 || j > jmax_) throw index_error("dyadic: block index out of range");
    return thetas_[size_t(j + 1)];
  }

  // Multiplier of the low-pass S_{<=j} = sum_{i<=j} Delta_i; defined for
  // j >= -2 (j = -2 is zero, jmax is the identity).
  Eigen::ArrayXd lowpass(int j) const;

  const Grid& grid() const { return grid_; }

 private:
  Grid grid_;
  int jmax_ = 0;
  std::vector<Eigen::ArrayXd> thetas_;
};

// Shared per-grid partition instance.
const DyadicPartition& partition_for(const Grid& g);

RealField lp_block(const RealField& f, int j, const DyadicPartition& P);
SpectralField lp_block(const SpectralField& f, int j, const DyadicPartition& P);

// All blocks Delta_j f and running low-pass sums S_j f = sum_{i<=j} Delta_i f
// from a single forward transform.
struct BlockDecomp {
  const DyadicPartition* part = nullptr;
  std::vector<Eigen::ArrayXd> delta;  // index j+1
  std::vector<Eigen::ArrayXd> slow;   // index j+1, slow[j+1] = S_j
};

BlockDecomp decompose_blocks(const RealField& f, const DyadicPartition& P);

}  // namespace paralab
