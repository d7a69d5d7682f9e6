#pragma once

#include <vector>

#include "paralab/dyadic.hpp"

namespace paralab {

// Scale-adapted localization: dyadic shells w_k around the origin in space
// (k = -1 the unit ball, top shell the telescoping remainder) and v_l on the
// positive time axis, with per-cell frequency cutoff L_{k,l} = L + ceil((k+l)/2).
//   highpass_part: sum_{k,l} v_l w_k Delta_{> L_{k,l}} f
//   lowpass_part:  sum_{k,l} v_l w_k Delta_{<= L_{k,l}} f
// The two parts sum to f identically.
struct Localizer {
  Localizer(const Grid& g, double dt, int nt);

  int kmax() const { return int(shells.size()) - 2; }
  int lmax() const { return int(tshells.empty() ? 0 : tshells[0].size()) - 2; }
  int level(int L, int k, int l) const {
    return L + int(std::ceil((k + l) / 2.0));
  }

  SpaceTimeField highpass_part(const SpaceTimeField& f, int L) const;
  SpaceTimeField lowpass_part(const SpaceTimeField& f, int L) const;

  std::vector<Eigen::ArrayXd> shells;          // index k+1, fields on the grid
  std::vector<std::vector<double>> tshells;    // [frame][l+1]
  Grid grid;
};

}  // namespace paralab
