#pragma once

#include <vector>

#include "paralab/dyadic.hpp"

namespace paralab {

// Even bump c e^{-1/(1-t^2)} on (-1,1) with unit mass.
class Mollifier {
 public:
  Mollifier();
  double operator()(double t) const;
  double mass_check(int nodes = 400) const;  // quadrature re-check of the mass

 private:
  double c_ = 0;
};

struct ModifiedPara {
  SpaceTimeField field;
  std::vector<int> degenerate_blocks;  // blocks whose kernel collapsed to the nearest frame
};

// Time-smoothed paraproduct: block j of g pairs with f smoothed over the time
// scale 2^{-2j} (integer-frequency normalization), kernel nodes clamped to the
// trajectory's time range and renormalized to unit discrete mass.
ModifiedPara modified_para_lt(const SpaceTimeField& f, const SpaceTimeField& g,
                              const Mollifier& q = Mollifier());

}  // namespace paralab
