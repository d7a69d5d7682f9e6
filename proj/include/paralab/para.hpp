#pragma once

#include "paralab/dyadic.hpp"

namespace paralab {

// Bony decomposition: fg = f<g + f~g + f>g with
//   f<g = sum_j S_{j-2} f . Delta_j g   (low-high)
//   f~g = sum_{|i-j|<=1} Delta_i f . Delta_j g (resonant)
//   f>g = g<f.
RealField para_lt(const BlockDecomp& f, const BlockDecomp& g);
RealField resonant(const BlockDecomp& f, const BlockDecomp& g);

RealField para_lt(const RealField& f, const RealField& g);
RealField para_gt(const RealField& f, const RealField& g);
RealField resonant(const RealField& f, const RealField& g);
RealField para_leq(const RealField& f, const RealField& g);  // < plus resonant
RealField para_geq(const RealField& f, const RealField& g);  // > plus resonant

// com(f, g, h) = (f<g) ~ h - f (g ~ h)
RealField commutator(const RealField& f, const RealField& g, const RealField& h);

}  // namespace paralab
