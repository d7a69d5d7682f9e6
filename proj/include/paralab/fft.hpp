#pragma once

#include "paralab/grid.hpp"

namespace paralab {

// Spectral convention: f(x) = sum_k fhat_k e^{i k . x}, so the forward
// transform carries the 1/N normalization and constants live in bin 0.
SpectralField to_spectral(const RealField& f);
SpectralField to_spectral_c(const SpectralField& f);

// Inverse transform; enforces that the result is real (Hermitian input).
RealField to_physical(const SpectralField& f);
SpectralField to_physical_c(const SpectralField& f);

}  // namespace paralab
