#include "paralab/fft.hpp"

#include <unsupported/Eigen/FFT>
#include <map>
#include <utility>
#include <vector>

namespace paralab {

namespace {

Eigen::FFT<double>& engine() {
  thread_local Eigen::FFT<double> fft;
  return fft;
}

// Phase alignment between DFT bins (box-start origin) and centered physical
// coordinates: e^{i k_a box/2} = (-1)^{kint_a}, and kint parity equals bin
// index parity, so the correction is a sign per flat index.
const Eigen::ArrayXd& centering_signs(const Grid& g) {
  thread_local std::map<std::pair<int, int>, Eigen::ArrayXd> cache;
  auto key = std::make_pair(g.dim, g.n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Eigen::ArrayXd s(g.size());
  for (long idx = 0; idx < g.size(); ++idx) {
    auto m = g.decode(idx);
    int parity = 0;
    for (int a = 0; a < g.dim; ++a) parity += m[a];
    s[idx] = (parity & 1) ? -1.0 : 1.0;
  }
  return cache.emplace(key, std::move(s)).first->second;
}

// In-place complex DFT along every axis. Axis a has stride n^a.
void transform_axes(const Grid& g, Eigen::ArrayXcd& a, bool forward) {
  const int n = g.n;
  const long total = g.size();
  std::vector<std::complex<double>> line(n), out(n);
  long stride = 1;
  for (int axis = 0; axis < g.dim; ++axis) {
    const long block = stride * n;
    for (long base = 0; base < total; base += block) {
      for (long off = 0; off < stride; ++off) {
        const long start = base + off;
        for (int i = 0; i < n; ++i) line[i] = a[start + stride * i];
        if (forward)
          engine().fwd(out, line);
        else
          engine().inv(out, line);
        for (int i = 0; i < n; ++i) a[start + stride * i] = out[i];
      }
    }
    stride *= n;
  }
}

}  // namespace

SpectralField to_spectral_c(const SpectralField& f) {
  SpectralField out(f.grid, f.data);
  transform_axes(f.grid, out.data, true);
  out.data *= (centering_signs(f.grid) / double(f.grid.size())).cast<std::complex<double>>();
  return out;
}

SpectralField to_spectral(const RealField& f) {
  SpectralField c(f.grid);
  c.data = f.data.cast<std::complex<double>>();
  transform_axes(f.grid, c.data, true);
  c.data *= (centering_signs(f.grid) / double(f.grid.size())).cast<std::complex<double>>();
  return c;
}

SpectralField to_physical_c(const SpectralField& f) {
  SpectralField out(f.grid, f.data);
  out.data *= centering_signs(f.grid).cast<std::complex<double>>();
  transform_axes(f.grid, out.data, false);
  out.data *= double(f.grid.size());
  return out;
}

RealField to_physical(const SpectralField& f) {
  SpectralField c = to_physical_c(f);
  double max_im = c.data.imag().abs().maxCoeff();
  double scale = c.data.real().abs().maxCoeff();
  if (max_im > 1e-10 * std::max(1.0, scale))
    throw accuracy_error("to_physical: inverse transform is not real; spectrum breaks Hermitian symmetry");
  return RealField(f.grid, c.data.real());
}

}  // namespace paralab
