#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <utility>

#include "paralab/common.hpp"

namespace paralab {

inline constexpr double pi = 3.141592653589793238462643383279502884;

// Uniform periodic grid on the centered box [-box/2, box/2)^dim with n points
// per axis. Flat indices run with axis 0 fastest.
struct Grid {
  int dim = 1;
  int n = 8;
  double box = 1.0;

  Grid() = default;
  Grid(int dim_, int n_, double box_) : dim(dim_), n(n_), box(box_) {
    if (dim < 1 || dim > 3) throw dimension_error("grid: dim must be 1, 2 or 3");
    if (n < 8 || (n & (n - 1)) != 0)
      throw std::domain_error("grid: points per axis must be a power of two >= 8");
    if (!(box > 0.0)) throw std::domain_error("grid: box length must be positive");
  }

  long size() const {
    long s = 1;
    for (int a = 0; a < dim; ++a) s *= n;
    return s;
  }
  double spacing() const { return box / n; }
  double coord(int i) const { return -0.5 * box + spacing() * i; }

  // Integer wavenumber of DFT bin i, in [-n/2, n/2].
  int kint(int i) const { return i <= n / 2 ? i : i - n; }
  double kang(int i) const { return 2.0 * pi / box * kint(i); }

  std::array<int, 3> decode(long idx) const {
    std::array<int, 3> m{0, 0, 0};
    for (int a = 0; a < dim; ++a) {
      m[a] = int(idx % n);
      idx /= n;
    }
    return m;
  }
  long encode(const std::array<int, 3>& m) const {
    long idx = 0;
    for (int a = dim - 1; a >= 0; --a) idx = idx * n + m[a];
    return idx;
  }

  // |k|^2 in angular units, per flat spectral index.
  Eigen::ArrayXd mode_k2() const {
    Eigen::ArrayXd out(size());
    for (long idx = 0; idx < size(); ++idx) {
      auto m = decode(idx);
      double s = 0;
      for (int a = 0; a < dim; ++a) {
        double k = kang(m[a]);
        s += k * k;
      }
      out[idx] = s;
    }
    return out;
  }

  // Sup-norm integer wavenumber per flat spectral index.
  Eigen::ArrayXd mode_ksup() const {
    Eigen::ArrayXd out(size());
    for (long idx = 0; idx < size(); ++idx) {
      auto m = decode(idx);
      double s = 0;
      for (int a = 0; a < dim; ++a) s = std::max(s, double(std::abs(kint(m[a]))));
      out[idx] = s;
    }
    return out;
  }

  // Squared Euclidean distance to the box center, per flat physical index.
  Eigen::ArrayXd radius2() const {
    Eigen::ArrayXd out(size());
    for (long idx = 0; idx < size(); ++idx) {
      auto m = decode(idx);
      double s = 0;
      for (int a = 0; a < dim; ++a) {
        double x = coord(m[a]);
        s += x * x;
      }
      out[idx] = s;
    }
    return out;
  }

  bool same(const Grid& o) const { return dim == o.dim && n == o.n && box == o.box; }
};

inline void check_same_grid(const Grid& a, const Grid& b) {
  if (!a.same(b)) throw dimension_error("mismatched grids");
}

template <class Scalar>
struct FieldT {
  using Storage = Eigen::Array<Scalar, Eigen::Dynamic, 1>;
  Grid grid;
  Storage data;

  FieldT() = default;
  explicit FieldT(const Grid& g) : grid(g), data(Storage::Zero(g.size())) {}
  FieldT(const Grid& g, Storage d) : grid(g), data(std::move(d)) {
    if (data.size() != grid.size()) throw dimension_error("field: data size does not match grid");
  }
  template <class Expr>
  FieldT(const Grid& g, const Eigen::ArrayBase<Expr>& e) : grid(g), data(e) {
    if (data.size() != grid.size()) throw dimension_error("field: data size does not match grid");
  }
};

using RealField = FieldT<double>;
using SpectralField = FieldT<std::complex<double>>;

// Evaluate f(x[0..dim-1]) at every grid point.
template <class F>
RealField sample(const Grid& g, F&& f) {
  RealField out(g);
  for (long idx = 0; idx < g.size(); ++idx) {
    auto m = g.decode(idx);
    std::array<double, 3> x{0, 0, 0};
    for (int a = 0; a < g.dim; ++a) x[a] = g.coord(m[a]);
    out.data[idx] = f(x);
  }
  return out;
}

// Frame-indexed trajectory of real fields; column n is the field at time n*dt.
struct SpaceTimeField {
  Grid grid;
  double dt = 0;
  Eigen::ArrayXXd frames;

  SpaceTimeField() = default;
  SpaceTimeField(const Grid& g, double dt_, int n_t)
      : grid(g), dt(dt_), frames(Eigen::ArrayXXd::Zero(g.size(), n_t)) {
    if (!(dt > 0)) throw std::domain_error("space-time field: dt must be positive");
    if (n_t < 2) throw std::domain_error("space-time field: need at least two frames");
  }

  int nt() const { return int(frames.cols()); }
  double time(int n) const { return dt * n; }
  double horizon() const { return dt * (nt() - 1); }
  RealField frame(int n) const {
    if (n < 0 || n >= nt()) throw index_error("space-time field: frame index out of range");
    return RealField(grid, frames.col(n));
  }
  void set_frame(int n, const RealField& f) {
    check_same_grid(grid, f.grid);
    if (n < 0 || n >= nt()) throw index_error("space-time field: frame index out of range");
    frames.col(n) = f.data;
  }
};

inline void check_same_shape(const SpaceTimeField& a, const SpaceTimeField& b) {
  check_same_grid(a.grid, b.grid);
  if (a.nt() != b.nt() || a.dt != b.dt)
    throw dimension_error("space-time fields: frame layout mismatch");
}

}  // namespace paralab
