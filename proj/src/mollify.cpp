#include "paralab/mollify.hpp"

#include <cmath>
#include <set>

#include "paralab/fft.hpp"
#include "paralab/quad.hpp"

namespace paralab {

namespace {

double bump(double t) { return std::abs(t) < 1.0 ? std::exp(-1.0 / (1.0 - t * t)) : 0.0; }

}  // namespace

Mollifier::Mollifier() {
  Quad q = gauss_legendre_on(200, -1.0, 1.0);
  double mass = 0;
  for (int i = 0; i < q.x.size(); ++i) mass += q.w[i] * bump(q.x[i]);
  c_ = 1.0 / mass;
}

double Mollifier::operator()(double t) const { return c_ * bump(t); }

double Mollifier::mass_check(int nodes) const {
  Quad q = gauss_legendre_on(nodes, -1.0, 1.0);
  double mass = 0;
  for (int i = 0; i < q.x.size(); ++i) mass += q.w[i] * (*this)(q.x[i]);
  return mass;
}

ModifiedPara modified_para_lt(const SpaceTimeField& f, const SpaceTimeField& g,
                              const Mollifier& q) {
  check_same_shape(f, g);
  const Grid& gr = f.grid;
  const DyadicPartition& P = partition_for(gr);
  const double dt = f.dt;
  const int nt = f.nt();

  ModifiedPara out{SpaceTimeField(gr, dt, nt), {}};
  std::set<int> degenerate;

  std::vector<Eigen::ArrayXd> low(size_t(P.jmax() + 2));
  for (int j = -1; j <= P.jmax(); ++j) low[size_t(j + 1)] = P.lowpass(j);

  for (int n = 0; n < nt; ++n) {
    SpectralField ghat = to_spectral(g.frame(n));
    Eigen::ArrayXd acc = Eigen::ArrayXd::Zero(gr.size());
    for (int j = 1; j <= P.jmax(); ++j) {
      double width = std::pow(2.0, -2.0 * j);
      Eigen::ArrayXd smoothed;
      if (width < dt) {
        degenerate.insert(j);
        smoothed = f.frames.col(n);
      } else {
        // trapezoid over frame times in [t_n - width, t_n + width]; nodes
        // past the ends read the clamped frame, weights renormalized to 1
        int m0 = int(std::floor((f.time(n) - width) / dt));
        int m1 = int(std::ceil((f.time(n) + width) / dt));
        smoothed = Eigen::ArrayXd::Zero(gr.size());
        double wsum = 0;
        for (int m = m0; m <= m1; ++m) {
          double wgt = q((f.time(n) - m * dt) / width);
          if (wgt == 0.0) continue;
          if (m == m0 || m == m1) wgt *= 0.5;
          int mc = std::min(nt - 1, std::max(0, m));
          smoothed += wgt * f.frames.col(mc);
          wsum += wgt;
        }
        if (wsum <= 0) {
          degenerate.insert(j);
          smoothed = f.frames.col(n);
        } else {
          smoothed /= wsum;
        }
      }
      SpectralField sh = to_spectral(RealField(gr, smoothed));
      sh.data *= low[size_t(j - 1)].cast<std::complex<double>>();
      Eigen::ArrayXd slow_smoothed = to_physical(sh).data;

      SpectralField bh(gr);
      bh.data = ghat.data * P.theta(j).cast<std::complex<double>>();
      acc += slow_smoothed * to_physical(bh).data;
    }
    out.field.frames.col(n) = acc;
  }
  out.degenerate_blocks.assign(degenerate.begin(), degenerate.end());
  return out;
}

}  // namespace paralab
