#include "paralab/stats.hpp"

#include <algorithm>
#include <cmath>

namespace paralab {

namespace {

// Two-sided 97.5% Student-t quantiles for small samples, 1.96 beyond.
double t975(int df) {
  static const double tab[] = {12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306,
                               2.262,  2.228, 2.201, 2.179, 2.160, 2.145, 2.131, 2.120,
                               2.110,  2.101, 2.093, 2.086, 2.080, 2.074, 2.069, 2.064,
                               2.060,  2.056, 2.052, 2.048, 2.045, 2.042};
  if (df < 1) return 0.0;
  if (df <= 30) return tab[df - 1];
  return 1.96;
}

double quantile_sorted(const std::vector<double>& v, double p) {
  if (v.empty()) return 0.0;
  double pos = p * double(v.size() - 1);
  size_t lo = size_t(std::floor(pos));
  size_t hi = std::min(lo + 1, v.size() - 1);
  double t = pos - double(lo);
  return (1.0 - t) * v[lo] + t * v[hi];
}

}  // namespace

SlopeFit fit_slope(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y) {
  if (x.size() != y.size()) throw dimension_error("fit_slope: length mismatch");
  int n = int(x.size());
  if (n < 2) throw fit_error("fit_slope: need at least two points");
  double xm = x.mean(), ym = y.mean();
  double sxx = ((x - xm) * (x - xm)).sum();
  if (!(sxx > 0)) throw fit_error("fit_slope: degenerate abscissae");
  double sxy = ((x - xm) * (y - ym)).sum();

  SlopeFit out;
  out.points = n;
  out.slope = sxy / sxx;
  out.intercept = ym - out.slope * xm;
  if (n > 2) {
    Eigen::ArrayXd res = y - (out.slope * x + out.intercept);
    double s2 = (res * res).sum() / double(n - 2);
    out.ci95 = t975(n - 2) * std::sqrt(s2 / sxx);
  }
  return out;
}

RegularityEstimate measure_regularity(const SpaceTimeField& f, const Weight& w, int jmin,
                                      int jmax) {
  const DyadicPartition& P = partition_for(f.grid);
  if (jmax < 0) jmax = P.jmax();
  if (jmin < P.jmin() || jmax > P.jmax() || jmin > jmax)
    throw index_error("measure_regularity: block range out of partition");
  int avail = jmax - jmin + 1;
  if (avail < 4) throw resolution_error("measure_regularity: need at least 4 dyadic blocks");

  Eigen::ArrayXd wfield = w.field(f.grid).data;
  Eigen::ArrayXd norm = Eigen::ArrayXd::Zero(avail);
  for (int n = 0; n < f.nt(); ++n) {
    BlockDecomp blocks = decompose_blocks(f.frame(n), P);
    for (int j = jmin; j <= jmax; ++j) {
      double v = (wfield * blocks.delta[size_t(j + 1)]).abs().maxCoeff();
      norm[j - jmin] = std::max(norm[j - jmin], v);
    }
  }

  RegularityEstimate est;
  std::vector<double> js, logs;
  for (int i = 0; i < avail; ++i) {
    if (norm[i] > 0) {
      js.push_back(double(jmin + i));
      logs.push_back(std::log2(norm[i]));
    }
  }
  if (int(js.size()) < 4)
    throw fit_error("measure_regularity: blocks below noise floor");
  est.j = Eigen::Map<const Eigen::ArrayXd>(js.data(), long(js.size()));
  est.lognorm = Eigen::Map<const Eigen::ArrayXd>(logs.data(), long(logs.size()));
  est.fit = fit_slope(est.j, (-est.lognorm).eval());
  return est;
}

RegularityEstimate measure_regularity(const RealField& f, const Weight& w, int jmin, int jmax) {
  SpaceTimeField wrap(f.grid, 1.0, 2);
  wrap.set_frame(0, f);
  wrap.set_frame(1, f);
  return measure_regularity(wrap, w, jmin, jmax);
}

EnsembleRegularity regularity_ensemble(const std::vector<double>& alphas) {
  if (alphas.empty()) throw fit_error("regularity_ensemble: empty ensemble");
  EnsembleRegularity out;
  out.alphas = Eigen::Map<const Eigen::ArrayXd>(alphas.data(), long(alphas.size()));
  out.mean = out.alphas.mean();
  int n = int(alphas.size());
  if (n > 1) {
    double sd = std::sqrt((out.alphas - out.mean).square().sum() / double(n - 1));
    out.ci95 = t975(n - 1) * sd / std::sqrt(double(n));
  }
  return out;
}

DecayReport decay_report(const Eigen::ArrayXXd& norms, const Eigen::ArrayXd& eps, double kappa) {
  if (norms.cols() != eps.size()) throw dimension_error("decay_report: eps grid mismatch");
  if (norms.rows() < 1) throw fit_error("decay_report: empty ensemble");
  if ((norms < 0).any()) throw std::domain_error("decay_report: norms must be nonnegative");

  DecayReport rep;
  rep.eps = eps;
  rep.kappa = kappa;
  int ne = int(eps.size());
  rep.mean.resize(ne);
  rep.q25.resize(ne);
  rep.q50.resize(ne);
  rep.q75.resize(ne);

  std::vector<double> le, lm;
  for (int c = 0; c < ne; ++c) {
    std::vector<double> col(norms.col(c).data(), norms.col(c).data() + norms.rows());
    std::sort(col.begin(), col.end());
    rep.mean[c] = norms.col(c).mean();
    rep.q25[c] = quantile_sorted(col, 0.25);
    rep.q50[c] = quantile_sorted(col, 0.50);
    rep.q75[c] = quantile_sorted(col, 0.75);
    if (rep.mean[c] == 0.0) {
      rep.exact = true;
    } else {
      le.push_back(std::log2(eps[c]));
      lm.push_back(std::log2(rep.mean[c]));
    }
  }
  if (int(le.size()) >= 2) {
    rep.fit = fit_slope(Eigen::Map<const Eigen::ArrayXd>(le.data(), long(le.size())),
                        Eigen::Map<const Eigen::ArrayXd>(lm.data(), long(lm.size())));
  } else if (!rep.exact) {
    throw fit_error("decay_report: need at least two epsilon points");
  }
  return rep;
}

void write_tree_table(CsvWriter& csv, const std::vector<TreeRegRow>& rows) {
  for (const auto& r : rows)
    csv.row({r.component, CsvWriter::num(r.eps), CsvWriter::num(r.alpha),
             CsvWriter::num(r.ci95), CsvWriter::num(r.target)});
}

}  // namespace paralab
