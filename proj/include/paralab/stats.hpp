#pragma once

#include <string>
#include <vector>

#include "paralab/io.hpp"
#include "paralab/norms.hpp"

namespace paralab {

// Least-squares line y = slope x + intercept with a t-based 95% half width on
// the slope. Needs at least three points for a finite band.
struct SlopeFit {
  double slope = 0;
  double intercept = 0;
  double ci95 = 0;
  int points = 0;
};

SlopeFit fit_slope(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y);

// Besov exponent estimate: least-squares slope of -log2 || rho Delta_j f ||_inf
// against j, block norms taken as sup over frames. Blocks that vanish exactly
// are dropped; fewer than four usable blocks is a fit error, fewer than four
// available ones a resolution error.
struct RegularityEstimate {
  Eigen::ArrayXd j;        // usable block indices
  Eigen::ArrayXd lognorm;  // log2 of the weighted block sup norms
  SlopeFit fit;            // fit of -lognorm against j
  double alpha() const { return fit.slope; }
};

RegularityEstimate measure_regularity(const SpaceTimeField& f, const Weight& w, int jmin = 0,
                                      int jmax = -1);
RegularityEstimate measure_regularity(const RealField& f, const Weight& w, int jmin = 0,
                                      int jmax = -1);

// Per-member exponents of an ensemble plus the t-based band of the mean.
struct EnsembleRegularity {
  Eigen::ArrayXd alphas;
  double mean = 0;
  double ci95 = 0;
};

EnsembleRegularity regularity_ensemble(const std::vector<double>& alphas);

// Decay of an ensemble statistic along an epsilon grid. norms is member x eps;
// the fit runs over log2 of the column means against log2 eps, so a decay like
// eps^kappa shows up as slope kappa. Columns that vanish for every member mark
// the statistic as exact and are excluded from the fit.
struct DecayReport {
  Eigen::ArrayXd eps;
  Eigen::ArrayXd mean, q25, q50, q75;
  SlopeFit fit;
  bool exact = false;  // all-zero statistic on at least one column
  double kappa = 0;    // comparison target
  bool passed() const { return exact || fit.slope >= kappa - 0.15; }
};

DecayReport decay_report(const Eigen::ArrayXXd& norms, const Eigen::ArrayXd& eps, double kappa);

// Rows of the regularity table emitted by the trees subcommand.
struct TreeRegRow {
  std::string component;
  double eps = 0;
  double alpha = 0;
  double ci95 = 0;
  double target = 0;
};

void write_tree_table(CsvWriter& csv, const std::vector<TreeRegRow>& rows);

}  // namespace paralab
