#include "paralab/quad.hpp"

#include <cmath>

namespace paralab {

namespace {

// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix of the orthogonal
// recurrence, weights are mu0 * (first eigenvector component)^2.
Quad golub_welsch(const Eigen::VectorXd& offdiag, double mu0) {
  int n = int(offdiag.size()) + 1;
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, offdiag, Eigen::ComputeEigenvectors);
  Quad q;
  q.x = es.eigenvalues().array();
  q.w.resize(n);
  for (int i = 0; i < n; ++i) {
    double v0 = es.eigenvectors()(0, i);
    q.w[i] = mu0 * v0 * v0;
  }
  return q;
}

}  // namespace

Quad gauss_legendre(int n) {
  if (n < 1) throw std::domain_error("gauss_legendre: need at least one node");
  if (n == 1) return Quad{Eigen::ArrayXd::Zero(1), Eigen::ArrayXd::Constant(1, 2.0)};
  Eigen::VectorXd b(n - 1);
  for (int k = 1; k < n; ++k) b[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
  return golub_welsch(b, 2.0);
}

Quad gauss_legendre_on(int n, double a, double b) {
  Quad q = gauss_legendre(n);
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  q.x = mid + half * q.x;
  q.w = half * q.w;
  return q;
}

Quad gauss_hermite_prob(int n) {
  if (n < 1) throw std::domain_error("gauss_hermite_prob: need at least one node");
  if (n == 1) return Quad{Eigen::ArrayXd::Zero(1), Eigen::ArrayXd::Constant(1, 1.0)};
  Eigen::VectorXd b(n - 1);
  for (int k = 1; k < n; ++k) b[k - 1] = std::sqrt(double(k));
  return golub_welsch(b, 1.0);
}

}  // namespace paralab
