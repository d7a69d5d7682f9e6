#pragma once

#include <vector>

#include "paralab/grid.hpp"

namespace paralab {

// Dense univariate polynomial, ascending coefficients.
struct Poly {
  std::vector<double> c;

  Poly() = default;
  explicit Poly(std::vector<double> coeffs) : c(std::move(coeffs)) { trim(); }
  static Poly monomial(int k, double a = 1.0) {
    std::vector<double> v(size_t(k) + 1, 0.0);
    v[size_t(k)] = a;
    return Poly(std::move(v));
  }

  int degree() const { return int(c.size()) - 1; }  // -1 for the zero polynomial
  bool zero() const { return c.empty(); }

  double operator()(double x) const {
    double acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  }
  Eigen::ArrayXd operator()(const Eigen::ArrayXd& x) const {
    Eigen::ArrayXd acc = Eigen::ArrayXd::Zero(x.size());
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  }

  Poly derivative(int k = 1) const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(double a) const;
  // p(a x)
  Poly compose_linear(double a) const;

  void trim() {
    while (!c.empty() && c.back() == 0.0) c.pop_back();
  }
};

// Hermite polynomial H_n(x; sigma2) with variance parameter:
// H_0 = 1, H_1 = x, H_{n+1} = x H_n - n sigma2 H_{n-1}.
double hermite(int n, double x, double sigma2);
Eigen::ArrayXd hermite(int n, const Eigen::ArrayXd& x, double sigma2);
Poly hermite_poly(int n, double sigma2);

// Wick power of a field with the given variance parameter; n in [0, 9].
RealField wick_power(const RealField& f, int n, double sigma2);

}  // namespace paralab
