#include "paralab/hermite.hpp"

#include "paralab/common.hpp"

namespace paralab {

Poly Poly::derivative(int k) const {
  Poly p = *this;
  for (int r = 0; r < k; ++r) {
    if (p.c.size() <= 1) return Poly();
    std::vector<double> d(p.c.size() - 1);
    for (size_t i = 1; i < p.c.size(); ++i) d[i - 1] = double(i) * p.c[i];
    p = Poly(std::move(d));
  }
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<double> v(std::max(c.size(), o.c.size()), 0.0);
  for (size_t i = 0; i < c.size(); ++i) v[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) v[i] += o.c[i];
  return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + o.scaled(-1.0); }

Poly Poly::operator*(const Poly& o) const {
  if (zero() || o.zero()) return Poly();
  std::vector<double> v(c.size() + o.c.size() - 1, 0.0);
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < o.c.size(); ++j) v[i + j] += c[i] * o.c[j];
  return Poly(std::move(v));
}

Poly Poly::scaled(double a) const {
  std::vector<double> v = c;
  for (double& x : v) x *= a;
  return Poly(std::move(v));
}

Poly Poly::compose_linear(double a) const {
  std::vector<double> v = c;
  double f = 1.0;
  for (size_t i = 0; i < v.size(); ++i) {
    v[i] *= f;
    f *= a;
  }
  return Poly(std::move(v));
}

double hermite(int n, double x, double sigma2) {
  require(n >= 0, "hermite: order must be nonnegative");
  if (n == 0) return 1.0;
  double hm = 1.0, h = x;
  for (int k = 1; k < n; ++k) {
    double next = x * h - double(k) * sigma2 * hm;
    hm = h;
    h = next;
  }
  return h;
}

Eigen::ArrayXd hermite(int n, const Eigen::ArrayXd& x, double sigma2) {
  require(n >= 0, "hermite: order must be nonnegative");
  if (n == 0) return Eigen::ArrayXd::Ones(x.size());
  Eigen::ArrayXd hm = Eigen::ArrayXd::Ones(x.size());
  Eigen::ArrayXd h = x;
  for (int k = 1; k < n; ++k) {
    Eigen::ArrayXd next = x * h - double(k) * sigma2 * hm;
    hm = std::move(h);
    h = std::move(next);
  }
  return h;
}

Poly hermite_poly(int n, double sigma2) {
  require(n >= 0, "hermite_poly: order must be nonnegative");
  Poly hm = Poly::monomial(0);
  if (n == 0) return hm;
  Poly h = Poly::monomial(1);
  for (int k = 1; k < n; ++k) {
    Poly next = Poly::monomial(1) * h - hm.scaled(double(k) * sigma2);
    hm = std::move(h);
    h = std::move(next);
  }
  return h;
}

RealField wick_power(const RealField& f, int n, double sigma2) {
  require(n >= 0 && n <= 9, "wick_power: order must lie in [0, 9]");
  return RealField(f.grid, hermite(n, f.data, sigma2));
}

}  // namespace paralab
