#include "paralab/params.hpp"

#include <cmath>

namespace paralab {

void AnalysisParams::validate() const {
  auto fail = [](const std::string& what) { throw config_error("params: " + what); };
  if (m < 5 || m % 2 == 0) fail("m must be odd and at least 5");
  if (m1 < 4 || m1 > m) fail("m1 must lie in [4, m]");
  if (!(mu > 0)) fail("mu must be positive");
  if (!(nu > 0)) fail("nu must be positive");
  if (!(alpha > 0) || !(alpha < 3.0 / (10.0 * m))) fail("alpha must lie in (0, 3/(10 m))");
  if (!(kappa > 0) || !(kappa < alpha)) fail("kappa must lie in (0, alpha)");
  if (std::abs(gamma - (alpha - kappa)) > 1e-12) fail("gamma must equal alpha - kappa");
  if (!(eps_exp > 0) || !(eps_exp < gamma)) fail("eps_exp must lie in (0, gamma)");
  if (!(gamma + eps_exp < 4.0 * alpha * alpha)) fail("gamma + eps_exp must stay below 4 alpha^2");
  if (!(gamma1 > 4.0 * alpha)) fail("gamma1 must exceed 4 alpha");
  if (!(gamma_dprime < gamma_prime) || !(gamma_prime < gamma1))
    fail("need gamma_dprime < gamma_prime < gamma1");
  if (!(gamma_dprime > 0)) fail("gamma_dprime must be positive");
  if (!(alpha > gamma * (1.0 + gamma1 - alpha) / (2.0 - gamma)))
    fail("weight budget violated: alpha too small for gamma, gamma1");
  if (!(sigma_w > 0)) fail("sigma_w must be positive");
  if (!(delta > 0) || !(delta < 1)) fail("delta must lie in (0, 1)");
  if (!(delta0 > 0) || !(delta0 < 1)) fail("delta0 must lie in (0, 1)");
}

AnalysisParams default_params() {
  AnalysisParams p;
  p.validate();
  return p;
}

}  // namespace paralab
