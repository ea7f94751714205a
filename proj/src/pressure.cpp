#include "mhdlab/pressure.hpp"

#include <cmath>

#include "mhdlab/errors.hpp"

namespace mhdlab {

double pressure_potential(double rho, double gamma) {
  const double x = rho - 1.0;
  const double ax = std::abs(x);
  if (ax < 1e-4) {
    return 0.5 * gamma * (gamma - 1.0) * x * x *
           (1.0 + (gamma - 2.0) * x / 3.0 +
            (gamma - 2.0) * (gamma - 3.0) * x * x / 12.0);
  }
  if (ax < 0.5) {
    // binomial series sum_{j>=2} C(gamma, j) x^j; the leading term dominates
    double c = 0.5 * gamma * (gamma - 1.0);
    double xp = x * x;
    double acc = c * xp;
    for (int j = 3; j < 200; ++j) {
      c *= (gamma - j + 1.0) / j;
      xp *= x;
      const double term = c * xp;
      acc += term;
      if (std::abs(term) <= 1e-18 * std::abs(acc)) break;
    }
    return std::max(acc, 0.0);
  }
  return std::max(std::pow(rho, gamma) - 1.0 - gamma * x, 0.0);
}

double pi_value(double rho, const PhysParams& p, bool signed_variant) {
  if (!(rho > kRhoFloor)) throw VacuumError("density at or below vacuum floor");
  const double v =
      std::sqrt(2.0 * p.a / (p.gamma - 1.0) * pressure_potential(rho, p.gamma)) / p.eps;
  if (signed_variant && rho < 1.0) return -v;
  return v;
}

}  // namespace mhdlab
