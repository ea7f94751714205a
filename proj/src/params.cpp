#include "mhdlab/params.hpp"

#include <cmath>
#include <sstream>

#include "mhdlab/errors.hpp"

namespace mhdlab {

PhysParams PhysParams::with_exponents(double eps, double alpha, double beta,
                                      double gamma, LambdaPolicy policy) {
  PhysParams p;
  p.eps = eps;
  p.alpha = alpha;
  p.beta = beta;
  p.gamma = gamma;
  p.a = 1.0 / gamma;
  p.lambda_policy = policy;
  return p;
}

PhysParams PhysParams::inviscid(double eps, double gamma) {
  PhysParams p = with_exponents(eps, 0.5, 0.5, gamma);
  p.viscous = false;
  return p;
}

double PhysParams::mu() const { return viscous ? std::pow(eps, alpha) : 0.0; }

double PhysParams::nu() const { return viscous ? std::pow(eps, beta) : 0.0; }

double PhysParams::lambda() const {
  return lambda_policy.kind == LambdaPolicyKind::ratio ? lambda_policy.ratio * mu() : 0.0;
}

void PhysParams::validate(int dim) const {
  auto fail = [](const std::string& what) { throw ConfigError("PhysParams: " + what); };
  if (!(eps > 0.0 && eps < 1.0)) fail("eps must lie in (0, 1)");
  if (!(alpha > 0.0) || !(beta > 0.0)) fail("alpha and beta must be positive");
  if (!(alpha + beta < 2.0)) fail("alpha + beta must be below 2");
  if (!(gamma > 1.0) || !std::isfinite(gamma)) fail("gamma must exceed 1");
  if (!(a > 0.0) || !std::isfinite(a)) fail("a must be positive");
  if (!(2.0 * mu() + dim * lambda() >= 0.0)) {
    std::ostringstream os;
    os << "2 mu + " << dim << " lambda must be nonnegative";
    fail(os.str());
  }
}

}  // namespace mhdlab
