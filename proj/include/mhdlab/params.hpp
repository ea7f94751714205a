#pragma once

namespace mhdlab {

enum class LambdaPolicyKind { zero, ratio };

/// How the bulk viscosity lambda follows the shear viscosity mu.
struct LambdaPolicy {
  LambdaPolicyKind kind = LambdaPolicyKind::zero;
  double ratio = 0.0;  // lambda = ratio * mu when kind == ratio
};

/// Physical parameters of the Mach-scaled system. mu = eps^alpha and
/// nu = eps^beta unless `viscous` is false (inviscid test configurations).
struct PhysParams {
  double eps = 0.5;
  double alpha = 0.5;
  double beta = 0.5;
  double gamma = 1.4;
  double a = 1.0 / 1.4;
  LambdaPolicy lambda_policy{};
  bool viscous = true;

  /// Parameters with the default normalization a * gamma = 1.
  static PhysParams with_exponents(double eps, double alpha, double beta,
                                   double gamma, LambdaPolicy policy = {});
  /// Zero viscosities; alpha and beta are kept only for bookkeeping.
  static PhysParams inviscid(double eps, double gamma);

  double mu() const;
  double nu() const;
  double lambda() const;
  /// a * gamma, the squared sound speed at rho = 1 before the 1/eps^2 scaling.
  double a_gamma() const { return a * gamma; }

  /// Throws ConfigError when outside 0 < eps < 1, alpha, beta > 0,
  /// 0 < alpha + beta < 2, gamma > 1, a > 0, 2 mu + dim lambda >= 0.
  void validate(int dim) const;
};

}  // namespace mhdlab

namespace mhdlab {

/// Densities at or below this value are treated as vacuum and abort a run.
inline constexpr double kRhoFloor = 1e-8;

}  // namespace mhdlab
