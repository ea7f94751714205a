#pragma once

#include <array>
#include <string>
#include <vector>

#include "mhdlab/acoustic.hpp"
#include "mhdlab/compressible.hpp"
#include "mhdlab/ideal.hpp"
#include "mhdlab/params.hpp"

namespace mhdlab {

/// (rho - 1) / eps
ScalarField phi_epsilon(const ScalarField& rho, const PhysParams& p);

/// Pointwise density surrogate, signed by default (see pi_value).
/// Throws VacuumError if any rho <= kRhoFloor.
ScalarField pi_epsilon(const ScalarField& rho, const PhysParams& p, bool signed_variant = true);

/// Halved squared L^2 distances between the compressible solution and the
/// limit solution plus the corrector.
struct ModulatedComponents {
  double t = 0.0;
  double w2 = 0.0;  // 1/2 ||sqrt(rho) u - u_lim - g||^2
  double Z2 = 0.0;  // 1/2 ||H_eps - H_lim||^2
  double pi2 = 0.0; // 1/2 ||Pi - phi_corr||^2
  double total = 0.0;
  double uncorrected_w2 = 0.0;   // 1/2 ||sqrt(rho) u - u_lim||^2
  double uncorrected_pi2 = 0.0;  // 1/2 ||Pi||^2
};

/// Throws UsageError unless the three states sit on one grid at times within
/// time_tol of each other.
ModulatedComponents modulated_components(const CompressibleState& c, const IdealState& i,
                                         const AcousticState& a, const PhysParams& p,
                                         bool signed_pi = true, double time_tol = 1e-12);

/// Axis-aligned box used for the local L^2 norm.
struct Subdomain {
  std::array<double, 3> lo{0.0, 0.0, 0.0};
  std::array<double, 3> hi{0.0, 0.0, 0.0};

  static Subdomain whole(const Grid& g);
  bool contains(const std::array<double, 3>& x, int dim) const;
};

struct TheoremNorms {
  double t = 0.0;
  double lq2_rho = 0.0;   // ||rho - 1||_{L^gamma_2}
  double l2_Zh = 0.0;     // ||H_eps - H_lim||
  double l2_Pu = 0.0;     // ||P(sqrt(rho) u) - u_lim||
  double l2_local = 0.0;  // ||sqrt(rho) u - u_lim|| on the subdomain
};

TheoremNorms theorem_norms(const CompressibleState& c, const IdealState& i, const PhysParams& p,
                           const Subdomain& sub, double time_tol = 1e-12);

struct RatePoint {
  double eps = 0.0;
  double sup_total = 0.0;
  double initial_misfit = 0.0;
};

struct RateReport {
  std::vector<double> eps_values;      // descending
  std::vector<double> sup_mod_total;
  std::vector<double> initial_misfit;
  std::vector<double> pair_slopes;     // between consecutive rows; size - 1 entries
  double fitted_slope = 0.0;
  double sigma_theory = 0.0;
  std::vector<std::string> excluded;   // case ids left out of the fit
};

/// Least squares slope of log(sup_total) against log(eps) over distinct eps.
/// Throws InsufficientDataError with fewer than 3 distinct eps values.
RateReport fit_rate(std::vector<RatePoint> points, double alpha, double beta);

}  // namespace mhdlab
