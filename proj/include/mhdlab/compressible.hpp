#pragma once

// Mach-scaled compressible MHD in conservative variables (rho, m = rho u, H):
//
//   d_t rho + div m = 0
//   d_t m + div(rho u (x) u) + (a/eps^2) grad rho^gamma
//       = (H.grad)H - 1/2 grad|H|^2 + mu lap u + (mu + lambda) grad div u
//   d_t H + (div u) H + (u.grad)H - (H.grad)u = nu lap H,   div H = 0
//
// Quadratic and higher products are de-aliased with the 2/3 rule.

#include <vector>

#include "mhdlab/field.hpp"
#include "mhdlab/params.hpp"

namespace mhdlab {

struct CompressibleState {
  double t = 0.0;
  ScalarField rho;
  VectorField mom;
  VectorField H;
};

/// Time derivatives with the convention dX/dt = derivative.
struct StateDerivative {
  ScalarField rho;
  VectorField mom;
  VectorField H;
};

/// The momentum right-hand side split term by term.
struct MomentumTerms {
  VectorField convection;          // -div(rho u (x) u)
  VectorField pressure_linear;     // -(a gamma / eps^2) grad rho
  VectorField pressure_remainder;  // -(a / eps^2) grad(rho^gamma - 1 - gamma (rho - 1))
  VectorField magnetic_tension;    // (H.grad) H
  VectorField magnetic_pressure;   // -1/2 grad |H|^2
  VectorField shear_viscous;       // mu lap u
  VectorField bulk_viscous;        // (mu + lambda) grad div u

  VectorField total() const;
};

enum class TimeScheme { rk4_explicit, imex_acoustic };

enum class Model {
  full,
  /// d_t rho = -div m, d_t m = -(a gamma/eps^2) grad rho, H frozen.
  linearized_acoustic,
};

struct StepOptions {
  TimeScheme scheme = TimeScheme::imex_acoustic;
  double cfl = 0.4;
  Model model = Model::full;
};

/// Per-constraint step bounds before the cfl factor; +inf when inactive.
struct StepLimits {
  double acoustic;
  double advective;
  double magnetic;
  double viscous;
};

/// u = m / rho. Throws VacuumError if any rho <= kRhoFloor.
VectorField velocity(const CompressibleState& s);

MomentumTerms momentum_terms(const CompressibleState& s, const PhysParams& p);

/// Full right-hand side of the chosen model.
StateDerivative rhs(const CompressibleState& s, const PhysParams& p,
                    Model model = Model::full);

/// Everything except the linear acoustic pair (-div m, -(a gamma/eps^2) grad rho),
/// i.e. the explicit part of the IMEX splitting.
StateDerivative rhs_nonstiff(const CompressibleState& s, const PhysParams& p);

StepLimits step_limits(const CompressibleState& s, const PhysParams& p);

/// cfl * min of the limits that apply to the scheme (the acoustic bound is
/// dropped for imex_acoustic).
double stable_dt(const CompressibleState& s, const PhysParams& p, const StepOptions& opt);

/// Advances one step and replaces H by its divergence-free part.
/// Throws StepSizeError when dt exceeds stable_dt, VacuumError on vacuum.
CompressibleState step(const CompressibleState& s, const PhysParams& p, double dt,
                       const StepOptions& opt = {});

/// Exact-in-time Crank-Nicolson update of the linear acoustic pair over dt.
/// Exposed for testing; step() uses it for the implicit half steps.
void acoustic_crank_nicolson(CompressibleState& s, const PhysParams& p, double dt);

/// int [ 1/2 rho |u|^2 + 1/2 |H|^2 + 1/2 Pi^2 ]
double energy_total(const CompressibleState& s, const PhysParams& p);

/// int [ mu |grad u|^2 + (mu + lambda) |div u|^2 + nu |grad H|^2 ]
double energy_dissipation(const CompressibleState& s, const PhysParams& p);

double total_mass(const CompressibleState& s);

struct EnergyRecord {
  double t = 0.0;
  double E = 0.0;
  double D = 0.0;
  double D_cum = 0.0;
  double slack = 0.0;
};

struct EnergyInequalityReport {
  double min_slack = 0.0;
  double tolerance = 0.0;
  std::size_t worst_index = 0;
  bool violated = false;
};

/// Fills D_cum (trapezoidal rule over the record times) and
/// slack = E(0) - E(t) - D_cum, then flags min slack < -(1e-3 E(0) + 1e-12).
EnergyInequalityReport check_energy_inequality(std::vector<EnergyRecord>& records);

/// Monitored terms of ||u||^2 <= C + C eps^{4/d} ||grad u||^2.
struct VelocityBoundTerms {
  double u_sq;
  double scaled_grad_sq;
};
VelocityBoundTerms velocity_bound_terms(const CompressibleState& s, const PhysParams& p);

}  // namespace mhdlab
