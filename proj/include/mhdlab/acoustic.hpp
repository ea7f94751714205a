#pragma once

// Oscillation corrector: the linear acoustic system
//   d_t phi = -(1/eps) div g,   d_t g = -(1/eps) grad phi,   g = grad q,
// evolved exactly mode by mode. For a gamma != 1 the sound speed sqrt(a gamma)
// enters through tau = sqrt(a gamma) (t1 - t0) / eps.

#include <span>
#include <string>
#include <vector>

#include "mhdlab/fft.hpp"
#include "mhdlab/mollifier.hpp"
#include "mhdlab/params.hpp"

namespace mhdlab {

/// Corrector pair held spectrally; physical fields are produced on demand.
class AcousticState {
 public:
  AcousticState(double t, Spectrum phi_hat, Spectrum q_hat);
  /// Builds from physical phi and q (q's mean is discarded).
  static AcousticState from_fields(double t, const ScalarField& phi, const ScalarField& q);
  static AcousticState zero(const Grid& g, double t = 0.0);

  double t() const { return t_; }
  const Grid& grid() const { return phi_hat_.grid; }
  const Spectrum& phi_hat() const { return phi_hat_; }
  const Spectrum& q_hat() const { return q_hat_; }

  ScalarField phi() const;
  ScalarField q() const;
  /// g = grad q
  VectorField g() const;

  /// 1/2 (||phi||^2 + ||g||^2) at construction.
  double initial_energy() const { return initial_energy_; }

 private:
  friend AcousticState propagate(const AcousticState&, double, const PhysParams&);

  double t_;
  Spectrum phi_hat_;
  Spectrum q_hat_;
  double initial_energy_;
};

/// phi(0) = mollify(Pi(rho0)), g(0) = mollify(Q(sqrt(rho0) u0)), with q
/// recovered from g mode-wise and its mean pinned to 0.
AcousticState init_corrector(const ScalarField& rho0, const VectorField& u0,
                             const PhysParams& p, const MollifierSpec& m, double t0 = 0.0);

/// Exact rotation of every mode to t_target.
AcousticState propagate(const AcousticState& s, double t_target, const PhysParams& p);

/// 1/2 (||phi||^2 + ||g||^2)
double corrector_energy(const AcousticState& s);

/// |E(t) - E(0)| / E(0), or 0 for the zero state.
double isometry_check(const AcousticState& s);

/// ||Q(rho0 u0) - Q(sqrt(rho0) u0)||_2, the error of the corrector's momentum
/// approximation at t = 0.
double momentum_approximation_gap(const ScalarField& rho0, const VectorField& u0);

struct DispersionReport {
  std::vector<double> times;
  std::vector<double> phi_norms;
  std::vector<double> g_norms;
  double decay_factor = 1.0;  // phi_norms.back() / phi_norms.front()
  bool dispersive = true;
  std::string regime;  // "dispersive", "non-dispersive regime" or "trivial"
};

/// Discrete L^r norms of (phi, g) along a history. r = +inf is allowed.
/// The history must span less than box_len eps / (2 sqrt(a gamma)); otherwise
/// the report is marked "non-dispersive regime".
DispersionReport dispersion_probe(std::span<const AcousticState> history, double r,
                                  const PhysParams& p);

/// Discrete L^r norm (cell-sum quadrature), r >= 1 or +inf.
double lr_norm(const ScalarField& f, double r);

}  // namespace mhdlab
