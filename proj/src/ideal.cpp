#include "mhdlab/ideal.hpp"

#include <cmath>
#include <sstream>

#include "mhdlab/errors.hpp"
#include "mhdlab/fft.hpp"
#include "mhdlab/kernels.hpp"
#include "mhdlab/norms.hpp"
#include "mhdlab/spectral.hpp"

namespace mhdlab {

namespace kp = kernels::parallel;

namespace {

// d_j f_i for all (i, j), from the spectrum of f
std::vector<std::vector<ScalarField>> jacobian_from(const VectorSpectrum& fh) {
  const int dim = static_cast<int>(fh.size());
  std::vector<std::vector<ScalarField>> out(fh.size());
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) out[i].push_back(inverse(spectral::derivative(fh[i], j)));
  }
  return out;
}

// Unprojected de-aliased nonlinearities (spectral).
struct Nonlinear {
  VectorSpectrum momentum;   // (H.grad)H - (u.grad)u
  VectorSpectrum induction;  // (H.grad)u - (u.grad)H
};

Nonlinear nonlinear_terms(const IdealState& s) {
  const Grid& g = s.u.grid();
  const int dim = g.dim();
  const auto grad_u = jacobian_from(forward(s.u));
  const auto grad_H = jacobian_from(forward(s.H));
  Nonlinear out;
  for (int i = 0; i < dim; ++i) {
    ScalarField mom(g);
    ScalarField ind(g);
    for (int j = 0; j < dim; ++j) {
      kp::multiply_add(s.H[j].values(), grad_H[i][j].values(), mom.values());
      kp::multiply_add(s.H[j].values(), grad_u[i][j].values(), ind.values());
    }
    for (int j = 0; j < dim; ++j) {
      mom -= s.u[j] * grad_u[i][j];
      ind -= s.u[j] * grad_H[i][j];
    }
    out.momentum.push_back(forward(mom));
    out.induction.push_back(forward(ind));
  }
  spectral::truncate(out.momentum);
  spectral::truncate(out.induction);
  return out;
}

IdealState advanced(const IdealState& s, double h, const IdealDerivative& d) {
  IdealState out = s;
  out.u.add_scaled(h, d.du);
  out.H.add_scaled(h, d.dH);
  return out;
}

}  // namespace

IdealDerivative rhs_ideal(const IdealState& s) {
  Nonlinear nl = nonlinear_terms(s);
  spectral::project_divergence_free(nl.momentum);
  spectral::project_divergence_free(nl.induction);
  return {inverse(nl.momentum), inverse(nl.induction)};
}

IdealState step_ideal(const IdealState& s, double dt, double cfl) {
  const Grid& g = s.u.grid();
  ScalarField speed = magnitude(s.u) + magnitude(s.H);
  const double vmax = max_norm(speed);
  if (!std::isfinite(dt) || (vmax > 0.0 && std::abs(dt) > cfl * g.spacing() / vmax)) {
    std::ostringstream os;
    os << "step_ideal: |dt| = " << std::abs(dt) << " exceeds CFL bound "
       << cfl * g.spacing() / vmax;
    throw StepSizeError(os.str());
  }
  const IdealDerivative k1 = rhs_ideal(s);
  const IdealDerivative k2 = rhs_ideal(advanced(s, 0.5 * dt, k1));
  const IdealDerivative k3 = rhs_ideal(advanced(s, 0.5 * dt, k2));
  const IdealDerivative k4 = rhs_ideal(advanced(s, dt, k3));
  IdealState out = s;
  out = advanced(out, dt / 6.0, k1);
  out = advanced(out, dt / 3.0, k2);
  out = advanced(out, dt / 3.0, k3);
  out = advanced(out, dt / 6.0, k4);
  out.u = helmholtz_P(out.u);
  out.H = helmholtz_P(out.H);
  out.t = s.t + dt;
  return out;
}

double energy_ideal(const IdealState& s) {
  const double u = l2_norm(s.u);
  const double h = l2_norm(s.H);
  return 0.5 * (u * u + h * h);
}

double cross_helicity(const IdealState& s) { return l2_inner(s.u, s.H); }

VectorField total_pressure_gradient(const IdealState& s) {
  Nonlinear nl = nonlinear_terms(s);
  spectral::project_gradient(nl.momentum);
  return inverse(nl.momentum);
}

double gradient_max_norm(const VectorField& u) {
  double m = 0.0;
  for (const auto& row : jacobian(u)) m = std::max(m, max_norm(row));
  return m;
}

}  // namespace mhdlab
