#include "mhdlab/acoustic.hpp"

#include <cmath>
#include <limits>

#include "mhdlab/errors.hpp"
#include "mhdlab/modulated.hpp"
#include "mhdlab/norms.hpp"
#include "mhdlab/spectral.hpp"

namespace mhdlab {

namespace {

double energy_of(const Spectrum& phi_hat, const Spectrum& q_hat) {
  const auto& w = wavenumbers(phi_hat.grid);
  double acc = 0.0;
  for (std::size_t k = 0; k < phi_hat.data.size(); ++k) {
    acc += w.weight[k] * (std::norm(phi_hat.data[k]) + w.kd2[k] * std::norm(q_hat.data[k]));
  }
  const Grid& g = phi_hat.grid;
  return 0.5 * acc * g.cell_volume() / static_cast<double>(g.size());
}

}  // namespace

AcousticState::AcousticState(double t, Spectrum phi_hat, Spectrum q_hat)
    : t_(t), phi_hat_(std::move(phi_hat)), q_hat_(std::move(q_hat)) {
  require_same_grid(phi_hat_.grid, q_hat_.grid, "AcousticState");
  q_hat_.data[0] = 0.0;
  initial_energy_ = energy_of(phi_hat_, q_hat_);
}

AcousticState AcousticState::from_fields(double t, const ScalarField& phi, const ScalarField& q) {
  return AcousticState(t, forward(phi), forward(q));
}

AcousticState AcousticState::zero(const Grid& g, double t) {
  return AcousticState(t, Spectrum(g), Spectrum(g));
}

ScalarField AcousticState::phi() const { return inverse(phi_hat_); }

ScalarField AcousticState::q() const { return inverse(q_hat_); }

VectorField AcousticState::g() const {
  std::vector<ScalarField> comps;
  for (int a = 0; a < grid().dim(); ++a) {
    comps.push_back(inverse(spectral::derivative(q_hat_, a)));
  }
  return VectorField(std::move(comps));
}

AcousticState init_corrector(const ScalarField& rho0, const VectorField& u0,
                             const PhysParams& p, const MollifierSpec& m, double t0) {
  const Grid& g = rho0.grid();
  require_same_grid(g, u0.grid(), "init_corrector");
  m.validate(g);
  const auto kernel = mollifier_spectrum(g, m);

  Spectrum phi_hat = forward(pi_epsilon(rho0, p));
  spectral::multiply(phi_hat, kernel);

  ScalarField sqrt_rho = rho0;
  for (double& v : sqrt_rho.values()) v = std::sqrt(v);
  VectorSpectrum gh = forward(sqrt_rho * u0);
  spectral::project_gradient(gh);

  // q_hat = sum_j (-i kd_j g_j) / |kd|^2
  const auto& w = wavenumbers(g);
  Spectrum q_hat(g);
  for (std::size_t k = 0; k < q_hat.data.size(); ++k) {
    if (w.kd2[k] == 0.0) continue;
    Complex acc = 0.0;
    for (int a = 0; a < g.dim(); ++a) acc += w.kd[a][k] * gh[a].data[k];
    q_hat.data[k] = Complex(0.0, -1.0) * acc / w.kd2[k] * kernel[k];
  }
  return AcousticState(t0, std::move(phi_hat), std::move(q_hat));
}

AcousticState propagate(const AcousticState& s, double t_target, const PhysParams& p) {
  AcousticState out = s;
  out.t_ = t_target;
  const double tau = std::sqrt(p.a_gamma()) * (t_target - s.t()) / p.eps;
  if (tau == 0.0) return out;
  const auto& w = wavenumbers(s.grid());
  const auto n = static_cast<std::ptrdiff_t>(out.phi_hat_.data.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    if (w.kd2[k] == 0.0) continue;
    const double om = std::sqrt(w.kd2[k]);
    const double c = std::cos(om * tau);
    const double sn = std::sin(om * tau);
    const Complex phi = s.phi_hat_.data[k];
    const Complex q = s.q_hat_.data[k];
    out.phi_hat_.data[k] = c * phi + om * sn * q;
    out.q_hat_.data[k] = -sn * phi / om + c * q;
  }
  return out;
}

double corrector_energy(const AcousticState& s) {
  const double phi = l2_norm(s.phi());
  const double g = l2_norm(s.g());
  return 0.5 * (phi * phi + g * g);
}

double isometry_check(const AcousticState& s) {
  const double e0 = s.initial_energy();
  const double e = energy_of(s.phi_hat(), s.q_hat());
  if (e0 == 0.0) return e == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::abs(e - e0) / e0;
}

double momentum_approximation_gap(const ScalarField& rho0, const VectorField& u0) {
  ScalarField sqrt_rho = rho0;
  for (double& v : sqrt_rho.values()) v = std::sqrt(v);
  return l2_norm(helmholtz_Q(rho0 * u0) - helmholtz_Q(sqrt_rho * u0));
}

double lr_norm(const ScalarField& f, double r) {
  if (std::isinf(r)) return max_norm(f);
  if (!(r >= 1.0)) throw UsageError("lr_norm requires r >= 1");
  double acc = 0.0;
  for (double v : f.values()) acc += std::pow(std::abs(v), r);
  return std::pow(acc * f.grid().cell_volume(), 1.0 / r);
}

DispersionReport dispersion_probe(std::span<const AcousticState> history, double r,
                                  const PhysParams& p) {
  if (!(r > 2.0)) throw UsageError("dispersion_probe requires r > 2");
  DispersionReport rep;
  if (history.empty()) {
    rep.regime = "trivial";
    return rep;
  }
  for (const auto& s : history) {
    rep.times.push_back(s.t());
    rep.phi_norms.push_back(lr_norm(s.phi(), r));
    double gn = 0.0;
    for (const auto& c : s.g()) gn = std::max(gn, lr_norm(c, r));
    rep.g_norms.push_back(gn);
  }
  const double span = rep.times.back() - rep.times.front();
  const double window = history.front().grid().box_len() * p.eps / (2.0 * std::sqrt(p.a_gamma()));
  rep.dispersive = span < window;
  if (rep.phi_norms.front() == 0.0) {
    rep.decay_factor = 1.0;
    rep.regime = "trivial";
    return rep;
  }
  rep.decay_factor = rep.phi_norms.back() / rep.phi_norms.front();
  rep.regime = rep.dispersive ? "dispersive" : "non-dispersive regime";
  return rep;
}

}  // namespace mhdlab
