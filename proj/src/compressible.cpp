#include "mhdlab/compressible.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "mhdlab/errors.hpp"
#include "mhdlab/fft.hpp"
#include "mhdlab/kernels.hpp"
#include "mhdlab/norms.hpp"
#include "mhdlab/pressure.hpp"
#include "mhdlab/spectral.hpp"

namespace mhdlab {

namespace kp = kernels::parallel;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

VectorSpectrum zero_vector_spectrum(const Grid& g) {
  return VectorSpectrum(static_cast<std::size_t>(g.dim()), Spectrum(g));
}

VectorSpectrum sum(std::initializer_list<const VectorSpectrum*> parts) {
  VectorSpectrum out = **parts.begin();
  for (auto it = parts.begin() + 1; it != parts.end(); ++it) {
    for (std::size_t a = 0; a < out.size(); ++a) spectral::add_scaled(out[a], 1.0, (**it)[a]);
  }
  return out;
}

Spectrum forward_truncated(const ScalarField& f) {
  Spectrum s = forward(f);
  spectral::truncate(s);
  return s;
}

/// Spectra of every term of the full system.
struct TermSpectra {
  VectorSpectrum conv, plin, prem, tension, magp, shear, bulk;
  VectorSpectrum induction;
  Spectrum continuity;
};

TermSpectra evaluate_terms(const CompressibleState& s, const PhysParams& p) {
  const Grid& g = s.rho.grid();
  const int dim = g.dim();
  const double inv_eps2 = 1.0 / (p.eps * p.eps);
  const double mu = p.mu();
  const double nu = p.nu();
  const auto& w = wavenumbers(g);

  const VectorField u = velocity(s);
  VectorSpectrum uh = forward(u);
  spectral::truncate(uh);
  const Spectrum rhoh = forward(s.rho);
  const VectorSpectrum mh = forward(s.mom);
  const VectorSpectrum Hh = forward(s.H);

  TermSpectra t{zero_vector_spectrum(g), zero_vector_spectrum(g), zero_vector_spectrum(g),
                zero_vector_spectrum(g), zero_vector_spectrum(g), zero_vector_spectrum(g),
                zero_vector_spectrum(g), zero_vector_spectrum(g), Spectrum(g)};

  t.continuity = spectral::divergence(mh);
  for (auto& c : t.continuity.data) c = -c;

  // -div(m (x) u); m_i u_j is symmetric in (i, j)
  ScalarField prod(g);
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      kp::multiply(s.mom[i].values(), u[j].values(), prod.values());
      const Spectrum f = forward_truncated(prod);
      spectral::add_scaled(t.conv[i], -1.0, spectral::derivative(f, j));
      if (i != j) spectral::add_scaled(t.conv[j], -1.0, spectral::derivative(f, i));
    }
  }

  ScalarField potential(g);
  {
    auto rv = s.rho.values();
    auto pv = potential.values();
    const auto n = static_cast<std::ptrdiff_t>(rv.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) pv[i] = pressure_potential(rv[i], p.gamma);
  }
  const Spectrum potential_h = forward_truncated(potential);
  for (int i = 0; i < dim; ++i) {
    t.plin[i] = spectral::derivative(rhoh, i);
    for (auto& c : t.plin[i].data) c *= -p.a_gamma() * inv_eps2;
    t.prem[i] = spectral::derivative(potential_h, i);
    for (auto& c : t.prem[i].data) c *= -p.a * inv_eps2;
  }

  // grad_H[i][j] = d_j H_i
  std::vector<std::vector<ScalarField>> grad_H(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) grad_H[i].push_back(inverse(spectral::derivative(Hh[i], j)));
  }
  for (int i = 0; i < dim; ++i) {
    ScalarField acc(g);
    for (int j = 0; j < dim; ++j) kp::multiply_add(s.H[j].values(), grad_H[i][j].values(), acc.values());
    t.tension[i] = forward_truncated(acc);
  }
  {
    const Spectrum h2 = forward_truncated(dot(s.H, s.H));
    for (int i = 0; i < dim; ++i) {
      t.magp[i] = spectral::derivative(h2, i);
      for (auto& c : t.magp[i].data) c *= -0.5;
    }
  }

  if (mu != 0.0 || p.lambda() != 0.0) {
    const Spectrum div_uh = spectral::divergence(uh);
    for (int i = 0; i < dim; ++i) {
      t.shear[i] = uh[i];
      for (std::size_t k = 0; k < w.k2.size(); ++k) t.shear[i].data[k] *= -mu * w.k2[k];
      t.bulk[i] = spectral::derivative(div_uh, i);
      for (auto& c : t.bulk[i].data) c *= (mu + p.lambda());
    }
  }

  // -(div u) H - (u.grad) H + (H.grad) u + nu lap H
  std::vector<std::vector<ScalarField>> grad_u(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) grad_u[i].push_back(inverse(spectral::derivative(uh[i], j)));
  }
  ScalarField div_u(g);
  for (int i = 0; i < dim; ++i) div_u += grad_u[i][i];
  for (int i = 0; i < dim; ++i) {
    ScalarField acc = div_u * s.H[i];
    acc *= -1.0;
    for (int j = 0; j < dim; ++j) {
      ScalarField adv = u[j] * grad_H[i][j];
      acc -= adv;
      kp::multiply_add(s.H[j].values(), grad_u[i][j].values(), acc.values());
    }
    t.induction[i] = forward_truncated(acc);
    if (nu != 0.0) {
      for (std::size_t k = 0; k < w.k2.size(); ++k) {
        t.induction[i].data[k] -= nu * w.k2[k] * Hh[i].data[k];
      }
    }
  }
  return t;
}

StateDerivative linearized_rhs(const CompressibleState& s, const PhysParams& p) {
  const Grid& g = s.rho.grid();
  StateDerivative d{divergence(s.mom), gradient(s.rho), VectorField(g)};
  d.rho *= -1.0;
  d.mom *= -p.a_gamma() / (p.eps * p.eps);
  return d;
}

CompressibleState advanced(const CompressibleState& x, double h, const StateDerivative& d) {
  CompressibleState out = x;
  out.rho.add_scaled(h, d.rho);
  out.mom.add_scaled(h, d.mom);
  out.H.add_scaled(h, d.H);
  return out;
}

void check_vacuum(const ScalarField& rho) {
  double lo = std::numeric_limits<double>::infinity();
  for (double r : rho.values()) lo = std::min(lo, r);
  if (!(lo > kRhoFloor)) {
    std::ostringstream os;
    os << "vacuum: min density " << lo << " at or below floor " << kRhoFloor;
    throw VacuumError(os.str());
  }
}

double max_magnitude(const VectorField& v) { return max_norm(magnitude(v)); }

}  // namespace

VectorField MomentumTerms::total() const {
  VectorField out = convection;
  for (const VectorField* f : {&pressure_linear, &pressure_remainder, &magnetic_tension,
                               &magnetic_pressure, &shear_viscous, &bulk_viscous}) {
    out += *f;
  }
  return out;
}

VectorField velocity(const CompressibleState& s) {
  check_vacuum(s.rho);
  VectorField u(s.rho.grid());
  for (int j = 0; j < u.dim(); ++j) {
    kp::divide(s.mom[j].values(), s.rho.values(), u[j].values());
  }
  return u;
}

MomentumTerms momentum_terms(const CompressibleState& s, const PhysParams& p) {
  const TermSpectra t = evaluate_terms(s, p);
  return {inverse(t.conv),    inverse(t.plin),  inverse(t.prem), inverse(t.tension),
          inverse(t.magp),    inverse(t.shear), inverse(t.bulk)};
}

StateDerivative rhs(const CompressibleState& s, const PhysParams& p, Model model) {
  if (model == Model::linearized_acoustic) return linearized_rhs(s, p);
  const TermSpectra t = evaluate_terms(s, p);
  const VectorSpectrum m =
      sum({&t.conv, &t.plin, &t.prem, &t.tension, &t.magp, &t.shear, &t.bulk});
  return {inverse(t.continuity), inverse(m), inverse(t.induction)};
}

StateDerivative rhs_nonstiff(const CompressibleState& s, const PhysParams& p) {
  const TermSpectra t = evaluate_terms(s, p);
  const VectorSpectrum m = sum({&t.conv, &t.prem, &t.tension, &t.magp, &t.shear, &t.bulk});
  return {ScalarField(s.rho.grid()), inverse(m), inverse(t.induction)};
}

StepLimits step_limits(const CompressibleState& s, const PhysParams& p) {
  const Grid& g = s.rho.grid();
  const double h = g.spacing();
  double max_c = 0.0;
  for (double r : s.rho.values()) max_c = std::max(max_c, std::pow(r, p.gamma - 1.0));
  const double c = std::sqrt(p.a_gamma() * max_c);

  StepLimits lim{kInf, kInf, kInf, kInf};
  if (c > 0.0) lim.acoustic = p.eps * h / c;
  const double umax = max_magnitude(velocity(s));
  if (umax > 0.0) lim.advective = h / umax;
  const double hmax = max_magnitude(s.H);
  if (hmax > 0.0) lim.magnetic = h / hmax;
  const double visc = std::max(p.mu(), p.nu());
  if (visc > 0.0) lim.viscous = h * h / (2.0 * g.dim() * visc);
  return lim;
}

double stable_dt(const CompressibleState& s, const PhysParams& p, const StepOptions& opt) {
  const StepLimits lim = step_limits(s, p);
  double m = kInf;
  if (opt.model == Model::linearized_acoustic) {
    if (opt.scheme == TimeScheme::rk4_explicit) m = lim.acoustic;
  } else {
    m = std::min({lim.advective, lim.magnetic, lim.viscous});
    if (opt.scheme == TimeScheme::rk4_explicit) m = std::min(m, lim.acoustic);
  }
  return opt.cfl * m;
}

void acoustic_crank_nicolson(CompressibleState& s, const PhysParams& p, double dt) {
  const Grid& g = s.rho.grid();
  const int dim = g.dim();
  const auto& w = wavenumbers(g);
  Spectrum rhoh = forward(s.rho);
  VectorSpectrum mh = forward(s.mom);
  const double c2 = p.a_gamma() / (p.eps * p.eps);
  const double h = 0.5 * dt;
  const Complex I(0.0, 1.0);
  const auto n = static_cast<std::ptrdiff_t>(rhoh.data.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    if (w.kd2[k] == 0.0) continue;
    const double sk = std::sqrt(w.kd2[k]);
    Complex mL = 0.0;
    for (int a = 0; a < dim; ++a) mL += w.kd[a][k] * mh[a].data[k];
    mL /= sk;
    const Complex r0 = rhoh.data[k];
    const Complex r1 = r0 - I * sk * h * mL;
    const Complex r2 = mL - I * sk * c2 * h * r0;
    const double det = 1.0 + sk * sk * c2 * h * h;
    rhoh.data[k] = (r1 - I * sk * h * r2) / det;
    const Complex mL_new = (-I * sk * c2 * h * r1 + r2) / det;
    const Complex dm = mL_new - mL;
    for (int a = 0; a < dim; ++a) mh[a].data[k] += (w.kd[a][k] / sk) * dm;
  }
  s.rho = inverse(rhoh);
  s.mom = inverse(mh);
}

CompressibleState step(const CompressibleState& s, const PhysParams& p, double dt,
                       const StepOptions& opt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw StepSizeError("step: dt must be positive");
  const double limit = stable_dt(s, p, opt);
  if (dt > limit * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "step: dt = " << dt << " exceeds stability bound " << limit;
    throw StepSizeError(os.str());
  }

  CompressibleState out = s;
  if (opt.scheme == TimeScheme::rk4_explicit) {
    const StateDerivative k1 = rhs(s, p, opt.model);
    const StateDerivative k2 = rhs(advanced(s, 0.5 * dt, k1), p, opt.model);
    const StateDerivative k3 = rhs(advanced(s, 0.5 * dt, k2), p, opt.model);
    const StateDerivative k4 = rhs(advanced(s, dt, k3), p, opt.model);
    out = advanced(out, dt / 6.0, k1);
    out = advanced(out, dt / 3.0, k2);
    out = advanced(out, dt / 3.0, k3);
    out = advanced(out, dt / 6.0, k4);
  } else {
    // Strang splitting: half implicit acoustic, Heun on the rest, half acoustic.
    acoustic_crank_nicolson(out, p, 0.5 * dt);
    if (opt.model == Model::full) {
      const StateDerivative k1 = rhs_nonstiff(out, p);
      const CompressibleState stage = advanced(out, dt, k1);
      const StateDerivative k2 = rhs_nonstiff(stage, p);
      out = advanced(out, 0.5 * dt, k1);
      out = advanced(out, 0.5 * dt, k2);
    }
    acoustic_crank_nicolson(out, p, 0.5 * dt);
  }
  out.H = helmholtz_P(out.H);
  out.t = s.t + dt;
  check_vacuum(out.rho);
  return out;
}

double energy_total(const CompressibleState& s, const PhysParams& p) {
  check_vacuum(s.rho);
  const Grid& g = s.rho.grid();
  ScalarField density(g);
  auto dv = density.values();
  const auto n = static_cast<std::ptrdiff_t>(g.size());
  const int dim = g.dim();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    double m2 = 0.0;
    double h2 = 0.0;
    for (int a = 0; a < dim; ++a) {
      m2 += s.mom[a][i] * s.mom[a][i];
      h2 += s.H[a][i] * s.H[a][i];
    }
    const double pi = pi_value(s.rho[i], p);
    dv[i] = 0.5 * m2 / s.rho[i] + 0.5 * h2 + 0.5 * pi * pi;
  }
  return integral(density);
}

double energy_dissipation(const CompressibleState& s, const PhysParams& p) {
  const Grid& g = s.rho.grid();
  const int dim = g.dim();
  const auto& w = wavenumbers(g);
  const VectorSpectrum uh = forward(velocity(s));
  const VectorSpectrum Hh = forward(s.H);
  const double mu = p.mu();
  const double bulk = p.mu() + p.lambda();
  const double nu = p.nu();
  std::vector<double> per_mode(g.spectral_size());
  const auto n = static_cast<std::ptrdiff_t>(per_mode.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    double u2 = 0.0;
    double h2 = 0.0;
    Complex div = 0.0;
    for (int a = 0; a < dim; ++a) {
      u2 += std::norm(uh[a].data[k]);
      h2 += std::norm(Hh[a].data[k]);
      div += w.kd[a][k] * uh[a].data[k];
    }
    per_mode[k] = w.weight[k] * (mu * w.kd2[k] * u2 + bulk * std::norm(div) + nu * w.kd2[k] * h2);
  }
  return kp::sum(per_mode) * g.cell_volume() / static_cast<double>(g.size());
}

double total_mass(const CompressibleState& s) { return integral(s.rho); }

EnergyInequalityReport check_energy_inequality(std::vector<EnergyRecord>& records) {
  EnergyInequalityReport rep;
  if (records.empty()) return rep;
  const double e0 = records.front().E;
  rep.tolerance = 1e-3 * e0 + 1e-12;
  records.front().D_cum = 0.0;
  records.front().slack = 0.0;
  for (std::size_t i = 1; i < records.size(); ++i) {
    auto& r = records[i];
    const auto& prev = records[i - 1];
    r.D_cum = prev.D_cum + 0.5 * (r.t - prev.t) * (r.D + prev.D);
    r.slack = e0 - r.E - r.D_cum;
  }
  rep.min_slack = records.front().slack;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].slack < rep.min_slack) {
      rep.min_slack = records[i].slack;
      rep.worst_index = i;
    }
  }
  rep.violated = rep.min_slack < -rep.tolerance;
  return rep;
}

VelocityBoundTerms velocity_bound_terms(const CompressibleState& s, const PhysParams& p) {
  const VectorField u = velocity(s);
  double grad_sq = 0.0;
  for (const auto& row : jacobian(u)) grad_sq += std::pow(l2_norm(row), 2);
  const double u_norm = l2_norm(u);
  return {u_norm * u_norm, std::pow(p.eps, 4.0 / s.rho.grid().dim()) * grad_sq};
}

}  // namespace mhdlab
