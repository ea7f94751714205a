// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Usage: acceptance [--out-dir DIR] [--only NAME]

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <chrono>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mhdlab/acoustic.hpp"
#include "mhdlab/compressible.hpp"
#include "mhdlab/config.hpp"
#include "mhdlab/errors.hpp"
#include "mhdlab/fft.hpp"
#include "mhdlab/ideal.hpp"
#include "mhdlab/initial_data.hpp"
#include "mhdlab/modulated.hpp"
#include "mhdlab/norms.hpp"
#include "mhdlab/pressure.hpp"
#include "mhdlab/spectral.hpp"
#include "mhdlab/sweep.hpp"

namespace fs = std::filesystem;
using namespace mhdlab;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double rel(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

VectorField random_vector(const Grid& g, std::uint64_t seed, int kmax) {
  std::vector<ScalarField> c;
  for (int j = 0; j < g.dim(); ++j) {
    c.push_back(random_band_limited(g, seed * 3 + static_cast<std::uint64_t>(j), kmax));
  }
  return VectorField(std::move(c));
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

// ---------------------------------------------------------------------------

Outcome spectral_calculus() {
  Outcome o;
  const auto t0 = Clock::now();
  double worst = 0.0;
  int fields = 0;
  for (int dim : {2, 3}) {
    const Grid g(dim, dim == 2 ? 64 : 32, 2.0 * M_PI);
    for (std::uint64_t seed = 0; seed < 50; ++seed, ++fields) {
      const VectorField v = random_vector(g, 1000 * static_cast<std::uint64_t>(dim) + seed, g.n() / 3);
      const double s = l2_norm(v);
      const VectorField P = helmholtz_P(v);
      const VectorField Q = helmholtz_Q(v);
      worst = std::max(worst, l2_norm(P + Q - v) / s);
      worst = std::max(worst, l2_norm(divergence(P)) / l2_norm(gradient(v[0])));
      if (dim == 2) {
        worst = std::max(worst, l2_norm(curl_2d(Q)) / l2_norm(gradient(v[0])));
        // curl of the scalar vorticity: (d_y w, -d_x w) = grad div v - lap v
        const ScalarField w = curl_2d(v);
        const VectorField dw = gradient(w);
        const VectorField cc({dw[1], -1.0 * dw[0]});
        const VectorField rhs = gradient(divergence(v)) - laplacian(v);
        worst = std::max(worst, l2_norm(cc - rhs) / l2_norm(laplacian(v)));
      } else {
        worst = std::max(worst, l2_norm(curl_3d(Q)) / l2_norm(gradient(v[0])));
        const VectorField lhs = curl_3d(curl_3d(v));
        const VectorField rhs = gradient(divergence(v)) - laplacian(v);
        worst = std::max(worst, l2_norm(lhs - rhs) / l2_norm(laplacian(v)));
      }
    }
  }
  const double secs = seconds_since(t0);
  o.detail << fields << " fields, worst relative residual " << worst << " (tol 1e-10), " << secs
           << " s";
  o.require(worst <= 1e-10, "residual");
  o.require(secs < 10.0, "runtime < 10 s");
  return o;
}

Outcome acoustic_exactness() {
  Outcome o;
  const auto t0 = Clock::now();
  const Grid g(2, 64, 2.0 * M_PI);
  PhysParams p = PhysParams::with_exponents(0.125, 0.5, 0.5, 1.4);
  double iso = 0.0, group = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const AcousticState s = AcousticState::from_fields(0.0, random_band_limited(g, 2 * seed, 21),
                                                       random_band_limited(g, 2 * seed + 1, 21));
    for (double t : {1e-3, 0.1, 0.77, 12.0}) iso = std::max(iso, isometry_check(propagate(s, t, p)));
    const double t1 = 0.13 + 0.1 * static_cast<double>(seed), t2 = 0.41;
    const AcousticState a = propagate(propagate(s, t1, p), t1 + t2, p);
    const AcousticState b = propagate(s, t1 + t2, p);
    group = std::max(group, l2_norm(a.phi() - b.phi()) / l2_norm(s.phi()));
    group = std::max(group, l2_norm(a.g() - b.g()) / l2_norm(s.g()));
  }
  // single mode: phi = cos(k x), g = 0 -> phi = 0, g = (sin k x, 0) after a quarter period
  double quarter = 0.0;
  p.a = 0.8;
  for (int k : {1, 4, 13}) {
    const ScalarField phi0 = ScalarField::from_function(g, [&](double x, double, double) {
      return std::cos(k * x);
    });
    const double omega = std::sqrt(p.a_gamma()) * k / p.eps;
    const AcousticState q =
        propagate(AcousticState::from_fields(0.0, phi0, ScalarField(g)), M_PI / (2.0 * omega), p);
    const VectorField expect = VectorField::from_function(g, [&](double x, double, double) {
      return std::array<double, 3>{std::sin(k * x), 0.0, 0.0};
    });
    quarter = std::max({quarter, max_norm(q.phi()), max_norm(q.g() - expect)});
  }
  const double secs = seconds_since(t0);
  o.detail << "isometry drift " << iso << " (tol 1e-12), group law " << group
           << " (tol 1e-12), quarter period " << quarter << " (tol 1e-13), " << secs << " s";
  o.require(iso <= 1e-12, "isometry");
  o.require(group <= 1e-12, "group law");
  o.require(quarter <= 1e-13, "quarter period");
  o.require(secs < 5.0, "runtime < 5 s");
  return o;
}

// 8th-order periodic finite differences.
constexpr double kD1[4] = {4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0};
constexpr double kD2[5] = {-205.0 / 72.0, 8.0 / 5.0, -1.0 / 5.0, 8.0 / 315.0, -1.0 / 560.0};

ScalarField fd(const ScalarField& f, int axis, int order) {
  const Grid& g = f.grid();
  const int n = g.n();
  ScalarField out(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto idx = g.index(i);
    auto at = [&](int shift) {
      auto j = idx;
      j[static_cast<std::size_t>(axis)] = ((j[static_cast<std::size_t>(axis)] + shift) % n + n) % n;
      return f[static_cast<std::size_t>(j[0]) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j[1])];
    };
    double acc = order == 2 ? kD2[0] * f[i] : 0.0;
    for (int s = 1; s <= 4; ++s) {
      acc += order == 1 ? kD1[s - 1] * (at(s) - at(-s)) : kD2[s] * (at(s) + at(-s));
    }
    out[i] = acc / std::pow(g.spacing(), order);
  }
  return out;
}

double fd_term_error(int n, const PhysParams& p) {
  const Grid g(2, n, 2.0 * M_PI);
  const ScalarField rho = ScalarField::from_function(g, [](double x, double y, double) {
    return 1.0 + 0.2 * std::sin(x) * std::cos(y);
  });
  const VectorField u = VectorField::from_function(g, [](double x, double y, double) {
    return std::array<double, 3>{0.5 * std::sin(y) + 0.2 * std::cos(x), 0.4 * std::cos(x + y), 0.0};
  });
  const VectorField H = VectorField::from_function(g, [](double x, double y, double) {
    return std::array<double, 3>{-0.6 * std::sin(y), 0.6 * std::sin(2.0 * x), 0.0};
  });
  const CompressibleState s{0.0, rho, rho * u, H};
  const MomentumTerms m = momentum_terms(s, p);
  const StateDerivative d = rhs(s, p);

  ScalarField pot = rho;
  for (double& v : pot.values()) v = std::pow(v, p.gamma) - 1.0 - p.gamma * (v - 1.0);
  const ScalarField h2 = dot(H, H);
  const double c = 1.0 / (p.eps * p.eps);
  ScalarField div_u = fd(u[0], 0, 1) + fd(u[1], 1, 1);
  double err = 0.0;
  for (int i = 0; i < 2; ++i) {
    ScalarField conv(g), tension(g);
    for (int j = 0; j < 2; ++j) {
      conv -= fd(s.mom[i] * u[j], j, 1);
      tension += H[j] * fd(H[i], j, 1);
    }
    err = std::max(err, max_norm(m.convection[i] - conv));
    err = std::max(err, max_norm(m.magnetic_tension[i] - tension));
    err = std::max(err, max_norm(m.pressure_linear[i] + p.a_gamma() * c * fd(rho, i, 1)));
    err = std::max(err, max_norm(m.pressure_remainder[i] + p.a * c * fd(pot, i, 1)));
    err = std::max(err, max_norm(m.magnetic_pressure[i] + 0.5 * fd(h2, i, 1)));
    err = std::max(err, max_norm(m.shear_viscous[i] - p.mu() * (fd(u[i], 0, 2) + fd(u[i], 1, 2))));
    err = std::max(err, max_norm(m.bulk_viscous[i] - (p.mu() + p.lambda()) * fd(div_u, i, 1)));
    ScalarField ind = -1.0 * (div_u * H[i]) + p.nu() * (fd(H[i], 0, 2) + fd(H[i], 1, 2));
    for (int j = 0; j < 2; ++j) {
      ind -= u[j] * fd(H[i], j, 1);
      ind += H[j] * fd(u[i], j, 1);
    }
    err = std::max(err, max_norm(d.H[i] - ind));
  }
  err = std::max(err, max_norm(d.rho + fd(s.mom[0], 0, 1) + fd(s.mom[1], 1, 1)));
  return err;
}

CompressibleState ot_state(const Grid& g, double amp) {
  const VectorField u = orszag_tang_velocity(g);
  const ScalarField rho = ScalarField::from_function(g, [&](double x, double y, double) {
    return 1.0 + amp * std::cos(x + 2.0 * y);
  });
  return {0.0, rho, rho * u, orszag_tang_field(g)};
}

Outcome compressible_correctness() {
  Outcome o;
  const auto t0 = Clock::now();

  const PhysParams pv = PhysParams::with_exponents(0.5, 0.5, 0.5, 1.4, {LambdaPolicyKind::ratio, 0.5});
  const double e32 = fd_term_error(32, pv), e64 = fd_term_error(64, pv);
  const double fd_order = std::log2(e32 / e64);
  o.require(fd_order >= 7.5, "finite difference order");

  // RK4 self-convergence
  double rk_order = 0.0;
  {
    const Grid g(2, 32, 2.0 * M_PI);
    const PhysParams p = PhysParams::with_exponents(0.5, 0.5, 0.5, 1.4);
    const CompressibleState s0 = ot_state(g, 0.05);
    const StepOptions opt{TimeScheme::rk4_explicit};
    const double T = 0.1;
    auto solve = [&](int steps) {
      CompressibleState s = s0;
      for (int k = 0; k < steps; ++k) s = step(s, p, T / steps, opt);
      return s;
    };
    const int n1 = static_cast<int>(std::ceil(T / stable_dt(s0, p, opt))) + 1;
    const CompressibleState a = solve(n1), b = solve(2 * n1), c = solve(4 * n1);
    rk_order = std::log2((l2_norm(a.mom - b.mom) + l2_norm(a.rho - b.rho)) /
                         (l2_norm(b.mom - c.mom) + l2_norm(b.rho - c.rho)));
  }
  o.require(rk_order >= 3.5, "rk4 order");

  // linear acoustic pulse at eps = 1/8
  double period_err = 0.0;
  {
    const Grid g(2, 64, 2.0 * M_PI);
    const PhysParams p = PhysParams::inviscid(0.125, 1.4);
    const double period = 2.0 * M_PI * p.eps / std::sqrt(p.a_gamma());
    CompressibleState s{0.0, ScalarField::from_function(g, [](double x, double, double) {
                           return 1.0 + 1e-4 * std::cos(x);
                         }),
                        VectorField(g), VectorField(g)};
    const int steps = 600;
    const double dt = 3.0 * period / steps;
    std::vector<double> coef{1.0};
    for (int k = 0; k < steps; ++k) {
      s = step(s, p, dt);
      coef.push_back(forward(s.rho).data[static_cast<std::size_t>(g.n() / 2 + 1)].real());
    }
    std::vector<double> crossings;
    for (int k = 0; k < steps; ++k) {
      if (coef[k] > 0.0 && coef[k + 1] <= 0.0) crossings.push_back(dt * (k + coef[k] / (coef[k] - coef[k + 1])));
    }
    period_err = crossings.size() >= 3 ? rel((crossings.back() - crossings.front()) /
                                                 static_cast<double>(crossings.size() - 1),
                                             period)
                                       : 1.0;
  }
  o.require(period_err <= 0.01, "pulse period");

  // N = 128 Orszag-Tang run: mass, divergence and the energy inequality
  double mass_drift = 0.0, min_slack_rel = 0.0, div_rel = 0.0;
  {
    const Grid g(2, 128, 2.0 * M_PI);
    const PhysParams p = PhysParams::with_exponents(0.125, 0.5, 0.5, 1.4);
    CompressibleState s = ot_state(g, 0.01);
    const double m0 = total_mass(s);
    std::vector<EnergyRecord> rec{{0.0, energy_total(s, p), energy_dissipation(s, p)}};
    const double dt = 0.8 * stable_dt(s, p, {});
    while (s.t < 0.1) {
      s = step(s, p, dt);
      rec.push_back({s.t, energy_total(s, p), energy_dissipation(s, p)});
      div_rel = std::max(div_rel, l2_norm(divergence(s.H)) / l2_norm(gradient(s.H[0])));
    }
    mass_drift = rel(total_mass(s), m0);
    const EnergyInequalityReport r = check_energy_inequality(rec);
    min_slack_rel = r.min_slack / rec.front().E;
    o.require(!r.violated, "energy inequality");
  }
  o.require(mass_drift <= 1e-12, "mass conservation");
  o.require(div_rel <= 1e-8, "div H");

  const double secs = seconds_since(t0);
  o.require(secs < 300.0, "runtime < 5 min");
  o.detail << "FD oracle order " << fd_order << " (errors " << e32 << " -> " << e64
           << ", need >= 7.5), RK4 order " << rk_order << " (need >= 3.5), pulse period error "
           << period_err << " (tol 0.01), mass drift " << mass_drift << " (tol 1e-12), div H "
           << div_rel << ", min slack/E0 " << min_slack_rel << " (tol -1e-3), " << secs << " s";
  return o;
}

Outcome ideal_solver() {
  Outcome o;
  const auto t0 = Clock::now();
  const Grid g(2, 128, 2.0 * M_PI);
  const double dt = 1e-3;
  const int steps = 1000;

  IdealState s{0.0, orszag_tang_velocity(g), orszag_tang_field(g)};
  const double e0 = energy_ideal(s), h0 = cross_helicity(s);
  double e_drift = 0.0, h_drift = 0.0;
  for (int k = 0; k < steps; ++k) {
    s = step_ideal(s, dt);
    e_drift = std::max(e_drift, std::abs(energy_ideal(s) - e0) / e0);
    h_drift = std::max(h_drift, std::abs(cross_helicity(s) - h0) / e0);
  }

  // aligned Alfvenic state u = H is steady
  const VectorField v = helmholtz_P(random_vector(g, 77, 6));
  IdealState a{0.0, v, v};
  for (int k = 0; k < steps; ++k) a = step_ideal(a, dt);
  const double alfven = l2_norm(a.u - v) / l2_norm(v);

  // forward to T = 0.25 and back
  const IdealState r0{0.0, orszag_tang_velocity(g), orszag_tang_field(g)};
  IdealState r = r0;
  for (int k = 0; k < 250; ++k) r = step_ideal(r, dt);
  for (int k = 0; k < 250; ++k) r = step_ideal(r, -dt);
  const double reversal = (l2_norm(r.u - r0.u) + l2_norm(r.H - r0.H)) / (l2_norm(r0.u) + l2_norm(r0.H));

  const double secs = seconds_since(t0);
  o.detail << "energy drift " << e_drift << ", cross-helicity drift " << h_drift
           << " (tol 1e-6), Alfven state " << alfven << ", time reversal " << reversal
           << " (tol 1e-8), " << secs << " s";
  o.require(e_drift <= 1e-6, "energy drift");
  o.require(h_drift <= 1e-6, "cross-helicity drift");
  o.require(alfven <= 1e-8, "Alfven state");
  o.require(reversal <= 1e-8, "time reversal");
  o.require(secs < 180.0, "runtime < 3 min");
  return o;
}

Outcome pressure_surrogate() {
  using Big = boost::multiprecision::cpp_bin_float_50;
  Outcome o;
  const auto t0 = Clock::now();
  double closed = 0.0;
  {
    PhysParams p = PhysParams::with_exponents(0.125, 0.5, 0.5, 2.0);
    for (double rho = 0.01; rho < 5.0; rho *= 1.07) {
      closed = std::max(closed, rel(pi_value(rho, p), std::sqrt(2.0 * p.a) * (rho - 1.0) / p.eps));
    }
    for (int e = -12; e <= -1; ++e) {
      for (double sg : {-1.0, 1.0}) {
        const double rho = 1.0 + sg * std::pow(10.0, e);
        closed = std::max(closed, rel(pi_value(rho, p), std::sqrt(2.0 * p.a) * (rho - 1.0) / p.eps));
      }
    }
  }
  double oracle = 0.0;
  int samples = 0;
  for (double gamma : {1.4, 5.0 / 3.0, 3.0}) {
    const PhysParams p = PhysParams::with_exponents(0.125, 0.5, 0.5, gamma);
    for (double mag = 1e-8; mag <= 10.0; mag *= 1.3) {
      for (double sg : {-1.0, 1.0}) {
        const double rho = 1.0 + sg * mag;
        if (rho <= 1e-3) continue;
        const Big r(rho), g(gamma);
        Big v = sqrt(2 * Big(p.a) / (g - 1) * (pow(r, g) - 1 - g * (r - 1))) / Big(p.eps);
        if (rho < 1.0) v = -v;
        oracle = std::max(oracle, rel(pi_value(rho, p), static_cast<double>(v)));
        ++samples;
      }
    }
  }
  const double secs = seconds_since(t0);
  o.detail << "gamma = 2 closed form " << closed << " (tol 1e-14), extended precision oracle "
           << oracle << " over " << samples << " densities incl. |rho-1| in [1e-8, 1e-3] (tol 1e-12), "
           << secs << " s";
  o.require(closed <= 1e-14, "closed form");
  o.require(oracle <= 1e-12, "oracle");
  o.require(secs < 1.0, "runtime < 1 s");
  return o;
}

Outcome well_prepared_convergence(const fs::path& out) {
  Outcome o;
  const auto t0 = Clock::now();
  json j = {{"dim", 2},
            {"n", 256},
            {"gamma", 1.4},
            {"alpha", 0.5},
            {"beta", 0.5},
            {"eps_list", {0.25, 0.125, 0.0625, 0.03125}},
            {"T_final", 0.5},
            {"scheme", "imex_acoustic"},
            {"init_kind", "well_prepared"},
            {"out_dir", (out / "well_prepared").string()}};
  const RunConfig cfg = parse_config(j);
  RunOptions opt;
  opt.resume = false;
  const SweepOutcome s = run_sweep(cfg, opt);

  bool aborted = false, slack_ok = true;
  for (const CaseResult& c : s.cases) {
    aborted = aborted || c.aborted;
    slack_ok = slack_ok && !c.energy.violated;
  }
  o.require(!aborted, "no aborted case");
  o.require(slack_ok, "energy inequality on every run");
  o.require(s.report.has_value(), "rate fit");
  if (!s.report || aborted) return o;

  const RateReport& r = *s.report;
  o.detail << "sup mod_total";
  for (std::size_t k = 0; k < r.eps_values.size(); ++k) o.detail << " " << r.sup_mod_total[k];
  o.detail << "; halving factors";
  for (std::size_t k = 1; k < r.eps_values.size(); ++k) {
    const double f = r.sup_mod_total[k - 1] / r.sup_mod_total[k];
    o.detail << " " << f;
    o.require(f >= 1.3, "reduction factor >= 1.3");
  }
  o.detail << "; fitted slope " << r.fitted_slope << " (sigma " << r.sigma_theory << ")";
  o.require(r.fitted_slope > 0.0, "positive slope");

  const char* names[3] = {"lq2_rho", "l2_Zh", "l2_Pu"};
  for (int m = 0; m < 3; ++m) {
    o.detail << "; " << names[m] << "(T)";
    for (std::size_t k = 0; k < s.cases.size(); ++k) {
      const SweepRecord& last = s.cases[k].records.back();
      const double v = m == 0 ? last.lq2_rho : m == 1 ? last.l2_Zh : last.l2_Pu;
      o.detail << " " << v;
      if (k > 0) {
        const SweepRecord& prev = s.cases[k - 1].records.back();
        const double pv = m == 0 ? prev.lq2_rho : m == 1 ? prev.l2_Zh : prev.l2_Pu;
        o.require(v < pv, std::string(names[m]) + " decreasing");
      }
    }
  }
  const double secs = seconds_since(t0);
  o.detail << "; " << secs << " s";
  o.require(secs < 7200.0, "runtime < 2 h");
  return o;
}

Outcome corrector_effectiveness(const fs::path& out) {
  Outcome o;
  const auto t0 = Clock::now();

  // nonlinear run with general data in the dispersive window
  json j = {{"dim", 2},
            {"n", 128},
            {"box_len", 16.0},
            {"gamma", 1.4},
            {"alpha", 0.5},
            {"beta", 0.5},
            {"eps_list", {0.125}},
            {"T_final", 0.5},
            {"scheme", "imex_acoustic"},
            {"init_kind", "general"},
            {"amp_acoustic", 0.5},
            {"seed", 11},
            {"out_dir", (out / "corrector").string()}};
  const RunConfig cfg = parse_config(j);
  const CaseResult c = run_case(cfg, 0.125);
  double corrected = 0.0, uncorrected = 0.0;
  for (const SweepRecord& r : c.records) {
    corrected += r.w2 + r.pi2;
    uncorrected += r.uncorrected_w2 + r.uncorrected_pi2;
  }
  const double ratio = corrected / uncorrected;
  o.require(!c.aborted, "run completed");
  o.require(!c.energy.violated, "energy inequality");
  o.require(ratio <= 0.5, "ratio <= 0.5");

  // linearized acoustics with the identity mollifier: the corrector is the solution
  double lin_ratio = 0.0;
  {
    const Grid g(2, 128, 16.0);
    const PhysParams p = PhysParams::with_exponents(0.125, 0.5, 0.5, 1.4);
    const double amp = 1e-3;
    ScalarField rho(g, 1.0);
    rho.add_scaled(p.eps * amp, random_profile(g, 11));
    const VectorField u = amp * gradient(random_profile(g, 12));
    CompressibleState s{0.0, rho, rho * u, VectorField(g)};
    const AcousticState a0 = init_corrector(rho, u, p, {g.spacing()});
    const StepOptions opt{TimeScheme::imex_acoustic, 0.4, Model::linearized_acoustic};
    const int steps = 1000;
    const double dt = 0.5 / steps;
    double num = 0.0, den = 0.0;
    for (int k = 0; k <= steps; ++k) {
      if (k > 0) s = step(s, p, dt, opt);
      if (k % 20 == 0) {
        const IdealState rest{s.t, VectorField(g), VectorField(g)};
        const ModulatedComponents m = modulated_components(s, rest, propagate(a0, s.t, p), p);
        num += m.w2 + m.pi2;
        den += m.uncorrected_w2 + m.uncorrected_pi2;
      }
    }
    lin_ratio = num / den;
  }
  o.require(lin_ratio <= 1e-6, "linearized ratio <= 1e-6");

  const double secs = seconds_since(t0);
  o.detail << "time-averaged corrected/uncorrected " << ratio << " (tol 0.5), linearized variant "
           << lin_ratio << " (tol 1e-6), " << secs << " s";
  o.require(secs < 1800.0, "runtime < 30 min");
  return o;
}

Outcome determinism(const fs::path& out) {
  Outcome o;
  json j = {{"dim", 2},
            {"n", 32},
            {"box_len", 16.0},
            {"eps_list", {0.5, 0.25, 0.125}},
            {"T_final", 0.2},
            {"init_kind", "general"},
            {"amp_acoustic", 0.3},
            {"seed", 5},
            {"threads", 2}};
  std::vector<std::string> ids;
  std::vector<std::vector<std::string>> bytes(2);
  for (int rep = 0; rep < 2; ++rep) {
    const fs::path dir = out / ("determinism_" + std::to_string(rep));
    fs::remove_all(dir);
    j["out_dir"] = dir.string();
    const RunConfig cfg = parse_config(j);
    RunOptions opt;
    opt.threads = cfg.threads;
    const SweepOutcome s = run_sweep(cfg, opt);
    for (const CaseResult& c : s.cases) {
      if (rep == 0) ids.push_back(c.case_id);
      bytes[static_cast<std::size_t>(rep)].push_back(slurp(dir / (c.case_id + ".csv")));
    }
    bytes[static_cast<std::size_t>(rep)].push_back(slurp(dir / "rate_table.csv"));
  }
  const bool same = bytes[0] == bytes[1];
  std::size_t total = 0;
  for (const auto& b : bytes[0]) total += b.size();
  o.detail << ids.size() << " case CSVs + rate table, " << total << " bytes, "
           << (same ? "identical" : "DIFFERENT");
  o.require(same, "byte-identical output");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  fs::path out = fs::current_path() / "acceptance_work";
  std::string only;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--out-dir") == 0 && i + 1 < argc) {
      out = argv[++i];
    } else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = argv[++i];
    } else {
      std::cerr << "usage: acceptance [--out-dir DIR] [--only NAME]\n";
      return 2;
    }
  }
  fs::create_directories(out);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"spectral_calculus", spectral_calculus},
      {"acoustic_exactness", acoustic_exactness},
      {"compressible_solver", compressible_correctness},
      {"ideal_solver", ideal_solver},
      {"pressure_surrogate", pressure_surrogate},
      {"well_prepared_convergence", [&] { return well_prepared_convergence(out); }},
      {"corrector_effectiveness", [&] { return corrector_effectiveness(out); }},
      {"determinism", [&] { return determinism(out); }},
  };

  int failed = 0;
  for (const auto& [name, run] : criteria) {
    if (!only.empty() && name != only) continue;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail.str() << std::endl;
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
