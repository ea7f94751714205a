// Command-line driver: single runs, eps sweeps, rate tables, the dispersion
// probe and a quick invariant self-test.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "mhdlab/acoustic.hpp"
#include "mhdlab/config.hpp"
#include "mhdlab/errors.hpp"
#include "mhdlab/initial_data.hpp"
#include "mhdlab/kernels.hpp"
#include "mhdlab/norms.hpp"
#include "mhdlab/pressure.hpp"
#include "mhdlab/spectral.hpp"
#include "mhdlab/sweep.hpp"

namespace {

using namespace mhdlab;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitAbort = 3;

struct Common {
  int threads = 0;
  std::string out_dir;
  std::string format = "csv";
  int reference_refine = 1;
};

int resolve_threads(const Common& c, const RunConfig& cfg) {
  if (c.threads > 0) return c.threads;
  if (const char* env = std::getenv("MHDLAB_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
    throw ConfigError(std::string("MHDLAB_THREADS is not a positive integer: ") + env);
  }
  return std::max(1, cfg.threads);
}

RunConfig prepare(const std::string& path, const Common& c) {
  RunConfig cfg = load_config(path);
  if (!c.out_dir.empty()) cfg.out_dir = c.out_dir;
  if (c.format != "csv") throw ConfigError("unsupported --format '" + c.format + "'");
  return cfg;
}

RunOptions options(const Common& c, const RunConfig& cfg) {
  RunOptions o;
  o.threads = resolve_threads(c, cfg);
  o.reference_refine = c.reference_refine;
  return o;
}

int cmd_run(const std::string& path, std::optional<double> eps, const Common& c) {
  RunConfig cfg = prepare(path, c);
  const RunOptions o = options(c, cfg);
  kernels::set_num_threads(o.threads);
  const double e = eps.value_or(cfg.eps_list.front());
  const CaseResult r = run_case(cfg, e, o);
  std::cout << r.case_id << ": " << r.records.size() << " samples, sup mod_total "
            << r.sup_mod_total() << "\n";
  if (r.aborted) {
    std::cerr << "aborted: " << r.abort_reason << "\n";
    return kExitAbort;
  }
  return kExitOk;
}

int cmd_sweep(const std::string& path, const Common& c) {
  RunConfig cfg = prepare(path, c);
  const SweepOutcome out = run_sweep(cfg, options(c, cfg));
  bool any_aborted = false;
  for (const CaseResult& r : out.cases) {
    std::cout << r.case_id << (r.resumed ? " (resumed)" : "") << ": "
              << (r.aborted ? "aborted: " + r.abort_reason : "completed")
              << ", sup mod_total " << r.sup_mod_total() << "\n";
    any_aborted = any_aborted || r.aborted;
  }
  if (out.report) {
    std::cout << "fitted slope " << out.report->fitted_slope << " (sigma "
              << out.report->sigma_theory << ")\n";
  } else {
    std::cerr << "rate fit skipped: " << out.fit_error << "\n";
  }
  return any_aborted ? kExitAbort : kExitOk;
}

int cmd_rate(const std::string& in, const std::string& out) {
  const RateReport r = rate_from_directory(in, out);
  std::cout << "fitted slope " << r.fitted_slope << " over " << r.eps_values.size()
            << " cases\n";
  return kExitOk;
}

int cmd_probe(const std::string& path, double r, int samples, const Common& c) {
  RunConfig cfg = prepare(path, c);
  kernels::set_num_threads(resolve_threads(c, cfg));
  const double eps = cfg.eps_list.front();
  const PhysParams p = cfg.params(eps);
  const InitialData init = make_initial_data(cfg, eps);
  const AcousticState a0 = init_corrector(init.compressible.rho, velocity(init.compressible), p,
                                          cfg.mollifier(), 0.0);
  std::vector<AcousticState> history;
  for (int k = 0; k < samples; ++k) {
    history.push_back(propagate(a0, cfg.T_final * k / (samples - 1), p));
  }
  const DispersionReport rep = dispersion_probe(history, r, p);
  nlohmann::json j = {{"eps", eps},           {"r", r},
                      {"times", rep.times},   {"phi_norms", rep.phi_norms},
                      {"g_norms", rep.g_norms}, {"decay_factor", rep.decay_factor},
                      {"regime", rep.regime}};
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

bool report(const std::string& name, double value, double tol) {
  const bool ok = std::isfinite(value) && value <= tol;
  std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << value << " (tol " << tol << ")\n";
  return ok;
}

int cmd_selftest() {
  bool ok = true;
  const Grid g(2, 32, 2.0 * M_PI);

  {
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      VectorField v({random_band_limited(g, 2 * seed, 8), random_band_limited(g, 2 * seed + 1, 8)});
      const VectorField P = helmholtz_P(v);
      const VectorField Q = helmholtz_Q(v);
      const double scale = l2_norm(v);
      worst = std::max(worst, l2_norm(P + Q - v) / scale);
      worst = std::max(worst, l2_norm(divergence(P)) / scale);
      worst = std::max(worst, l2_norm(curl_2d(Q)) / scale);
    }
    ok &= report("helmholtz identities", worst, 1e-10);
  }

  {
    const PhysParams p = PhysParams::with_exponents(0.125, 0.5, 0.5, 1.4);
    const AcousticState s = AcousticState::from_fields(0.0, random_band_limited(g, 11, 8),
                                                       random_band_limited(g, 12, 8));
    const AcousticState a = propagate(propagate(s, 0.3, p), 0.7, p);
    const AcousticState b = propagate(s, 0.7, p);
    ok &= report("corrector isometry", isometry_check(b), 1e-12);
    ok &= report("corrector group law", l2_norm(a.phi() - b.phi()) / l2_norm(s.phi()), 1e-12);
  }

  {
    PhysParams p = PhysParams::with_exponents(0.5, 0.5, 0.5, 2.0);
    p.a = 0.75;
    double worst = 0.0;
    for (double rho : {0.5, 0.9, 0.999, 1.001, 1.5, 3.0}) {
      // gamma = 2: Pi = sqrt(2a) |rho - 1| / eps
      const double exact = std::sqrt(2.0 * p.a) * (rho - 1.0) / p.eps;
      worst = std::max(worst, std::abs(pi_value(rho, p) - exact) / std::abs(exact));
    }
    ok &= report("pressure potential gamma=2", worst, 1e-14);
  }

  {
    std::vector<double> x(100000);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (double& v : x) v = dist(rng);
    const double diff = std::abs(kernels::serial::sum_squares(x) - kernels::parallel::sum_squares(x));
    ok &= report("serial/parallel reduction", diff, 0.0);
  }

  std::cout << (ok ? "selftest passed\n" : "selftest FAILED\n");
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Low-Mach compressible MHD verification suite"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--threads", common.threads, "worker threads (falls back to MHDLAB_THREADS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--out-dir", common.out_dir, "override the config's out_dir");
  app.add_option("--format", common.format, "output format")->check(CLI::IsMember({"csv"}));
  app.add_option("--reference-refine", common.reference_refine,
                 "ideal reference grid refinement factor")
      ->check(CLI::IsMember({1, 2}));

  std::string config_path;
  std::optional<double> eps;
  auto* run = app.add_subcommand("run", "run one eps case");
  run->add_option("--config", config_path, "JSON config")->required()->check(CLI::ExistingFile);
  run->add_option("--eps", eps, "eps value (default: first of eps_list)");

  auto* sweep = app.add_subcommand("sweep", "run every eps case and fit the rate");
  sweep->add_option("--config", config_path, "JSON config")->required()->check(CLI::ExistingFile);

  std::string in_dir, out_file;
  auto* rate = app.add_subcommand("rate", "fit the rate from existing case files");
  rate->add_option("--in", in_dir, "directory of case CSVs")->required();
  rate->add_option("--out", out_file, "rate table CSV")->required();

  double probe_r = 4.0;
  int probe_samples = 11;
  auto* probe = app.add_subcommand("probe-dispersion", "decay of the corrector's L^r norms");
  probe->add_option("--config", config_path, "JSON config")->required()->check(CLI::ExistingFile);
  probe->add_option("--r", probe_r, "Lebesgue exponent, > 2");
  probe->add_option("--samples", probe_samples, "number of sample times")
      ->check(CLI::Range(2, 100000));

  auto* selftest = app.add_subcommand("selftest", "quick invariant checks");

  // Subcommand options are also accepted after the subcommand name.
  for (auto* sub : {run, sweep, rate, probe, selftest}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run) return cmd_run(config_path, eps, common);
    if (*sweep) return cmd_sweep(config_path, common);
    if (*rate) return cmd_rate(in_dir, out_file);
    if (*probe) return cmd_probe(config_path, probe_r, probe_samples, common);
    if (*selftest) return cmd_selftest();
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const NumericalAbort& e) {
    std::cerr << "numerical abort: " << e.what() << "\n";
    return kExitAbort;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
