#include "mhdlab/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <limits>
#include <sstream>

#include "mhdlab/acoustic.hpp"
#include "mhdlab/errors.hpp"
#include "mhdlab/ideal.hpp"
#include "mhdlab/initial_data.hpp"
#include "mhdlab/kernels.hpp"
#include "mhdlab/norms.hpp"
#include "mhdlab/spectral.hpp"

namespace mhdlab {

namespace fs = std::filesystem;
using nlohmann::json;

const char* const kSweepCsvHeader =
    "case_id,eps,t,E_total,D_cum,slack,w2,Z2,pi2,mod_total,uncorrected_w2,uncorrected_pi2,"
    "lq2_rho,l2_Zh,l2_Pu,divH_rel,grad_u_inf";

namespace {

constexpr int kColumns = 17;
// Fraction of the CFL step actually used, leaving room for growth of the
// velocity and field maxima between the initial and final state.
constexpr double kHeadroom = 0.8;
constexpr double kRegularityBudget = 100.0;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double l2_gradient_norm(const VectorField& v) {
  double sq = 0.0;
  for (const VectorField& row : jacobian(v)) {
    const double r = l2_norm(row);
    sq += r * r;
  }
  return std::sqrt(sq);
}

double div_relative(const VectorField& H) {
  const double grad = l2_gradient_norm(H);
  if (grad == 0.0) return 0.0;
  return l2_norm(divergence(H)) / grad;
}

/// Samples every `factor`-th point of a finer grid.
ScalarField restrict_to(const ScalarField& fine, const Grid& coarse, int factor) {
  ScalarField out(coarse);
  const Grid& fg = fine.grid();
  const std::size_t nf = static_cast<std::size_t>(fg.n());
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    const auto idx = coarse.index(i);
    std::size_t flat = 0;
    for (int a = 0; a < coarse.dim(); ++a) {
      flat = flat * nf + static_cast<std::size_t>(idx[static_cast<std::size_t>(a)] * factor);
    }
    out[i] = fine[flat];
  }
  return out;
}

VectorField restrict_to(const VectorField& fine, const Grid& coarse, int factor) {
  std::vector<ScalarField> comps;
  for (const ScalarField& c : fine) comps.push_back(restrict_to(c, coarse, factor));
  return VectorField(std::move(comps));
}

double ideal_dt_limit(const IdealState& s, double cfl) {
  const double h = s.u.grid().spacing();
  const ScalarField speed = magnitude(s.u) + magnitude(s.H);
  const double vmax = max_norm(speed);
  return vmax > 0.0 ? cfl * h / vmax : std::numeric_limits<double>::infinity();
}

json energy_json(const EnergyInequalityReport& r) {
  return {{"min_slack", r.min_slack},
          {"tolerance", r.tolerance},
          {"worst_index", r.worst_index},
          {"violated", r.violated}};
}

bool is_dispersive_window(const RunConfig& cfg, double eps) {
  const double c = std::sqrt(cfg.params(eps).a_gamma());
  return cfg.box_len > 2.0 * c * cfg.T_final / eps;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_number(const std::string& s, std::size_t row, std::size_t col) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw FormatError("row " + std::to_string(row) + ", column " + std::to_string(col + 1) +
                      ": not a number: '" + s + "'");
  }
}

json read_json(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw FormatError("cannot open " + p.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(p.string() + ": " + e.what());
  }
}

std::string read_text(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw FormatError("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path csv_path(const RunConfig& cfg, const std::string& id) {
  return fs::path(cfg.out_dir) / (id + ".csv");
}

fs::path meta_path(const RunConfig& cfg, const std::string& id) {
  return fs::path(cfg.out_dir) / (id + ".meta.json");
}

std::optional<CaseResult> load_completed(const RunConfig& cfg, const std::string& id, double eps) {
  const fs::path csv = csv_path(cfg, id);
  const fs::path meta = meta_path(cfg, id);
  if (!fs::exists(csv) || !fs::exists(meta)) return std::nullopt;
  try {
    json m = read_json(meta);
    if (m.value("status", "") != "completed") return std::nullopt;
    if (m.value("config", json()) != to_json(cfg)) return std::nullopt;
    ParsedCaseCsv parsed = read_case_csv(csv);
    if (parsed.aborted || parsed.records.empty()) return std::nullopt;
    CaseResult r;
    r.case_id = id;
    r.eps = eps;
    r.records = std::move(parsed.records);
    r.resumed = true;
    r.metadata = std::move(m);
    return r;
  } catch (const FormatError&) {
    return std::nullopt;
  }
}

}  // namespace

double CaseResult::sup_mod_total() const {
  double s = 0.0;
  for (const SweepRecord& r : records) s = std::max(s, r.mod_total);
  return s;
}

double CaseResult::initial_misfit() const {
  return records.empty() ? 0.0 : records.front().mod_total;
}

std::string case_id(std::size_t index, double eps) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "case%02zu_eps%.6g", index, eps);
  return buf;
}

SamplePlan sample_plan(const RunConfig& cfg) {
  const double eps0 = cfg.eps_list.front();
  const PhysParams p = cfg.params(eps0);
  const InitialData init = make_initial_data(cfg, eps0);
  StepOptions so;
  so.scheme = cfg.scheme;
  so.cfl = cfg.cfl;
  const double dt0 = std::min(stable_dt(init.compressible, p, so),
                              ideal_dt_limit(init.ideal, cfg.cfl));
  double interval = cfg.diag_every * kHeadroom * dt0;
  if (!std::isfinite(interval) || interval <= 0.0) interval = cfg.T_final;
  SamplePlan plan;
  plan.num_samples = std::max(1, static_cast<int>(std::ceil(cfg.T_final / interval - 1e-9)));
  plan.interval = cfg.T_final / plan.num_samples;
  return plan;
}

CaseResult run_case(const RunConfig& cfg, double eps, const RunOptions& opt) {
  cfg.validate();
  if (opt.reference_refine != 1 && opt.reference_refine != 2) {
    throw ConfigError("reference_refine must be 1 or 2");
  }
  const auto it = std::find(cfg.eps_list.begin(), cfg.eps_list.end(), eps);
  const std::size_t index =
      it == cfg.eps_list.end() ? cfg.eps_list.size() : static_cast<std::size_t>(it - cfg.eps_list.begin());

  CaseResult result;
  result.case_id = case_id(index, eps);
  result.eps = eps;

  const Grid grid = cfg.grid();
  const PhysParams p = cfg.params(eps);
  p.validate(cfg.dim);
  StepOptions so;
  so.scheme = cfg.scheme;
  so.cfl = cfg.cfl;
  const Subdomain sub = cfg.local_subdomain();
  const int refine = opt.reference_refine;

  InitialData init = make_initial_data(cfg, eps);
  CompressibleState c = init.compressible;
  IdealState ideal = init.ideal;
  if (refine > 1) {
    RunConfig fine_cfg = cfg;
    fine_cfg.n = cfg.n * refine;
    ideal = make_initial_data(fine_cfg, eps).ideal;
  }
  const AcousticState corr0 = init_corrector(c.rho, velocity(c), p, cfg.mollifier(), 0.0);

  const SamplePlan plan = sample_plan(cfg);
  const double dt_cfl = std::min(stable_dt(c, p, so), ideal_dt_limit(ideal, cfg.cfl));
  int steps_per_sample = 1;
  if (std::isfinite(dt_cfl) && dt_cfl > 0.0) {
    steps_per_sample =
        std::max(1, static_cast<int>(std::ceil(plan.interval / (kHeadroom * dt_cfl) - 1e-9)));
  }
  const double dt = plan.interval / steps_per_sample;

  const double mass0 = total_mass(c);
  std::vector<EnergyRecord> energy;
  energy.push_back({0.0, energy_total(c, p), energy_dissipation(c, p), 0.0, 0.0});
  double grad0 = 0.0;

  auto sample = [&](double t) {
    const IdealState ref =
        refine > 1 ? IdealState{ideal.t, restrict_to(ideal.u, grid, refine),
                                restrict_to(ideal.H, grid, refine)}
                   : ideal;
    const AcousticState corr = propagate(corr0, t, p);
    const ModulatedComponents mc = modulated_components(c, ref, corr, p);
    const TheoremNorms tn = theorem_norms(c, ref, p, sub);
    const EnergyRecord& er = energy.back();
    SweepRecord r;
    r.case_id = result.case_id;
    r.eps = eps;
    r.t = t;
    r.E_total = er.E;
    r.D_cum = er.D_cum;
    r.slack = er.slack;
    r.w2 = mc.w2;
    r.Z2 = mc.Z2;
    r.pi2 = mc.pi2;
    r.mod_total = mc.total;
    r.uncorrected_w2 = mc.uncorrected_w2;
    r.uncorrected_pi2 = mc.uncorrected_pi2;
    r.lq2_rho = tn.lq2_rho;
    r.l2_Zh = tn.l2_Zh;
    r.l2_Pu = tn.l2_Pu;
    r.divH_rel = div_relative(c.H);
    r.grad_u_inf = gradient_max_norm(ideal.u);
    result.records.push_back(r);
    if (t == 0.0) {
      grad0 = r.grad_u_inf;
    } else if (grad0 > 0.0 && r.grad_u_inf > kRegularityBudget * grad0) {
      throw RegularityError("regularity budget exceeded: ||grad u||_inf grew from " +
                            fmt(grad0) + " to " + fmt(r.grad_u_inf));
    }
  };

  double t_abort = 0.0;
  try {
    sample(0.0);
    for (int k = 1; k <= plan.num_samples; ++k) {
      for (int s = 0; s < steps_per_sample; ++s) {
        c = step(c, p, dt, so);
        ideal = step_ideal(ideal, dt, cfg.cfl);
        const EnergyRecord& prev = energy.back();
        EnergyRecord er{c.t, energy_total(c, p), energy_dissipation(c, p), 0.0, 0.0};
        er.D_cum = prev.D_cum + 0.5 * (prev.D + er.D) * (er.t - prev.t);
        er.slack = energy.front().E - er.E - er.D_cum;
        energy.push_back(er);
      }
      // Pin the sample time so every eps reports the same t column.
      const double t = k == plan.num_samples ? cfg.T_final : k * plan.interval;
      c.t = t;
      ideal.t = t;
      energy.back().t = t;
      sample(t);
    }
  } catch (const NumericalAbort& e) {
    result.aborted = true;
    result.abort_reason = e.what();
    t_abort = c.t;
  }

  std::vector<EnergyRecord> check = energy;
  result.energy = check_energy_inequality(check);

  json meta;
  meta["case_id"] = result.case_id;
  meta["eps"] = eps;
  meta["status"] = result.aborted ? "aborted" : "completed";
  if (result.aborted) {
    meta["reason"] = result.abort_reason;
    meta["aborted_at"] = t_abort;
  }
  meta["scheme"] = to_string(cfg.scheme);
  meta["dt_history"] = json::array({{{"from_t", 0.0}, {"dt", dt}}});
  meta["steps_per_sample"] = steps_per_sample;
  meta["num_samples"] = plan.num_samples;
  meta["sample_interval"] = plan.interval;
  meta["steps_taken"] = energy.size() - 1;
  meta["wrap_around"] = is_dispersive_window(cfg, eps) ? "dispersive" : "wrapped";
  meta["threads"] = opt.threads;
  meta["reference_refine"] = refine;
  meta["params"] = {{"mu", p.mu()}, {"nu", p.nu()}, {"lambda", p.lambda()},
                    {"a", p.a},   {"gamma", p.gamma}, {"alpha", p.alpha}, {"beta", p.beta}};
  meta["energy_inequality"] = energy_json(result.energy);
  meta["mass_drift_rel"] = std::abs(total_mass(c) - mass0) / mass0;
  meta["momentum_gap"] = momentum_approximation_gap(init.compressible.rho, velocity(init.compressible));
  meta["corrector_energy"] = corr0.initial_energy();
  try {
    const VelocityBoundTerms vb = velocity_bound_terms(c, p);
    meta["velocity_bound"] = {{"u_sq", vb.u_sq}, {"scaled_grad_sq", vb.scaled_grad_sq}};
  } catch (const NumericalAbort&) {
    meta["velocity_bound"] = nullptr;
  }
  meta["config"] = to_json(cfg);
  result.metadata = meta;

  if (opt.write_files) {
    fs::create_directories(cfg.out_dir);
    write_text(csv_path(cfg, result.case_id),
               format_records(result.records,
                              result.aborted ? std::optional<double>(t_abort) : std::nullopt,
                              result.case_id, eps));
    write_text(meta_path(cfg, result.case_id), meta.dump(2) + "\n");
  }
  return result;
}

SweepOutcome run_sweep(const RunConfig& cfg, const RunOptions& opt) {
  cfg.validate();
  const std::size_t ncase = cfg.eps_list.size();
  SweepOutcome out;
  out.cases.resize(ncase);
  std::vector<std::exception_ptr> errors(ncase);

  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < ncase; ++i) {
    const double eps = cfg.eps_list[i];
    if (opt.resume && opt.write_files) {
      if (auto done = load_completed(cfg, case_id(i, eps), eps)) {
        out.cases[i] = std::move(*done);
        continue;
      }
    }
    todo.push_back(i);
  }

  const int workers = std::max(1, std::min<int>(opt.threads, static_cast<int>(todo.size())));
  const int ntodo = static_cast<int>(todo.size());
#pragma omp parallel for num_threads(workers) schedule(dynamic, 1)
  for (int k = 0; k < ntodo; ++k) {
    const std::size_t i = todo[static_cast<std::size_t>(k)];
    try {
      out.cases[i] = run_case(cfg, cfg.eps_list[i], opt);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<RatePoint> points;
  std::vector<std::string> excluded;
  for (const CaseResult& c : out.cases) {
    if (c.aborted) {
      excluded.push_back(c.case_id);
      continue;
    }
    points.push_back({c.eps, c.sup_mod_total(), c.initial_misfit()});
  }
  try {
    RateReport report = fit_rate(points, cfg.alpha, cfg.beta);
    report.excluded = excluded;
    out.report = report;
    if (opt.write_files) {
      write_text(fs::path(cfg.out_dir) / "rate_table.csv", format_rate_table(report));
      json rj = {{"fitted_slope", report.fitted_slope},
                 {"sigma_theory", report.sigma_theory},
                 {"excluded", report.excluded}};
      write_text(fs::path(cfg.out_dir) / "rate_report.json", rj.dump(2) + "\n");
    }
  } catch (const InsufficientDataError& e) {
    out.fit_error = e.what();
  }
  return out;
}

std::string format_records(const std::vector<SweepRecord>& records,
                           std::optional<double> aborted_at, const std::string& id,
                           double eps) {
  std::string s = kSweepCsvHeader;
  s += '\n';
  for (const SweepRecord& r : records) {
    s += r.case_id;
    for (double v : {r.eps, r.t, r.E_total, r.D_cum, r.slack, r.w2, r.Z2, r.pi2, r.mod_total,
                     r.uncorrected_w2, r.uncorrected_pi2, r.lq2_rho, r.l2_Zh, r.l2_Pu,
                     r.divH_rel, r.grad_u_inf}) {
      s += ',';
      s += fmt(v);
    }
    s += '\n';
  }
  if (aborted_at) {
    s += id + ',' + fmt(eps) + ',' + fmt(*aborted_at) + ",aborted";
    s += std::string(kColumns - 4, ',');
    s += '\n';
  }
  return s;
}

ParsedCaseCsv parse_records(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || split_csv_line(line) != split_csv_line(kSweepCsvHeader)) {
    throw FormatError("row 1: header does not match the diagnostics schema");
  }
  ParsedCaseCsv out;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    if (out.aborted) {
      throw FormatError("row " + std::to_string(row) + ": data after the aborted marker");
    }
    const auto cells = split_csv_line(line);
    if (cells.size() != kColumns) {
      throw FormatError("row " + std::to_string(row) + ": expected " + std::to_string(kColumns) +
                        " columns, found " + std::to_string(cells.size()));
    }
    if (cells[3] == "aborted") {
      out.aborted = true;
      out.aborted_at = parse_number(cells[2], row, 2);
      continue;
    }
    SweepRecord r;
    r.case_id = cells[0];
    double* fields[] = {&r.eps,       &r.t,       &r.E_total,        &r.D_cum,
                        &r.slack,     &r.w2,      &r.Z2,             &r.pi2,
                        &r.mod_total, &r.uncorrected_w2, &r.uncorrected_pi2, &r.lq2_rho,
                        &r.l2_Zh,     &r.l2_Pu,   &r.divH_rel,       &r.grad_u_inf};
    for (std::size_t c = 1; c < cells.size(); ++c) {
      *fields[c - 1] = parse_number(cells[c], row, c);
    }
    out.records.push_back(std::move(r));
  }
  return out;
}

ParsedCaseCsv read_case_csv(const fs::path& path) {
  try {
    return parse_records(read_text(path));
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

std::string format_rate_table(const RateReport& r) {
  std::string s = "eps,sup_mod_total,pair_slope,fitted_slope,sigma_theory\n";
  for (std::size_t i = 0; i < r.eps_values.size(); ++i) {
    s += fmt(r.eps_values[i]) + ',' + fmt(r.sup_mod_total[i]) + ',';
    if (i > 0) s += fmt(r.pair_slopes[i - 1]);
    s += ',' + fmt(r.fitted_slope) + ',' + fmt(r.sigma_theory) + '\n';
  }
  return s;
}

RateReport rate_from_directory(const fs::path& dir, const fs::path& out) {
  if (!fs::is_directory(dir)) throw FormatError("not a directory: " + dir.string());
  std::vector<fs::path> metas;
  for (const auto& e : fs::directory_iterator(dir)) {
    const std::string name = e.path().filename().string();
    if (name.size() > 10 && name.ends_with(".meta.json")) metas.push_back(e.path());
  }
  std::sort(metas.begin(), metas.end());
  std::vector<RatePoint> points;
  std::vector<std::string> excluded;
  std::optional<double> alpha, beta;
  for (const fs::path& mp : metas) {
    const json m = read_json(mp);
    const std::string id = m.at("case_id").get<std::string>();
    const double a = m.at("params").at("alpha").get<double>();
    const double b = m.at("params").at("beta").get<double>();
    if ((alpha && *alpha != a) || (beta && *beta != b)) {
      throw FormatError("cases in " + dir.string() + " mix different alpha/beta");
    }
    alpha = a;
    beta = b;
    const ParsedCaseCsv csv = read_case_csv(dir / (id + ".csv"));
    if (csv.aborted || m.value("status", "") != "completed" || csv.records.empty()) {
      excluded.push_back(id);
      continue;
    }
    double sup = 0.0;
    for (const SweepRecord& r : csv.records) sup = std::max(sup, r.mod_total);
    points.push_back({csv.records.front().eps, sup, csv.records.front().mod_total});
  }
  if (!alpha) throw InsufficientDataError("no case metadata found in " + dir.string());
  RateReport report = fit_rate(points, *alpha, *beta);
  report.excluded = excluded;
  write_text(out, format_rate_table(report));
  return report;
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot write " + path.string());
  f << text;
  if (!f) throw Error("write failed: " + path.string());
}

}  // namespace mhdlab
