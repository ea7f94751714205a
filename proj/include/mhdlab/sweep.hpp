#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mhdlab/compressible.hpp"
#include "mhdlab/config.hpp"
#include "mhdlab/modulated.hpp"

namespace mhdlab {

/// One diagnostics row per (case, sample time). Column order of the CSV.
struct SweepRecord {
  std::string case_id;
  double eps = 0.0;
  double t = 0.0;
  double E_total = 0.0;
  double D_cum = 0.0;
  double slack = 0.0;
  double w2 = 0.0;
  double Z2 = 0.0;
  double pi2 = 0.0;
  double mod_total = 0.0;
  double uncorrected_w2 = 0.0;
  double uncorrected_pi2 = 0.0;
  double lq2_rho = 0.0;
  double l2_Zh = 0.0;
  double l2_Pu = 0.0;
  double divH_rel = 0.0;
  double grad_u_inf = 0.0;
};

struct RunOptions {
  int threads = 1;
  /// 1 = ideal reference on the run grid; 2 = on a grid twice as fine.
  int reference_refine = 1;
  bool write_files = true;
  /// Skip cases whose completed CSV and metadata already exist in out_dir.
  bool resume = true;
};

struct CaseResult {
  std::string case_id;
  double eps = 0.0;
  std::vector<SweepRecord> records;
  bool aborted = false;
  bool resumed = false;
  std::string abort_reason;
  EnergyInequalityReport energy{};
  nlohmann::json metadata;

  double sup_mod_total() const;
  double initial_misfit() const;
};

struct SweepOutcome {
  std::vector<CaseResult> cases;  // in eps_list order
  std::optional<RateReport> report;
  std::string fit_error;  // set when the fit could not be computed
};

/// Stable identifier from the position in eps_list and eps.
std::string case_id(std::size_t index, double eps);

/// Samples are taken at T_final * k / num_samples for every eps.
struct SamplePlan {
  int num_samples = 1;
  double interval = 0.0;
};
SamplePlan sample_plan(const RunConfig& cfg);

/// Advances the compressible, ideal and corrector solutions in lockstep.
/// Numerical aborts are caught and reported in the result (partial records
/// are kept); files are written when opt.write_files is set.
CaseResult run_case(const RunConfig& cfg, double eps, const RunOptions& opt = {});

/// Runs every eps concurrently (up to opt.threads cases at once), then fits the
/// rate over the cases that completed.
SweepOutcome run_sweep(const RunConfig& cfg, const RunOptions& opt = {});

// CSV ---------------------------------------------------------------------

extern const char* const kSweepCsvHeader;

/// 17 significant digits; "aborted" marker rows carry only case_id, eps, t.
std::string format_records(const std::vector<SweepRecord>& records,
                           std::optional<double> aborted_at = std::nullopt,
                           const std::string& case_id = {}, double eps = 0.0);

struct ParsedCaseCsv {
  std::vector<SweepRecord> records;
  bool aborted = false;
  double aborted_at = 0.0;
};
/// Throws FormatError with row and column on malformed input.
ParsedCaseCsv parse_records(const std::string& text);
ParsedCaseCsv read_case_csv(const std::filesystem::path& path);

/// Rate table with columns eps, sup_mod_total, pair_slope, fitted_slope,
/// sigma_theory; rows by descending eps.
std::string format_rate_table(const RateReport& report);

/// Fits the rate over every completed case CSV in `dir` (using the metadata
/// sidecars for alpha and beta) and writes the rate table to `out`.
RateReport rate_from_directory(const std::filesystem::path& dir,
                               const std::filesystem::path& out);

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace mhdlab
