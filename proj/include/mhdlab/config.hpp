#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "mhdlab/compressible.hpp"
#include "mhdlab/grid.hpp"
#include "mhdlab/modulated.hpp"
#include "mhdlab/params.hpp"

namespace mhdlab {

enum class InitKind { well_prepared, general };

/// One sweep configuration. The JSON file uses exactly these member names;
/// unknown keys are rejected.
struct RunConfig {
  int dim = 2;
  int n = 64;
  double box_len = 6.283185307179586;
  double gamma = 1.4;
  double a = 0.0;  // 0 in the file means "not given": a = 1/gamma
  double alpha = 0.5;
  double beta = 0.5;
  LambdaPolicy lambda_policy{};
  std::vector<double> eps_list;
  double T_final = 0.5;
  double cfl = 0.4;
  TimeScheme scheme = TimeScheme::imex_acoustic;
  double delta = 0.0;  // 0 means two grid spacings
  InitKind init_kind = InitKind::well_prepared;
  double amp_acoustic = 0.0;
  std::uint64_t seed = 0;
  int diag_every = 10;
  Subdomain subdomain{};  // defaults to the whole box
  bool subdomain_given = false;
  std::string out_dir = "out";
  int threads = 1;
  bool wrapped = false;  // acknowledges acoustic wrap-around in general-data runs

  Grid grid() const { return Grid(dim, n, box_len); }
  PhysParams params(double eps) const;
  MollifierSpec mollifier() const;
  Subdomain local_subdomain() const;

  /// Throws ConfigError on any violated constraint.
  void validate() const;
};

/// Parses and validates. Throws ConfigError on unknown keys, wrong types or
/// invalid values.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::filesystem::path& path);
nlohmann::json to_json(const RunConfig& cfg);

std::string to_string(TimeScheme s);
std::string to_string(InitKind k);

}  // namespace mhdlab
