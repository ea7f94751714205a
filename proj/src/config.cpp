#include "mhdlab/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "mhdlab/errors.hpp"

namespace mhdlab {

using nlohmann::json;

namespace {

const std::set<std::string> kKeys = {
    "dim",   "n",        "box_len",   "gamma",      "a",          "alpha",        "beta",
    "lambda_policy",     "eps_list",  "T_final",    "cfl",        "scheme",       "delta",
    "init_kind",         "amp_acoustic", "seed",    "diag_every", "subdomain",    "out_dir",
    "threads", "wrapped"};

template <class T>
T read(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config key '") + key + "': " + e.what());
  }
}

LambdaPolicy parse_lambda(const json& j) {
  if (j.is_string() && j.get<std::string>() == "zero") return {};
  if (j.is_object() && j.size() == 1 && j.contains("ratio") && j["ratio"].is_number()) {
    return {LambdaPolicyKind::ratio, j["ratio"].get<double>()};
  }
  throw ConfigError("lambda_policy must be \"zero\" or {\"ratio\": c}");
}

std::array<double, 3> parse_corner(const json& j, int dim, const char* which) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    throw ConfigError(std::string("subdomain.") + which + " must list dim numbers");
  }
  std::array<double, 3> out{};
  for (int a = 0; a < dim; ++a) out[static_cast<std::size_t>(a)] = j[a].get<double>();
  return out;
}

}  // namespace

std::string to_string(TimeScheme s) {
  return s == TimeScheme::rk4_explicit ? "rk4_explicit" : "imex_acoustic";
}

std::string to_string(InitKind k) {
  return k == InitKind::general ? "general" : "well_prepared";
}

PhysParams RunConfig::params(double eps) const {
  PhysParams p = PhysParams::with_exponents(eps, alpha, beta, gamma, lambda_policy);
  if (a > 0.0) p.a = a;
  return p;
}

MollifierSpec RunConfig::mollifier() const {
  const double d = delta > 0.0 ? delta : 2.0 * box_len / n;
  return {d, MollifierKind::bump};
}

Subdomain RunConfig::local_subdomain() const {
  return subdomain_given ? subdomain : Subdomain::whole(grid());
}

void RunConfig::validate() const {
  const Grid g = [&] {
    try {
      return grid();
    } catch (const ConfigError& e) {
      throw ConfigError(std::string("config: ") + e.what());
    }
  }();
  if (!(gamma > 1.0)) throw ConfigError("config: gamma must exceed 1");
  if (a < 0.0) throw ConfigError("config: a must be positive");
  if (!(alpha > 0.0 && beta > 0.0 && alpha + beta < 2.0)) {
    throw ConfigError("config: need alpha, beta > 0 and 0 < alpha + beta < 2");
  }
  if (eps_list.empty()) throw ConfigError("config: eps_list is empty");
  for (std::size_t k = 0; k < eps_list.size(); ++k) {
    if (!(eps_list[k] > 0.0 && eps_list[k] < 1.0)) {
      throw ConfigError("config: every eps must lie in (0, 1)");
    }
    if (k > 0 && !(eps_list[k] < eps_list[k - 1])) {
      throw ConfigError("config: eps_list must be strictly decreasing");
    }
  }
  for (double eps : eps_list) params(eps).validate(dim);
  if (!(T_final > 0.0) || !std::isfinite(T_final)) throw ConfigError("config: T_final must be positive");
  if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("config: cfl must lie in (0, 1]");
  if (delta < 0.0) throw ConfigError("config: delta must be positive");
  mollifier().validate(g);
  if (amp_acoustic < 0.0) throw ConfigError("config: amp_acoustic must be nonnegative");
  if (diag_every < 1) throw ConfigError("config: diag_every must be >= 1");
  if (threads < 1) throw ConfigError("config: threads must be >= 1");
  if (subdomain_given) {
    for (int k = 0; k < dim; ++k) {
      const auto i = static_cast<std::size_t>(k);
      if (!(subdomain.lo[i] >= 0.0 && subdomain.lo[i] < subdomain.hi[i] &&
            subdomain.hi[i] <= box_len)) {
        throw ConfigError("config: subdomain must be a nonempty box inside the domain");
      }
    }
  }
  if (init_kind == InitKind::general && amp_acoustic > 0.0 && !wrapped) {
    const double speed = std::sqrt(params(eps_list.front()).a_gamma());
    if (!(box_len > 2.0 * speed * T_final / eps_list.front())) {
      throw ConfigError(
          "config: general data leaves the dispersive window (need box_len > 2 T_final / eps); "
          "set \"wrapped\": true to acknowledge wrap-around");
    }
  }
}

RunConfig parse_config(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (!kKeys.contains(key)) throw ConfigError("config: unknown key '" + key + "'");
  }
  RunConfig c;
  c.dim = read(j, "dim", c.dim);
  c.n = read(j, "n", c.n);
  c.box_len = read(j, "box_len", c.box_len);
  c.gamma = read(j, "gamma", c.gamma);
  c.a = read(j, "a", c.a);
  if (j.contains("a") && !(c.a > 0.0)) throw ConfigError("config: a must be positive");
  c.alpha = read(j, "alpha", c.alpha);
  c.beta = read(j, "beta", c.beta);
  if (j.contains("lambda_policy")) c.lambda_policy = parse_lambda(j["lambda_policy"]);
  c.eps_list = read(j, "eps_list", c.eps_list);
  c.T_final = read(j, "T_final", c.T_final);
  c.cfl = read(j, "cfl", c.cfl);
  if (j.contains("scheme")) {
    const auto s = read<std::string>(j, "scheme", "");
    if (s == "rk4_explicit") {
      c.scheme = TimeScheme::rk4_explicit;
    } else if (s == "imex_acoustic") {
      c.scheme = TimeScheme::imex_acoustic;
    } else {
      throw ConfigError("config: scheme must be rk4_explicit or imex_acoustic");
    }
  }
  c.delta = read(j, "delta", c.delta);
  if (j.contains("init_kind")) {
    const auto s = read<std::string>(j, "init_kind", "");
    if (s == "well_prepared") {
      c.init_kind = InitKind::well_prepared;
    } else if (s == "general") {
      c.init_kind = InitKind::general;
    } else {
      throw ConfigError("config: init_kind must be well_prepared or general");
    }
  }
  c.amp_acoustic = read(j, "amp_acoustic", c.amp_acoustic);
  c.seed = read(j, "seed", c.seed);
  c.diag_every = read(j, "diag_every", c.diag_every);
  if (j.contains("subdomain")) {
    const auto& s = j["subdomain"];
    if (!s.is_object() || !s.contains("lo") || !s.contains("hi") || s.size() != 2) {
      throw ConfigError("config: subdomain must be {\"lo\": [...], \"hi\": [...]}");
    }
    c.subdomain.lo = parse_corner(s["lo"], c.dim, "lo");
    c.subdomain.hi = parse_corner(s["hi"], c.dim, "hi");
    c.subdomain_given = true;
  }
  c.out_dir = read(j, "out_dir", c.out_dir);
  c.threads = read(j, "threads", c.threads);
  c.wrapped = read(j, "wrapped", c.wrapped);
  c.validate();
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open config " + path.string());
  json j;
  try {
    is >> j;
  } catch (const json::exception& e) {
    throw ConfigError("config " + path.string() + ": " + e.what());
  }
  return parse_config(j);
}

json to_json(const RunConfig& c) {
  json j;
  j["dim"] = c.dim;
  j["n"] = c.n;
  j["box_len"] = c.box_len;
  j["gamma"] = c.gamma;
  j["a"] = c.a > 0.0 ? c.a : 1.0 / c.gamma;
  j["alpha"] = c.alpha;
  j["beta"] = c.beta;
  if (c.lambda_policy.kind == LambdaPolicyKind::zero) {
    j["lambda_policy"] = "zero";
  } else {
    j["lambda_policy"] = {{"ratio", c.lambda_policy.ratio}};
  }
  j["eps_list"] = c.eps_list;
  j["T_final"] = c.T_final;
  j["cfl"] = c.cfl;
  j["scheme"] = to_string(c.scheme);
  j["delta"] = c.mollifier().delta;
  j["init_kind"] = to_string(c.init_kind);
  j["amp_acoustic"] = c.amp_acoustic;
  j["seed"] = c.seed;
  j["diag_every"] = c.diag_every;
  const Subdomain sub = c.local_subdomain();
  j["subdomain"] = {{"lo", std::vector<double>(sub.lo.begin(), sub.lo.begin() + c.dim)},
                    {"hi", std::vector<double>(sub.hi.begin(), sub.hi.begin() + c.dim)}};
  j["out_dir"] = c.out_dir;
  j["threads"] = c.threads;
  j["wrapped"] = c.wrapped;
  return j;
}

}  // namespace mhdlab
