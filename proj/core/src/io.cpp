#include "lwsw/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace lwsw {

using nlohmann::json;

namespace {

void require_keys(const json& obj, const std::string& where,
                  std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : allowed)
      if (item.key() == k) {
        known = true;
        break;
      }
    if (!known)
      throw ValidationError("config: unknown key '" + item.key() + "' in " + where);
  }
}

double as_number(const json& j, const std::string& name) {
  if (!j.is_number()) throw ValidationError("config: '" + name + "' must be a number");
  return j.get<double>();
}

json parse_json(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw IoError(what + ": malformed JSON");
  return j;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << content;
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::string sidecar_path(const std::string& out_path, const std::string& suffix) {
  std::filesystem::path p(out_path);
  if (p.has_extension()) p.replace_extension();
  return p.string() + suffix;
}

void save_profile(const std::string& path, const ProfileSet& t, const ProfileMeta& meta) {
  validate_profile(t);
  json j;
  j["format_version"] = 1;
  j["params"] = {{"alpha", t.params.alpha}, {"beta", t.params.beta},
                 {"gamma", t.params.gamma}, {"tau", t.params.tau},
                 {"c", t.params.c},         {"omega", t.params.omega}};
  j["grid"] = {{"L", t.grid->half_width()}, {"M", t.grid->size()}};
  json phis = json::array();
  for (const auto& phi : t.phi) phis.push_back(phi.values);
  j["phi"] = std::move(phis);
  j["psi"] = t.psi.values;
  j["meta"] = {{"solver", meta.solver},
               {"residual", meta.residual},
               {"K", meta.K},
               {"F_integral", meta.F_integral},
               {"tool_version", kToolVersion}};
  write_text_file(path, j.dump());
}

LoadedProfile load_profile(const std::string& path) {
  const json j = parse_json(read_text_file(path), "profile '" + path + "'");
  if (!j.is_object()) throw ValidationError("profile: top level must be an object");
  require_keys(j, "profile", {"format_version", "params", "grid", "phi", "psi", "meta"});
  for (const char* k : {"format_version", "params", "grid", "phi", "psi", "meta"})
    if (!j.contains(k)) throw ValidationError(std::string("profile: missing key '") + k + "'");
  if (!j["format_version"].is_number_integer() || j["format_version"].get<int>() != 1)
    throw ValidationError("profile: unsupported format_version");

  const json& p = j["params"];
  require_keys(p, "params", {"alpha", "beta", "gamma", "tau", "c", "omega"});
  ModelParams params;
  if (!p.contains("alpha") || !p["alpha"].is_array() || p["alpha"].empty())
    throw ValidationError("profile: params.alpha must be a nonempty array");
  for (const auto& a : p["alpha"]) params.alpha.push_back(as_number(a, "params.alpha[]"));
  params.beta = as_number(p.at("beta"), "params.beta");
  params.gamma = as_number(p.at("gamma"), "params.gamma");
  params.tau = as_number(p.at("tau"), "params.tau");
  params.c = as_number(p.at("c"), "params.c");
  params.omega = as_number(p.at("omega"), "params.omega");
  validate_params(params);

  const json& g = j["grid"];
  require_keys(g, "grid", {"L", "M"});
  const double L = as_number(g.at("L"), "grid.L");
  if (!g.at("M").is_number_unsigned()) throw ValidationError("profile: grid.M must be a positive integer");
  GridPtr grid = make_grid(L, g.at("M").get<std::size_t>());

  auto read_field = [&](const json& arr, const char* name) {
    if (!arr.is_array() || arr.size() != grid->size())
      throw ValidationError(std::string("profile: ") + name + " must hold M values");
    std::vector<double> v;
    v.reserve(arr.size());
    for (const auto& x : arr) v.push_back(as_number(x, name));
    return RealField(grid, std::move(v));
  };

  LoadedProfile out;
  out.profile.params = params;
  out.profile.grid = grid;
  if (!j["phi"].is_array() || j["phi"].size() != params.components())
    throw ValidationError("profile: phi must hold one array per component");
  for (const auto& arr : j["phi"]) out.profile.phi.push_back(read_field(arr, "phi"));
  out.profile.psi = read_field(j["psi"], "psi");
  validate_profile(out.profile);

  const json& m = j["meta"];
  require_keys(m, "meta", {"solver", "residual", "K", "F_integral", "tool_version"});
  if (m.contains("solver")) out.meta.solver = m["solver"].get<std::string>();
  if (m.contains("residual")) out.meta.residual = as_number(m["residual"], "meta.residual");
  if (m.contains("K")) out.meta.K = as_number(m["K"], "meta.K");
  if (m.contains("F_integral"))
    out.meta.F_integral = as_number(m["F_integral"], "meta.F_integral");
  return out;
}

std::string solve_report_json(const SolveReport& r) {
  json j;
  j["tool_version"] = kToolVersion;
  j["solver"] = r.solver;
  j["iterations"] = r.iterations;
  j["final_residual"] = r.final_residual;
  if (r.solver == "petviashvili") j["final_stabilizer"] = r.final_stabilizer;
  j["K"] = r.K_value;
  j["F_integral"] = r.F_integral;
  j["lambda"] = r.lambda_value;
  j["Lambda"] = r.Lambda_value;
  j["converged"] = r.converged;
  if (!r.message.empty()) j["message"] = r.message;
  j["residual_history"] = r.residual_history;
  return j.dump(2);
}

std::string property_report_json(const PropertyReport& r) {
  json j;
  j["tool_version"] = kToolVersion;
  j["all_pass"] = r.all_pass;
  j["residual"] = {{"value", r.residual},
                   {"threshold", r.thresholds.residual_max},
                   {"pass", r.residual_pass}};
  j["sign"] = {{"pass", r.sign.pass},
               {"trivial", r.sign.trivial},
               {"psi_global_min", r.sign.psi_global_min},
               {"psi_min_above_floor", r.sign.psi_min_above_floor},
               {"psi_underflow_floor", r.sign.psi_floor},
               {"psi_below_floor_count", r.sign.psi_below_floor_count},
               {"phi_sign", r.sign.phi_sign},
               {"phi_min_signed", r.sign.phi_min_signed},
               {"phi_noise_floor", r.sign.phi_floor}};
  j["evenness"] = {{"asymmetry", r.symmetry.asymmetry},
                   {"threshold", r.thresholds.evenness_max},
                   {"pass", r.symmetry.evenness_pass}};
  j["monotonicity"] = {{"max_uphill_rel", r.symmetry.uphill_rel},
                       {"threshold", r.thresholds.monotonicity_rel},
                       {"pass", r.symmetry.monotonicity_pass}};
  json decay = json::array();
  for (const auto& d : r.decay)
    decay.push_back({{"fitted_slope", d.slope},
                     {"target_rate", d.target},
                     {"rel_error", d.rel_error},
                     {"rel_tolerance", r.thresholds.decay_rel},
                     {"window", {d.window_lo, d.window_hi}},
                     {"points", d.points},
                     {"pass", d.pass}});
  j["decay"] = {{"components", std::move(decay)}, {"pass", r.decay_pass}};
  j["fourier_positivity"] = {{"pass", r.fourier.pass},
                             {"trivial", r.fourier.trivial},
                             {"max_imag_rel", r.fourier.max_imag_rel},
                             {"imag_threshold", r.thresholds.fourier_imag_rel},
                             {"min_real_above_floor", r.fourier.min_real_above_floor},
                             {"noise_floor_rel", r.thresholds.fourier_floor_rel},
                             {"max_uphill_rel", r.fourier.max_uphill_rel}};
  j["multiplier"] = {{"kappa_hat", r.kappa_hat}, {"two_K_over_3F", r.kappa_identity}};
  j["one_sign_correlation_min"] = r.min_abs_correlation;
  return j.dump(2);
}

RunConfig default_run_config() {
  RunConfig cfg;
  cfg.model.alpha = {2.0};
  cfg.model.beta = 1.0;
  cfg.model.gamma = 1.0;
  cfg.model.tau = 0.0;
  cfg.model.c = 1.0;
  cfg.model.omega = 1.25;
  return cfg;
}

RunConfig parse_run_config(const std::string& text) {
  const json j = parse_json(text, "config");
  if (!j.is_object()) throw ValidationError("config: top level must be an object");
  require_keys(j, "top level", {"model", "grid", "solver", "seed"});

  RunConfig cfg = default_run_config();
  if (j.contains("model")) {
    const json& m = j["model"];
    require_keys(m, "model", {"alpha", "beta", "gamma", "tau", "c", "omega"});
    if (m.contains("alpha")) {
      if (!m["alpha"].is_array() || m["alpha"].empty())
        throw ValidationError("config: model.alpha must be a nonempty array");
      cfg.model.alpha.clear();
      for (const auto& a : m["alpha"]) cfg.model.alpha.push_back(as_number(a, "model.alpha[]"));
    }
    if (m.contains("beta")) cfg.model.beta = as_number(m["beta"], "model.beta");
    if (m.contains("gamma")) cfg.model.gamma = as_number(m["gamma"], "model.gamma");
    if (m.contains("tau")) cfg.model.tau = as_number(m["tau"], "model.tau");
    if (m.contains("c")) cfg.model.c = as_number(m["c"], "model.c");
    if (m.contains("omega")) cfg.model.omega = as_number(m["omega"], "model.omega");
  }
  if (j.contains("grid")) {
    const json& g = j["grid"];
    require_keys(g, "grid", {"half_width", "size"});
    if (g.contains("half_width")) cfg.half_width = as_number(g["half_width"], "grid.half_width");
    if (g.contains("size")) {
      if (!g["size"].is_number_unsigned())
        throw ValidationError("config: grid.size must be a positive integer");
      cfg.grid_size = g["size"].get<std::size_t>();
    }
  }
  if (j.contains("solver")) {
    const json& s = j["solver"];
    require_keys(s, "solver",
                 {"kind", "tol", "max_iter", "gaussian_amplitude", "gaussian_width"});
    if (s.contains("kind")) {
      if (!s["kind"].is_string()) throw ValidationError("config: solver.kind must be a string");
      cfg.solver = s["kind"].get<std::string>();
      if (cfg.solver != "petviashvili" && cfg.solver != "weinstein")
        throw ValidationError("config: solver.kind must be 'petviashvili' or 'weinstein'");
    }
    if (s.contains("tol")) cfg.tol = as_number(s["tol"], "solver.tol");
    if (s.contains("max_iter")) {
      if (!s["max_iter"].is_number_integer())
        throw ValidationError("config: solver.max_iter must be an integer");
      cfg.max_iter = s["max_iter"].get<int>();
    }
    if (s.contains("gaussian_amplitude"))
      cfg.gaussian_amplitude = as_number(s["gaussian_amplitude"], "solver.gaussian_amplitude");
    if (s.contains("gaussian_width"))
      cfg.gaussian_width = as_number(s["gaussian_width"], "solver.gaussian_width");
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned())
      throw ValidationError("config: seed must be a nonnegative integer");
    cfg.seed = j["seed"].get<unsigned long>();
  }
  return cfg;
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  std::ostringstream ss;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) ss << ',';
    ss << header[i];
  }
  ss << "\r\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) ss << ',';
      ss << format_double(row[i]);
    }
    ss << "\r\n";
  }
  write_text_file(path, ss.str());
}

std::vector<std::vector<double>> read_numeric_csv(const std::string& path,
                                                  std::vector<std::string>* header) {
  const std::string text = read_text_file(path);
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (first) {
      first = false;
      if (header) *header = cells;
      continue;
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& c : cells) {
      double v = 0.0;
      const auto res = std::from_chars(c.data(), c.data() + c.size(), v);
      if (res.ec != std::errc{} || res.ptr != c.data() + c.size())
        throw IoError("csv '" + path + "': cannot parse number '" + c + "'");
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  if (first) throw IoError("csv '" + path + "': missing header row");
  return rows;
}

}  // namespace lwsw
