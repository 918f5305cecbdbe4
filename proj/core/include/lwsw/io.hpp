#pragma once

// Persistence: profile JSON files, solver and property reports, run
// configuration (strict schema, unknown keys rejected), and RFC-4180 CSV.

#include <optional>
#include <string>
#include <vector>

#include "lwsw/model.hpp"
#include "lwsw/properties.hpp"

namespace lwsw {

struct ProfileMeta {
  std::string solver;
  double residual = 0.0;
  double K = 0.0;
  double F_integral = 0.0;
};

// Schema: {format_version, params{alpha,beta,gamma,tau,c,omega},
// grid{L,M}, phi: N arrays of M reals, psi: M reals,
// meta{solver,residual,K,F_integral,tool_version}}. Numbers are written
// shortest-round-trip, so written arrays reload bit-identically.
void save_profile(const std::string& path, const ProfileSet& t, const ProfileMeta& meta);

struct LoadedProfile {
  ProfileSet profile;
  ProfileMeta meta;
};

LoadedProfile load_profile(const std::string& path);

std::string solve_report_json(const SolveReport& r);
std::string property_report_json(const PropertyReport& r);

struct RunConfig {
  ModelParams model;  // defaults to the N = 1 reference family below
  double half_width = 40.0;
  std::size_t grid_size = 1024;
  std::string solver = "petviashvili";  // or "weinstein"
  std::optional<double> tol;            // solver default when unset
  std::optional<int> max_iter;
  double gaussian_amplitude = 1.0;
  double gaussian_width = 2.0;
  unsigned long seed = 0;
};

RunConfig default_run_config();
// Strict parse: unknown keys, wrong types and malformed values are rejected
// (ValidationError); unreadable/unparseable input is IoError.
RunConfig parse_run_config(const std::string& json_text);

// Shortest representation that parses back to the same double.
std::string format_double(double x);

// RFC-4180: header row, CRLF line endings, '.' decimal separator.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);
std::vector<std::vector<double>> read_numeric_csv(const std::string& path,
                                                  std::vector<std::string>* header = nullptr);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// "out.json" -> "out" + suffix; other names just get the suffix appended.
std::string sidecar_path(const std::string& out_path, const std::string& suffix);

}  // namespace lwsw
