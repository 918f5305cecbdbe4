// Command-line front end: computes solitary-wave profiles, certifies their
// qualitative properties, sweeps the constrained ground-state energy, evolves
// profiles under the full system, and exercises the rearrangement and kernel
// primitives. Every failure exits with a machine-readable category on stderr:
// 0 ok, 1 verification verdict failed, 2 validation, 3 non-convergence,
// 4 I/O, 5 internal.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lwsw/dynamics.hpp"
#include "lwsw/fixed_point.hpp"
#include "lwsw/io.hpp"
#include "lwsw/properties.hpp"
#include "lwsw/rearrangement.hpp"
#include "lwsw/variational.hpp"

using nlohmann::json;

namespace {

void emit_error(const std::string& category, const std::string& message) {
  json j;
  j["error"]["category"] = category;
  j["error"]["message"] = message;
  std::cerr << j.dump() << "\n";
}

struct SolveFlags {
  std::string config_path;
  std::string out = "profile.json";
  std::string solver;
  std::optional<std::size_t> grid_size;
  std::optional<double> half_width;
  std::optional<double> tol;
  std::optional<int> max_iter;
};

lwsw::RunConfig resolve_config(const SolveFlags& f) {
  lwsw::RunConfig rc = f.config_path.empty()
                           ? lwsw::default_run_config()
                           : lwsw::parse_run_config(lwsw::read_text_file(f.config_path));
  if (!f.solver.empty()) rc.solver = f.solver;
  if (f.grid_size) rc.grid_size = *f.grid_size;
  if (f.half_width) rc.half_width = *f.half_width;
  if (f.tol) rc.tol = *f.tol;
  if (f.max_iter) rc.max_iter = *f.max_iter;
  if (rc.solver != "petviashvili" && rc.solver != "weinstein")
    throw lwsw::ValidationError("config: solver kind must be petviashvili or weinstein");
  return rc;
}

// Runs the configured solver and returns the multiplier-one solution profile.
std::pair<lwsw::ProfileSet, lwsw::SolveReport> run_solver(const lwsw::RunConfig& rc) {
  auto grid = lwsw::make_grid(rc.half_width, rc.grid_size);
  if (rc.solver == "weinstein") {
    lwsw::VariationalConfig cfg;
    if (rc.tol) cfg.tol = *rc.tol;
    if (rc.max_iter) cfg.max_iter = *rc.max_iter;
    cfg.gaussian_amplitude = rc.gaussian_amplitude;
    cfg.gaussian_width = rc.gaussian_width;
    auto [delta, rep] = lwsw::weinstein_minimize(rc.model, grid, cfg);
    if (!rep.converged) return {delta, rep};
    return {lwsw::rescale_to_solution(delta), rep};
  }
  lwsw::FixedPointConfig cfg;
  if (rc.tol) cfg.tol = *rc.tol;
  if (rc.max_iter) cfg.max_iter = *rc.max_iter;
  cfg.gaussian_amplitude = rc.gaussian_amplitude;
  cfg.gaussian_width = rc.gaussian_width;
  return lwsw::petviashvili_solve(rc.model, grid, cfg);
}

int cmd_solve(const SolveFlags& f) {
  const lwsw::RunConfig rc = resolve_config(f);
  auto [profile, rep] = run_solver(rc);
  if (!rep.converged) throw lwsw::ConvergenceError("solve: " + rep.message);

  lwsw::ProfileMeta meta;
  meta.solver = rep.solver;
  meta.residual = lwsw::ode_residual(profile, 1.0);
  meta.K = lwsw::functional_K(profile);
  meta.F_integral = lwsw::functional_F_integral(profile);
  lwsw::save_profile(f.out, profile, meta);
  lwsw::write_text_file(lwsw::sidecar_path(f.out, ".report.json"),
                        lwsw::solve_report_json(rep) + "\n");
  std::cout << "wrote " << f.out << " (solver " << rep.solver << ", " << rep.iterations
            << " iterations, residual " << lwsw::format_double(meta.residual) << ")\n";
  return 0;
}

int cmd_verify(const std::string& profile_path, const std::string& out) {
  const lwsw::LoadedProfile lp = lwsw::load_profile(profile_path);
  const lwsw::PropertyReport rep = lwsw::run_property_suite(lp.profile);
  const std::string text = lwsw::property_report_json(rep);
  if (!out.empty()) lwsw::write_text_file(out, text + "\n");
  std::cout << text << "\n";
  if (!rep.all_pass) {
    emit_error("verification", "property suite failed; see report for per-check verdicts");
    return 1;
  }
  return 0;
}

int cmd_sweep(const SolveFlags& f, std::vector<double> lambdas, const std::string& out) {
  const lwsw::RunConfig rc = resolve_config(f);
  if (lambdas.empty()) lambdas = {0.5, 1.0, 2.0, 3.0, 5.0};
  std::sort(lambdas.begin(), lambdas.end());
  auto grid = lwsw::make_grid(rc.half_width, rc.grid_size);
  lwsw::VariationalConfig cfg;
  if (rc.tol) cfg.tol = *rc.tol;
  if (rc.max_iter) cfg.max_iter = *rc.max_iter;
  auto [rows, rep] = lwsw::sweep_I(rc.model, grid, lambdas, cfg);

  std::vector<std::vector<double>> table;
  table.reserve(rows.size());
  for (const auto& r : rows)
    table.push_back({r.lambda, r.I_lambda, r.I_scaled, r.kappa_hat, r.Lambda_min});
  lwsw::write_csv(out, {"lambda", "I_lambda", "I_scaled", "kappa_hat", "Lambda"}, table);

  // Verdicts certified on the computed rows themselves.
  double spread = 0.0;
  for (const auto& r : rows)
    spread = std::max(spread, std::abs(r.I_scaled - rows[0].I_scaled) /
                                  std::abs(rows[0].I_scaled));
  bool increasing = true;
  for (std::size_t i = 1; i < rows.size(); ++i)
    increasing = increasing && rows[i].I_lambda > rows[i - 1].I_lambda;
  bool subadditive = true;
  json pairs = json::array();
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = a; b < rows.size(); ++b) {
      const double l1 = rows[a].lambda, l2 = rows[b].lambda;
      const double lhs = std::pow(l1 + l2, 2.0 / 3.0) * rows[0].Lambda_min;
      const double rhs = rows[a].I_lambda + rows[b].I_lambda;
      const bool ok = lhs < rhs;
      subadditive = subadditive && ok;
      pairs.push_back({{"lambda1", l1}, {"lambda2", l2}, {"I_sum_level", lhs},
                       {"I_split", rhs}, {"holds", ok}});
    }
  json v;
  v["scaling_spread_rel"] = spread;
  v["scaling_spread_pass"] = spread <= 1e-10;
  v["strictly_increasing"] = increasing;
  v["subadditive_all_pairs"] = subadditive;
  v["pairs"] = pairs;
  v["Lambda_min"] = rows[0].Lambda_min;
  v["minimizer_iterations"] = rep.iterations;
  v["all_pass"] = (spread <= 1e-10) && increasing && subadditive;
  const std::string verdict_path = lwsw::sidecar_path(out, ".verdicts.json");
  lwsw::write_text_file(verdict_path, v.dump(2) + "\n");
  std::cout << v.dump(2) << "\n";
  return v["all_pass"].get<bool>() ? 0 : 1;
}

int cmd_evolve(const std::string& profile_path, double t_final, double dt, int stride,
               const std::string& out, const std::string& snapshot_dir) {
  if (!(t_final > 0.0)) throw lwsw::ValidationError("evolve: t-final > 0 required");
  if (!(dt > 0.0)) throw lwsw::ValidationError("evolve: dt > 0 required");
  if (stride < 1) throw lwsw::ValidationError("evolve: stride >= 1 required");
  const lwsw::LoadedProfile lp = lwsw::load_profile(profile_path);
  lwsw::WaveState s = lwsw::embed_profile(lp.profile);
  const lwsw::ConservedQuantities q0 = lwsw::conserved_quantities(s);

  if (!snapshot_dir.empty()) std::filesystem::create_directories(snapshot_dir);
  auto snapshot = [&](std::size_t index) {
    if (snapshot_dir.empty()) return;
    std::vector<std::string> header = {"x", "v"};
    for (std::size_t j = 0; j < s.u.size(); ++j) {
      header.push_back("re_u" + std::to_string(j + 1));
      header.push_back("im_u" + std::to_string(j + 1));
    }
    std::vector<std::vector<double>> rows;
    rows.reserve(s.grid->size());
    for (std::size_t i = 0; i < s.grid->size(); ++i) {
      std::vector<double> row = {s.grid->point(i), s.v[i]};
      for (const auto& u : s.u) {
        row.push_back(u[i].real());
        row.push_back(u[i].imag());
      }
      rows.push_back(std::move(row));
    }
    char name[32];
    std::snprintf(name, sizeof name, "snapshot_%06zu.csv", index);
    lwsw::write_csv((std::filesystem::path(snapshot_dir) / name).string(), header, rows);
  };

  std::vector<std::vector<double>> table;
  auto record = [&](std::size_t index) {
    const lwsw::ConservedQuantities q = lwsw::conserved_quantities(s);
    double mass_drift = 0.0;
    for (std::size_t j = 0; j < q.mass.size(); ++j)
      mass_drift = std::max(mass_drift, std::abs(q.mass[j] - q0.mass[j]) / q0.mass[j]);
    const double v_drift = std::abs(q.v_integral - q0.v_integral) /
                           std::max(1e-300, std::abs(q0.v_integral));
    std::vector<double> row = {s.t, lwsw::traveling_wave_error(s, lp.profile)};
    for (double m : q.mass) row.push_back(m);
    row.push_back(q.v_integral);
    row.push_back(mass_drift);
    row.push_back(v_drift);
    table.push_back(std::move(row));
    snapshot(index);
  };

  record(0);
  std::size_t n = 0, recorded = 1;
  while (s.t < t_final - 0.5 * dt) {
    s = lwsw::step(std::move(s), dt);
    ++n;
    if (n % static_cast<std::size_t>(stride) == 0 || !(s.t < t_final - 0.5 * dt))
      record(recorded++);
  }

  std::vector<std::string> header = {"t", "traveling_error"};
  for (std::size_t j = 0; j < s.u.size(); ++j) header.push_back("mass_" + std::to_string(j + 1));
  header.push_back("v_integral");
  header.push_back("mass_drift_rel");
  header.push_back("v_drift_rel");
  lwsw::write_csv(out, header, table);
  std::cout << "evolved to t = " << lwsw::format_double(s.t) << " in " << n
            << " steps; final traveling error " << lwsw::format_double(table.back()[1])
            << "; wrote " << out << "\n";
  return 0;
}

int cmd_rearrange(const std::string& in_path, unsigned long seed, std::size_t grid_size,
                  double half_width, const std::string& out) {
  lwsw::GridPtr grid;
  std::vector<double> values;
  if (!in_path.empty()) {
    const auto rows = lwsw::read_numeric_csv(in_path);
    for (const auto& row : rows) {
      if (row.size() != 1)
        throw lwsw::ValidationError("rearrange: input CSV must have exactly one column");
      values.push_back(row[0]);
    }
    grid = lwsw::make_grid(half_width, values.size());
  } else {
    grid = lwsw::make_grid(half_width, grid_size);
    std::mt19937 rng(static_cast<std::uint_fast32_t>(seed));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    values.resize(grid->size());
    for (auto& v : values) v = unif(rng);
  }

  lwsw::RealField f(grid, values);
  const lwsw::NonnegativeField nn(f);
  const lwsw::NonnegativeField r = lwsw::rearrange(nn);

  std::vector<std::vector<double>> table;
  table.reserve(grid->size());
  for (std::size_t i = 0; i < grid->size(); ++i)
    table.push_back({grid->point(i), f[i], r[i]});
  lwsw::write_csv(out, {"x", "original", "rearranged"}, table);

  const lwsw::InequalityCheck hl = lwsw::hardy_littlewood_check(nn, nn);
  const lwsw::InequalityCheck ps = lwsw::polya_szego_check(nn);
  const lwsw::InequalityCheck rz = lwsw::riesz_check(nn, nn, nn);
  auto check_json = [](const lwsw::InequalityCheck& c) {
    return json{{"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds}, {"slack", c.slack}};
  };
  json v;
  v["product_coupling"] = check_json(hl);
  v["gradient_energy"] = check_json(ps);
  v["triple_convolution"] = check_json(rz);
  v["all_pass"] = hl.holds && ps.holds && rz.holds;
  lwsw::write_text_file(lwsw::sidecar_path(out, ".verdicts.json"), v.dump(2) + "\n");
  std::cout << v.dump(2) << "\n";
  return v["all_pass"].get<bool>() ? 0 : 1;
}

int cmd_kernel(double s, std::size_t grid_size, double half_width, const std::string& out) {
  if (!(s > 0.0)) throw lwsw::ValidationError("kernel: s > 0 required");
  auto grid = lwsw::make_grid(half_width, grid_size);
  lwsw::RealField delta(grid);
  delta[grid->size() / 2] = 1.0 / grid->spacing();
  const lwsw::RealField green = lwsw::helmholtz_inverse(delta, s, 1.0);
  const double rs = std::sqrt(s);
  std::vector<std::vector<double>> table;
  table.reserve(grid->size());
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const double x = grid->point(i);
    table.push_back({x, std::exp(-rs * std::abs(x)) / (2.0 * rs), green[i]});
  }
  lwsw::write_csv(out, {"x", "closed_form", "spectral_inverse"}, table);
  std::cout << "wrote " << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solitary-wave profiles of a coupled long-wave/short-wave system: "
               "two independent solvers, qualitative certification, rearrangement "
               "inequalities, and full-system evolution"};
  app.set_version_flag("--version", lwsw::kToolVersion);
  app.require_subcommand(1);

  SolveFlags sf;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", sf.config_path, "run configuration JSON");
    sub->add_option("--solver", sf.solver, "petviashvili or weinstein");
    sub->add_option("--grid-size", sf.grid_size, "number of grid points (power of two)");
    sub->add_option("--half-width", sf.half_width, "domain half width L");
    sub->add_option("--tol", sf.tol, "solver tolerance");
    sub->add_option("--max-iter", sf.max_iter, "solver iteration cap");
  };

  auto* solve = app.add_subcommand("solve", "compute a ground-state profile");
  add_common(solve);
  solve->add_option("--out", sf.out, "profile output path");

  std::string verify_in, verify_out;
  auto* verify = app.add_subcommand("verify", "certify qualitative properties of a profile");
  verify->add_option("profile", verify_in, "profile JSON")->required();
  verify->add_option("--out", verify_out, "also write the report here");

  std::vector<double> lambdas;
  std::string sweep_out = "sweep.csv";
  auto* sweep = app.add_subcommand("sweep", "ground-state energy across constraint levels");
  add_common(sweep);
  sweep->add_option("--lambda", lambdas, "constraint levels (default 0.5 1 2 3 5)");
  sweep->add_option("--out", sweep_out, "CSV output path");

  std::string evolve_in, evolve_out = "evolution.csv", snapshot_dir;
  double t_final = 1.0, dt = 1e-3;
  int stride = 10;
  auto* evolve = app.add_subcommand("evolve", "run a profile through the time integrator");
  evolve->add_option("profile", evolve_in, "profile JSON")->required();
  evolve->add_option("--t-final", t_final, "integration horizon");
  evolve->add_option("--dt", dt, "time step");
  evolve->add_option("--stride", stride, "record every k-th step");
  evolve->add_option("--out", evolve_out, "diagnostics CSV path");
  evolve->add_option("--snapshot-dir", snapshot_dir, "emit full-state CSV snapshots here");

  std::string re_in, re_out = "rearranged.csv";
  unsigned long seed = 0;
  std::size_t re_size = 256;
  double re_half_width = 40.0;
  auto* rearrange = app.add_subcommand("rearrange",
                                       "symmetric-decreasing rearrangement + inequalities");
  rearrange->add_option("input", re_in, "single-column CSV of nonnegative values");
  rearrange->add_option("--seed", seed, "seed for generated demo data");
  rearrange->add_option("--grid-size", re_size, "demo data size (power of two)");
  rearrange->add_option("--half-width", re_half_width, "domain half width L");
  rearrange->add_option("--out", re_out, "CSV output path");

  double kernel_s = 1.0;
  std::size_t kernel_size = 1024;
  double kernel_half_width = 40.0;
  std::string kernel_out = "kernel.csv";
  auto* kernel = app.add_subcommand("kernel",
                                    "exponential kernel: closed form vs spectral inverse");
  kernel->add_option("--s", kernel_s, "screening parameter (> 0)");
  kernel->add_option("--grid-size", kernel_size, "number of grid points (power of two)");
  kernel->add_option("--half-width", kernel_half_width, "domain half width L");
  kernel->add_option("--out", kernel_out, "CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("validation", std::string("argument error: ") + e.what());
    return 2;
  }

  try {
    if (solve->parsed()) return cmd_solve(sf);
    if (verify->parsed()) return cmd_verify(verify_in, verify_out);
    if (sweep->parsed()) return cmd_sweep(sf, lambdas, sweep_out);
    if (evolve->parsed())
      return cmd_evolve(evolve_in, t_final, dt, stride, evolve_out, snapshot_dir);
    if (rearrange->parsed())
      return cmd_rearrange(re_in, seed, re_size, re_half_width, re_out);
    if (kernel->parsed()) return cmd_kernel(kernel_s, kernel_size, kernel_half_width, kernel_out);
  } catch (const lwsw::ConvergenceError& e) {
    emit_error("non-convergence", e.what());
    return 3;
  } catch (const lwsw::IoError& e) {
    emit_error("io", e.what());
    return 4;
  } catch (const lwsw::ValidationError& e) {
    emit_error("validation", e.what());
    return 2;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return 5;
  }
  return 0;
}
