#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "lwsw/io.hpp"
#include "oracle.hpp"

namespace fs = std::filesystem;

namespace {

std::string binary() {
  const char* env = std::getenv("LWSW_BIN");
  REQUIRE_MESSAGE(env != nullptr, "LWSW_BIN must point at the CLI binary");
  return env;
}

struct Workdir {
  fs::path path;
  Workdir() {
    path = fs::temp_directory_path() / ("lwsw_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~Workdir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

// Runs the CLI in `dir`, returns the exit code; stdout/stderr go to files.
int run(const Workdir& w, const std::string& args) {
  const std::string cmd = "cd " + w.path.string() + " && " + binary() + " " + args +
                          " > stdout.txt 2> stderr.txt";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const Workdir& w, const std::string& name) {
  std::ifstream in(w.file(name));
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

nlohmann::json stderr_error(const Workdir& w) {
  return nlohmann::json::parse(slurp(w, "stderr.txt"));
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("solve produces a profile whose verification passes end to end") {
  Workdir w;
  CHECK(run(w, "solve --out prof.json") == 0);
  CHECK(fs::exists(w.file("prof.json")));
  CHECK(fs::exists(w.file("prof.report.json")));

  const auto lp = lwsw::load_profile(w.file("prof.json"));
  CHECK(lp.meta.solver == "petviashvili");
  CHECK(lp.meta.residual < 1e-9);
  CHECK(lp.profile.grid->size() == 1024);

  CHECK(run(w, "verify prof.json --out report.json") == 0);
  const auto rep = nlohmann::json::parse(slurp(w, "report.json"));
  CHECK(rep.at("all_pass").get<bool>());
}

TEST_CASE("the two solvers agree through the file interface") {
  Workdir w;
  CHECK(run(w, "solve --out p.json") == 0);
  CHECK(run(w, "solve --solver weinstein --out q.json") == 0);
  const auto p = lwsw::load_profile(w.file("p.json"));
  const auto q = lwsw::load_profile(w.file("q.json"));
  double m = 0.0;
  for (std::size_t i = 0; i < p.profile.grid->size(); ++i)
    m = std::max(m, std::abs(p.profile.psi[i] - q.profile.psi[i]));
  CHECK(m < 1e-5);
  CHECK(q.meta.solver == "weinstein");
}

TEST_CASE("config file values are applied and flags win over them") {
  Workdir w;
  {
    std::ofstream cfg(w.file("run.json"));
    cfg << R"({"grid": {"size": 512}, "solver": {"kind": "weinstein"}})";
  }
  CHECK(run(w, "solve --config run.json --out p.json") == 0);
  CHECK(lwsw::load_profile(w.file("p.json")).profile.grid->size() == 512);
  CHECK(run(w, "solve --config run.json --grid-size 256 --solver petviashvili --out q.json") == 0);
  const auto q = lwsw::load_profile(w.file("q.json"));
  CHECK(q.profile.grid->size() == 256);
  CHECK(q.meta.solver == "petviashvili");
}

TEST_CASE("an inadmissible frequency is rejected naming the assumption") {
  Workdir w;
  {
    std::ofstream cfg(w.file("bad.json"));
    cfg << R"({"model": {"omega": 0.2}})";  // sigma = 0.2 - 0.25 < 0
  }
  CHECK(run(w, "solve --config bad.json --out p.json") == 2);
  const auto err = stderr_error(w);
  CHECK(err.at("error").at("category") == "validation");
  CHECK(err.at("error").at("message").get<std::string>().find("sigma") != std::string::npos);
  CHECK_FALSE(fs::exists(w.file("p.json")));
}

TEST_CASE("missing input files exit with the io category") {
  Workdir w;
  CHECK(run(w, "verify missing.json") == 4);
  CHECK(stderr_error(w).at("error").at("category") == "io");
  CHECK(run(w, "evolve missing.json") == 4);
  CHECK(run(w, "solve --config missing.json") == 4);
}

TEST_CASE("an unknown config key is a schema violation") {
  Workdir w;
  {
    std::ofstream cfg(w.file("typo.json"));
    cfg << R"({"grid": {"sizee": 512}})";
  }
  CHECK(run(w, "solve --config typo.json") == 2);
  CHECK(stderr_error(w).at("error").at("message").get<std::string>().find("sizee") !=
        std::string::npos);
}

TEST_CASE("iteration starvation exits with the non-convergence category") {
  Workdir w;
  CHECK(run(w, "solve --max-iter 3 --out p.json") == 3);
  CHECK(stderr_error(w).at("error").at("category") == "non-convergence");
}

TEST_CASE("sweep emits the scaling table and all verdicts pass") {
  Workdir w;
  CHECK(run(w, "sweep --lambda 1 --lambda 2 --lambda 3 --grid-size 512 --out sw.csv") == 0);
  std::vector<std::string> header;
  const auto rows = lwsw::read_numeric_csv(w.file("sw.csv"), &header);
  REQUIRE(header.size() == 5);
  CHECK(header[0] == "lambda");
  CHECK(header[2] == "I_scaled");
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows)
    CHECK(std::abs(row[2] - rows[0][2]) <= 1e-10 * rows[0][2]);
  const auto v = nlohmann::json::parse(slurp(w, "sw.verdicts.json"));
  CHECK(v.at("all_pass").get<bool>());
  CHECK(v.at("subadditive_all_pairs").get<bool>());
}

TEST_CASE("evolve writes diagnostics and optional snapshots") {
  Workdir w;
  REQUIRE(run(w, "solve --grid-size 512 --out p.json") == 0);
  CHECK(run(w, "evolve p.json --t-final 0.2 --dt 1e-3 --stride 50 "
               "--snapshot-dir snaps --out ev.csv") == 0);
  std::vector<std::string> header;
  const auto rows = lwsw::read_numeric_csv(w.file("ev.csv"), &header);
  REQUIRE(header.size() >= 5);
  CHECK(header[0] == "t");
  CHECK(header[1] == "traveling_error");
  REQUIRE(rows.size() == 5);  // t = 0 plus 4 recorded strides
  CHECK(rows[0][1] == 0.0);
  CHECK(rows.back()[1] < 1e-4);
  std::size_t snapshots = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(w.file("snaps"))) ++snapshots;
  CHECK(snapshots == rows.size());
}

TEST_CASE("rearrange round trips a CSV and certifies the inequalities") {
  Workdir w;
  CHECK(run(w, "rearrange --seed 11 --grid-size 128 --out re.csv") == 0);
  std::vector<std::string> header;
  const auto rows = lwsw::read_numeric_csv(w.file("re.csv"), &header);
  REQUIRE(rows.size() == 128);
  const auto v = nlohmann::json::parse(slurp(w, "re.verdicts.json"));
  CHECK(v.at("all_pass").get<bool>());

  // same seed, same bytes
  CHECK(run(w, "rearrange --seed 11 --grid-size 128 --out re2.csv") == 0);
  CHECK(slurp(w, "re.csv") == slurp(w, "re2.csv"));

  // feed a column back through the explicit-input path
  {
    std::ofstream in(w.file("col.csv"));
    in << "value\r\n";
    for (int i = 0; i < 16; ++i) in << (i % 4) * 0.25 << "\r\n";
  }
  CHECK(run(w, "rearrange col.csv --out re3.csv") == 0);

  // negative data is a validation failure
  {
    std::ofstream in(w.file("neg.csv"));
    in << "value\r\n1.0\r\n-0.5\r\n0.25\r\n0.0\r\n";
  }
  CHECK(run(w, "rearrange neg.csv --out re4.csv") == 2);
}

TEST_CASE("kernel table matches the closed form away from the tails") {
  Workdir w;
  CHECK(run(w, "kernel --s 4.0 --half-width 20 --grid-size 1024 --out k.csv") == 0);
  std::vector<std::string> header;
  const auto rows = lwsw::read_numeric_csv(w.file("k.csv"), &header);
  REQUIRE(header == std::vector<std::string>({"x", "closed_form", "spectral_inverse"}));
  // The spectral response carries an O(1/M) truncation bump at the kink, so
  // judge the kink loosely and the smooth region tightly.
  double m_kink = 0.0, m_smooth = 0.0;
  for (const auto& row : rows) {
    const double d = std::abs(row[1] - row[2]);
    if (std::abs(row[0]) < 0.5) m_kink = std::max(m_kink, d);
    else if (std::abs(row[0]) <= 8.0) m_smooth = std::max(m_smooth, d);
  }
  CHECK(m_kink < 5e-3);
  CHECK(m_smooth < 1e-5);
  CHECK(run(w, "kernel --s -1.0") == 2);
}

TEST_CASE("version flag reports the tool version") {
  Workdir w;
  CHECK(run(w, "--version") == 0);
  CHECK(slurp(w, "stdout.txt").find(lwsw::kToolVersion) != std::string::npos);
}

}  // TEST_SUITE
