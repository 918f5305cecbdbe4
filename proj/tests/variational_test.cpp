#include <cmath>

#include "doctest.h"
#include "lwsw/fixed_point.hpp"
#include "lwsw/variational.hpp"
#include "oracle.hpp"

using namespace lwsw;

namespace {

double max_abs_diff_sets(const ProfileSet& a, const ProfileSet& b) {
  double m = 0.0;
  for (std::size_t j = 0; j < a.phi.size(); ++j)
    for (std::size_t i = 0; i < a.grid->size(); ++i)
      m = std::max(m, std::abs(a.phi[j][i] - b.phi[j][i]));
  for (std::size_t i = 0; i < a.grid->size(); ++i)
    m = std::max(m, std::abs(a.psi[i] - b.psi[i]));
  return m;
}

}  // namespace

TEST_SUITE("variational") {

TEST_CASE("minimum of the quotient matches the closed form") {
  auto g = make_grid(40.0, 1024);
  auto [delta, rep] = weinstein_minimize(oracle::reference_params(), g);
  REQUIRE(rep.converged);
  CHECK(rep.Lambda_value == doctest::Approx(oracle::lambda_min()).epsilon(1e-5));
  CHECK(rep.final_residual <= 1e-9);
  // iterates live in the K = 1 gauge
  CHECK(rep.K_value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("descent is monotone") {
  auto g = make_grid(40.0, 512);
  const ProfileSet init = gaussian_initial(oracle::reference_params(), g, 1.0, 2.0);
  const double Lambda_init = weinstein_Lambda(init);
  VariationalConfig cfg;
  cfg.init = init;
  auto [delta, rep] = weinstein_minimize(oracle::reference_params(), g, cfg);
  REQUIRE(rep.converged);
  CHECK(rep.Lambda_value <= Lambda_init);
}

TEST_CASE("rescaled minimizer solves the profile equations") {
  auto g = make_grid(40.0, 1024);
  auto [delta, rep] = weinstein_minimize(oracle::reference_params(), g);
  REQUIRE(rep.converged);
  const ProfileSet sol = rescale_to_solution(delta);
  CHECK(ode_residual(sol, 1.0) <= 1e-8);
}

TEST_CASE("rescale is the identity on an exact solution") {
  auto g = make_grid(40.0, 1024);
  const ProfileSet t = oracle::reference_profile(g);
  const ProfileSet back = rescale_to_solution(t);
  CHECK(max_abs_diff_sets(back, t) < 1e-7);  // rescale factor is 1 up to quadrature error
}

TEST_CASE("rescale is invariant under input scaling") {
  auto g = make_grid(40.0, 512);
  const ProfileSet t = oracle::reference_profile(g);
  const ProfileSet a = rescale_to_solution(t);
  const ProfileSet b = rescale_to_solution(scale(t, 7.0));
  CHECK(max_abs_diff_sets(a, b) < 1e-11);
}

TEST_CASE("rescale rejects a nonpositive constraint integral") {
  auto g = make_grid(40.0, 256);
  ProfileSet t = oracle::reference_profile(g);
  t = scale(t, -1.0);
  CHECK_THROWS_AS(rescale_to_solution(t), ValidationError);
}

TEST_CASE("both algorithms land on the same ground state") {
  auto g = make_grid(40.0, 1024);
  auto [tp, rp] = petviashvili_solve(oracle::reference_params(), g);
  auto [delta, rw] = weinstein_minimize(oracle::reference_params(), g);
  REQUIRE(rp.converged);
  REQUIRE(rw.converged);
  const ProfileSet tw = center_profile(rescale_to_solution(delta));
  CHECK(max_abs_diff_sets(tp, tw) < 1e-5);
}

TEST_CASE("ground-state energy at a prescribed constraint level") {
  auto g = make_grid(40.0, 1024);
  // I(lambda) = lambda^{2/3} Lambda_min; at lambda = 3 that is 3^{2/3} * 4.5/3^{2/3} = 4.5
  const double I3 = compute_I(oracle::reference_params(), g, 3.0);
  CHECK(I3 == doctest::Approx(4.5).epsilon(1e-4));
  CHECK_THROWS_AS(compute_I(oracle::reference_params(), g, 0.0), ValidationError);
  CHECK_THROWS_AS(compute_I(oracle::reference_params(), g, -2.0), ValidationError);
}

TEST_CASE("constraint-level sweep: scaling law and strict subadditivity") {
  auto g = make_grid(40.0, 1024);
  const std::vector<double> lambdas = {0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 6.0};
  auto [rows, rep] = sweep_I(oracle::reference_params(), g, lambdas);
  REQUIRE(rep.converged);
  REQUIRE(rows.size() == lambdas.size());

  // I(lambda)/lambda^{2/3} is a single constant across the sweep
  for (const auto& row : rows) {
    CHECK(row.I_scaled == doctest::Approx(rows[0].I_scaled).epsilon(1e-10));
    CHECK(row.Lambda_min == rows[0].Lambda_min);
  }
  // strictly increasing in lambda
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(rows[i].I_lambda > rows[i - 1].I_lambda);
  // strict homogeneity gap: I(m lambda) < m I(lambda) for m > 1
  const double I1 = rows[1].I_lambda;   // lambda = 1
  const double I2 = rows[3].I_lambda;   // lambda = 2
  const double I15 = rows[2].I_lambda;  // lambda = 1.5
  const double I4 = rows[5].I_lambda;   // lambda = 4
  CHECK(I2 < 2.0 * I1);
  CHECK(I15 < 1.5 * I1);
  CHECK(I4 < 4.0 * I1);
  // subadditivity on a split of the constraint level
  CHECK(rows[4].I_lambda < rows[1].I_lambda + rows[3].I_lambda);  // I(3) < I(1) + I(2)
  // multiplier estimates are positive and scale as lambda^{-1/3} relatively
  for (const auto& row : rows) CHECK(row.kappa_hat > 0.0);
}

TEST_CASE("multiplier estimate is one on the closed form and scales as 1/t") {
  auto g = make_grid(40.0, 1024);
  const ProfileSet t = oracle::reference_profile(g);
  const double k1 = multiplier_estimate(t);
  CHECK(k1 == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(multiplier_estimate(scale(t, 2.0)) == doctest::Approx(k1 / 2.0).epsilon(1e-10));
  CHECK(multiplier_estimate(scale(t, 0.25)) == doctest::Approx(4.0 * k1).epsilon(1e-10));
  CHECK_THROWS_AS(multiplier_estimate(ProfileSet::zero(oracle::reference_params(), g)),
                  ValidationError);
}

TEST_CASE("sweep rejects nonpositive constraint levels") {
  auto g = make_grid(40.0, 256);
  CHECK_THROWS_AS(sweep_I(oracle::reference_params(), g, {1.0, 0.0}), ValidationError);
  CHECK_THROWS_AS(sweep_I(oracle::reference_params(), g, {-1.0}), ValidationError);
}

TEST_CASE("negated start is rescued by the sign flip") {
  auto g = make_grid(40.0, 512);
  VariationalConfig cfg;
  ProfileSet init = gaussian_initial(oracle::reference_params(), g, 1.0, 2.0);
  for (auto& v : init.psi.values) v = -v;
  cfg.init = init;
  auto [delta, rep] = weinstein_minimize(oracle::reference_params(), g, cfg);
  REQUIRE(rep.converged);
  CHECK(rep.Lambda_value == doctest::Approx(oracle::lambda_min()).epsilon(1e-5));
}

TEST_CASE("three-component family reaches the same quotient minimum") {
  auto g = make_grid(40.0, 1024);
  auto [delta, rep] = weinstein_minimize(oracle::symmetric3_params(), g);
  REQUIRE(rep.converged);
  CHECK(rep.Lambda_value == doctest::Approx(oracle::lambda_min()).epsilon(1e-5));
}

TEST_CASE("invalid parameters and config are rejected") {
  auto g = make_grid(40.0, 256);
  ModelParams p = oracle::reference_params();
  p.gamma = -1.0;
  CHECK_THROWS_AS(weinstein_minimize(p, g), ValidationError);
  VariationalConfig cfg;
  cfg.tol = 0.0;
  CHECK_THROWS_AS(weinstein_minimize(oracle::reference_params(), g, cfg), ValidationError);
}

}  // TEST_SUITE
