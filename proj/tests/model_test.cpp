#include <cmath>
#include <string>

#include "doctest.h"
#include "lwsw/model.hpp"
#include "oracle.hpp"

using namespace lwsw;

namespace {

ProfileSet scaled_copy(const ProfileSet& t, double s) { return scale(t, s); }

}  // namespace

TEST_SUITE("model") {

TEST_CASE("parameter validation names the violated assumption") {
  ModelParams p = oracle::reference_params();
  CHECK_NOTHROW(validate_params(p));

  SUBCASE("alpha_j > 0") {
    p.alpha = {2.0, 0.0};
    CHECK_THROWS_WITH_AS(validate_params(p),
                         doctest::Contains("alpha_j > 0"), ValidationError);
  }
  SUBCASE("beta >= 0") {
    p.beta = -0.5;
    CHECK_THROWS_WITH_AS(validate_params(p),
                         doctest::Contains("beta >= 0"), ValidationError);
  }
  SUBCASE("gamma > 0") {
    p.gamma = 0.0;
    CHECK_THROWS_WITH_AS(validate_params(p),
                         doctest::Contains("gamma > 0"), ValidationError);
  }
  SUBCASE("c > 0") {
    p.c = -1.0;
    CHECK_THROWS_WITH_AS(validate_params(p),
                         doctest::Contains("c > 0"), ValidationError);
  }
  SUBCASE("tau <= c") {
    p.tau = 2.0;
    CHECK_THROWS_WITH_AS(validate_params(p),
                         doctest::Contains("tau"), ValidationError);
  }
  SUBCASE("sigma > 0") {
    p.omega = 0.25;  // sigma = omega - c^2/4 = 0
    CHECK_THROWS_WITH_AS(validate_params(p),
                         doctest::Contains("sigma"), ValidationError);
  }
  SUBCASE("empty alpha") {
    p.alpha = {};
    CHECK_THROWS_AS(validate_params(p), ValidationError);
  }
  SUBCASE("solve additionally needs tau < c") {
    p.tau = p.c;
    p.omega = p.c * p.c / 4.0 + 1.0;
    CHECK_NOTHROW(validate_params(p));
    CHECK_THROWS_AS(validate_params_for_solve(p), ValidationError);
  }
}

TEST_CASE("derived quantities") {
  const ModelParams p = oracle::reference_params();
  CHECK(p.sigma() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p.c_tau() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p.eta() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p.beta_j(0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("quadratic form on the closed-form profile") {
  auto g = make_grid(40.0, 1024);
  const ProfileSet t = oracle::reference_profile(g);
  CHECK(functional_K(t) == doctest::Approx(oracle::kK).epsilon(1e-8));
  CHECK(functional_F_integral(t) == doctest::Approx(oracle::kF).epsilon(1e-8));
}

TEST_CASE("three identical components split the same profile") {
  auto g = make_grid(40.0, 1024);
  const ProfileSet t = oracle::symmetric3_profile(g);
  CHECK(functional_K(t) == doctest::Approx(oracle::kK).epsilon(1e-8));
  CHECK(functional_F_integral(t) == doctest::Approx(oracle::kF).epsilon(1e-8));
}

TEST_CASE("homogeneity: K is quadratic, F-integral cubic") {
  auto g = make_grid(40.0, 512);
  const ProfileSet t = oracle::reference_profile(g);
  const double K1 = functional_K(t);
  const double F1 = functional_F_integral(t);
  for (double s : {0.5, 2.0, 3.7}) {
    const ProfileSet ts = scaled_copy(t, s);
    CHECK(functional_K(ts) == doctest::Approx(s * s * K1).epsilon(1e-12));
    CHECK(functional_F_integral(ts) == doctest::Approx(s * s * s * F1).epsilon(1e-12));
  }
}

TEST_CASE("quotient value, scale invariance, sign guard") {
  auto g = make_grid(40.0, 1024);
  const ProfileSet t = oracle::reference_profile(g);
  CHECK(weinstein_Lambda(t) == doctest::Approx(oracle::lambda_min()).epsilon(1e-8));
  const ProfileSet ts = scaled_copy(t, 2.5);
  CHECK(weinstein_Lambda(ts) == doctest::Approx(weinstein_Lambda(t)).epsilon(1e-12));

  ProfileSet neg = t;
  for (auto& v : neg.psi.values) v = -v;
  for (auto& phi : neg.phi)
    for (auto& v : phi.values) v = 0.0;
  CHECK_THROWS_AS(weinstein_Lambda(neg), ValidationError);
}

TEST_CASE("quotient is translation invariant") {
  auto g = make_grid(40.0, 1024);
  const ProfileSet t = oracle::reference_profile(g);
  const ProfileSet shifted = oracle::reference_profile(g, 3.2);
  CHECK(weinstein_Lambda(shifted) == doctest::Approx(weinstein_Lambda(t)).epsilon(1e-10));
}

TEST_CASE("profile equation residual vanishes on the closed form") {
  auto g = make_grid(40.0, 1024);
  const ProfileSet t = oracle::reference_profile(g);
  CHECK(ode_residual(t, 1.0) < 1e-8);
  CHECK(ode_residual(t, 2.0) > 0.1);  // wrong multiplier is loudly wrong

  const ProfileSet t3 = oracle::symmetric3_profile(g);
  CHECK(ode_residual(t3, 1.0) < 1e-8);
}

TEST_CASE("operator identities against the functionals") {
  auto g = make_grid(40.0, 512);
  const ProfileSet t = oracle::reference_profile(g);
  const ProfileSet Lt = apply_L(t);
  const ProfileSet Nt = apply_Nl(t);
  CHECK(inner_product(Lt, t) == doctest::Approx(functional_K(t)).epsilon(1e-10));
  CHECK(inner_product(Nt, t) ==
        doctest::Approx(1.5 * functional_F_integral(t)).epsilon(1e-10));
}

TEST_CASE("L and Nl agree pointwise on the closed form") {
  auto g = make_grid(40.0, 1024);
  const ProfileSet t = oracle::reference_profile(g);
  const ProfileSet Lt = apply_L(t);
  const ProfileSet Nt = apply_Nl(t);
  double m = 0.0;
  for (std::size_t i = 0; i < g->size(); ++i) {
    m = std::max(m, std::abs(Lt.phi[0][i] - Nt.phi[0][i]));
    m = std::max(m, std::abs(Lt.psi[i] - Nt.psi[i]));
  }
  CHECK(m < 1e-8);
}

TEST_CASE("inverse undoes the quadratic-form operator") {
  auto g = make_grid(20.0, 256);
  ProfileSet t = ProfileSet::zero(oracle::reference_params(), g);
  t.phi[0] = oracle::random_band_limited(g, 41);
  t.psi = oracle::random_band_limited(g, 42);
  const ProfileSet round = apply_L_inverse(apply_L(t));
  double m = 0.0;
  for (std::size_t i = 0; i < g->size(); ++i) {
    m = std::max(m, std::abs(round.phi[0][i] - t.phi[0][i]));
    m = std::max(m, std::abs(round.psi[i] - t.psi[i]));
  }
  CHECK(m < 1e-11);
}

TEST_CASE("quadratic form is coercive") {
  auto g = make_grid(20.0, 256);
  ProfileSet t = ProfileSet::zero(oracle::reference_params(), g);
  t.phi[0] = oracle::random_band_limited(g, 51);
  t.psi = oracle::random_band_limited(g, 52);
  const double K = functional_K(t);
  const double n2 = profile_norm(t) * profile_norm(t);
  CHECK(K > 0.0);
  // with sigma = c_tau = gamma = 1 the form dominates the L2 norm squared
  CHECK(K >= n2 * (1.0 - 1e-12));
}

TEST_CASE("centering moves the crest to the origin") {
  auto g = make_grid(40.0, 1024);
  ProfileSet t = oracle::reference_profile(g, 2.7);
  CHECK(peak_location(t.psi) == doctest::Approx(2.7).epsilon(1e-8));
  t = center_profile(t);
  CHECK(std::abs(peak_location(t.psi)) < 1e-8);
  // profile content is preserved
  const ProfileSet ref = oracle::reference_profile(g);
  double m = 0.0;
  for (std::size_t i = 0; i < g->size(); ++i)
    m = std::max(m, std::abs(t.psi[i] - ref.psi[i]));
  CHECK(m < 1e-8);
}

TEST_CASE("profile validation catches mismatched shapes") {
  auto g = make_grid(40.0, 512);
  auto g2 = make_grid(40.0, 256);
  ProfileSet t = oracle::reference_profile(g);
  SUBCASE("component count") {
    t.params.alpha = {2.0, 2.0};
    CHECK_THROWS_AS(validate_profile(t), ValidationError);
  }
  SUBCASE("grid mismatch") {
    t.psi = RealField(g2);
    CHECK_THROWS_AS(validate_profile(t), ValidationError);
  }
  SUBCASE("non-finite entries") {
    t.phi[0][7] = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(validate_profile(t), ValidationError);
  }
}

}  // TEST_SUITE
