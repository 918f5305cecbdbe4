#include "lwsw/fixed_point.hpp"

#include <cmath>
#include <utility>

namespace lwsw {

ProfileSet gaussian_initial(const ModelParams& p, const GridPtr& g, double amplitude,
                            double width) {
  if (!(amplitude > 0.0)) throw ValidationError("init: gaussian_amplitude > 0 required");
  if (!(width > 0.0)) throw ValidationError("init: gaussian_width > 0 required");
  ProfileSet t = ProfileSet::zero(p, g);
  for (std::size_t i = 0; i < g->size(); ++i) {
    const double x = g->point(i) / width;
    const double v = amplitude * std::exp(-x * x);
    for (auto& phi : t.phi) phi[i] = v;
    t.psi[i] = v;
  }
  return t;
}

ProfileSet petviashvili_iterate_once(const ProfileSet& t, double stabilizer_exponent,
                                     double* stabilizer) {
  const ProfileSet nl = apply_Nl(t);
  const double num = functional_K(t);              // <L Theta, Theta>
  const double den = inner_product(nl, t);         // (3/2) int F
  const double m = num / den;
  if (stabilizer) *stabilizer = m;
  return scale(apply_L_inverse(nl), std::pow(m, stabilizer_exponent));
}

std::pair<ProfileSet, SolveReport> petviashvili_solve(const ModelParams& params,
                                                      const GridPtr& grid,
                                                      const FixedPointConfig& cfg) {
  validate_params_for_solve(params);
  if (!(cfg.tol > 0.0)) throw ValidationError("fixed_point: tol > 0 required");
  if (cfg.max_iter < 1) throw ValidationError("fixed_point: max_iter >= 1 required");

  SolveReport rep;
  rep.solver = "petviashvili";

  ProfileSet theta = cfg.init ? *cfg.init
                              : gaussian_initial(params, grid, cfg.gaussian_amplitude,
                                                 cfg.gaussian_width);
  if (cfg.init) {
    theta.params = params;
    validate_profile(theta);
    if (theta.grid != grid) throw ValidationError("fixed_point: provided init is on a different grid");
  }

  if (functional_F_integral(theta) <= 0.0) {
    // One corrective sign flip of the long-wave component.
    theta.psi = RealField(theta.grid, [&] {
      auto v = theta.psi.values;
      for (auto& x : v) x = -x;
      return v;
    }());
    if (functional_F_integral(theta) <= 0.0) {
      rep.message = "nonpositive constraint integral at initialization (after one Psi sign flip)";
      rep.F_integral = functional_F_integral(theta);
      return {theta, rep};
    }
  }

  double m = 0.0;
  for (int n = 1; n <= cfg.max_iter; ++n) {
    theta = petviashvili_iterate_once(theta, cfg.stabilizer_exponent, &m);
    rep.iterations = n;

    if (profile_norm(theta) < 1e-12) {
      rep.message = "trivial-limit: iterates collapsed to the zero solution";
      rep.final_stabilizer = m;
      return {theta, rep};
    }

    const double res = ode_residual(theta, 1.0);
    rep.residual_history.push_back(res);
    if (res <= cfg.tol) {
      rep.converged = true;
      break;
    }
  }

  theta = center_profile(theta);
  rep.final_residual = ode_residual(theta, 1.0);
  rep.final_stabilizer = m;
  rep.K_value = functional_K(theta);
  rep.F_integral = functional_F_integral(theta);
  rep.lambda_value = rep.F_integral;
  if (rep.F_integral > 0.0) rep.Lambda_value = weinstein_Lambda(theta);
  if (!rep.converged)
    rep.message = "no convergence within max_iter (residual history attached)";
  return {theta, rep};
}

}  // namespace lwsw
