#pragma once

// Direct minimization of the Weinstein quotient Lambda = K/(int F)^{2/3} by
// preconditioned descent, the rescaling of minimizers to multiplier-one
// solutions, the constrained infimum I_lambda = lambda^{2/3} Lambda_min, and
// the least-squares multiplier estimator.

#include <optional>
#include <vector>

#include "lwsw/model.hpp"

namespace lwsw {

struct VariationalConfig {
  double tol = 1e-9;                  // on the preconditioned-gradient norm
  int max_iter = 5000;
  double backtrack_shrink = 0.5;
  double sufficient_decrease = 1e-4;  // Armijo constant
  double gaussian_amplitude = 1.0;
  double gaussian_width = 2.0;
  std::optional<ProfileSet> init;
};

// Minimizes Lambda over nonzero tuples. Gradient of Lambda at K-normalized
// iterates is (2/F^{2/3}) (L Theta - kappa Nl(Theta)) with kappa = 2K/(3F);
// descent direction is its L^{-1} preconditioning; iterates are renormalized
// to K = 1 each step (Lambda is scale invariant). Stops once the
// preconditioned-gradient norm is <= tol and the rescaled profile satisfies
// ode_residual <= 10 tol. Returns the centered K-normalized minimizer.
std::pair<ProfileSet, SolveReport> weinstein_minimize(const ModelParams& params,
                                                      const GridPtr& grid,
                                                      const VariationalConfig& cfg = {});

// Theta = (2/3) Lambda(Delta) * Delta / (int F(Delta))^{1/3}: scales a critical
// point of Lambda to the multiplier-one solution. Invariant under Delta -> t Delta.
ProfileSet rescale_to_solution(const ProfileSet& delta);

// I_lambda = lambda^{2/3} * min Lambda (the constrained infimum under
// int F = lambda). Runs one minimization.
double compute_I(const ModelParams& params, const GridPtr& grid, double lambda,
                 const VariationalConfig& cfg = {});

// Least-squares multiplier: argmin_kappa ||L Theta - kappa Nl(Theta)||, i.e.
// <L Theta, Nl(Theta)> / <Nl(Theta), Nl(Theta)>. Rejects Theta ~ 0.
double multiplier_estimate(const ProfileSet& t);

struct SweepRow {
  double lambda = 0.0;
  double I_lambda = 0.0;
  double I_scaled = 0.0;   // I_lambda / lambda^{2/3}
  double kappa_hat = 0.0;  // least-squares multiplier of the lambda-level minimizer
  double Lambda_min = 0.0;
};

// One minimization, exact lambda^{2/3} scaling across the requested levels.
std::pair<std::vector<SweepRow>, SolveReport> sweep_I(const ModelParams& params,
                                                      const GridPtr& grid,
                                                      const std::vector<double>& lambdas,
                                                      const VariationalConfig& cfg = {});

}  // namespace lwsw
