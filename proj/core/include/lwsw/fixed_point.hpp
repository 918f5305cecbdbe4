#pragma once

// Stabilized Petviashvili iteration on the fixed-point form
//   Phi_j = alpha_j K_sigma * (Phi_j Psi),
//   Psi   = (1/(2 gamma)) K_eta * (beta Psi^2 + sum_j alpha_j Phi_j^2),
// i.e. Theta_{n+1} = m_n^{gamma_P} L^{-1} Nl(Theta_n) with the stabilizer
// m_n = <L Theta_n, Theta_n> / <Nl(Theta_n), Theta_n> = K / ((3/2) int F).
// m_n -> 1 at a solution, where K = (3/2) int F.

#include <optional>

#include "lwsw/model.hpp"

namespace lwsw {

struct FixedPointConfig {
  double tol = 1e-10;               // on ode_residual(Theta, 1)
  int max_iter = 2000;
  double stabilizer_exponent = 2.0; // p/(p-1) for quadratic nonlinearities
  double gaussian_amplitude = 1.0;
  double gaussian_width = 2.0;
  std::optional<ProfileSet> init;   // overrides the Gaussian initial iterate
};

// Initial iterate used by both solvers when no profile is provided: every
// component set to A exp(-(x/w)^2), centered, positive, even.
ProfileSet gaussian_initial(const ModelParams& p, const GridPtr& g, double amplitude,
                            double width);

// One raw update Theta -> m^{gamma_P} L^{-1} Nl(Theta); exposed so invariance
// properties of the true iteration map are testable. Writes the stabilizer to
// *stabilizer when non-null.
ProfileSet petviashvili_iterate_once(const ProfileSet& t, double stabilizer_exponent,
                                     double* stabilizer = nullptr);

// Full solve; the returned profile is centered (max of Psi at x = 0).
// Non-convergence, a nonpositive constraint integral after one Psi sign flip,
// and collapse to the trivial solution are reported via converged=false.
std::pair<ProfileSet, SolveReport> petviashvili_solve(const ModelParams& params,
                                                      const GridPtr& grid,
                                                      const FixedPointConfig& cfg = {});

}  // namespace lwsw
