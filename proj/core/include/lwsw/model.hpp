#pragma once

// Parameters and profile containers for the coupled long-wave/short-wave
// profile equations
//   Phi_j'' - sigma Phi_j = -alpha_j Phi_j Psi,            j = 1..N
//   gamma Psi'' - c_tau Psi = -(beta/2) Psi^2 - (1/2) sum_j alpha_j Phi_j^2,
// together with the quadratic form K, the cubic integrand F, the Weinstein
// quotient Lambda = K / (int F)^{2/3}, the Euler-Lagrange residual, and the
// operator pair L Theta = kappa Nl(Theta).

#include <cstddef>
#include <string>
#include <vector>

#include "lwsw/spectral_grid.hpp"

namespace lwsw {

struct ModelParams {
  std::vector<double> alpha;  // alpha_j > 0, one per short-wave component
  double beta = 0.0;          // beta >= 0
  double gamma = 1.0;         // gamma > 0
  double tau = 0.0;           // tau <= c
  double c = 1.0;             // c > 0
  double omega = 0.0;

  std::size_t components() const { return alpha.size(); }
  double sigma() const { return omega - 0.25 * c * c; }
  double c_tau() const { return c - tau; }
  double eta() const { return c_tau() / gamma; }
  double beta_j(std::size_t j) const { return 0.5 * alpha[j]; }
};

// Enforces the standing assumptions; throws ValidationError naming the
// violated one. η > 0 (tau < c strictly) is demanded only by the solvers.
void validate_params(const ModelParams& p);
void validate_params_for_solve(const ModelParams& p);

// Candidate/solution tuple Theta = (Phi_1..Phi_N, Psi) on one grid.
struct ProfileSet {
  std::vector<RealField> phi;
  RealField psi;
  ModelParams params;
  GridPtr grid;

  static ProfileSet zero(const ModelParams& p, const GridPtr& g);
};

// Checks shared grid, component count, finiteness.
void validate_profile(const ProfileSet& t);

struct SolveReport {
  std::string solver;
  int iterations = 0;
  double final_residual = 0.0;   // ode_residual for the fixed point solver,
                                 // preconditioned-gradient norm for the
                                 // variational one
  double final_stabilizer = 0.0; // fixed-point solver only
  double K_value = 0.0;
  double F_integral = 0.0;
  double lambda_value = 0.0;     // constraint level int F at the solution
  double Lambda_value = 0.0;     // Weinstein quotient at the solution
  bool converged = false;
  std::string message;
  std::vector<double> residual_history;
};

// K(Theta) = sum_j int (Phi_j'^2 + sigma Phi_j^2) + int (gamma Psi'^2 + c_tau Psi^2)
double functional_K(const ProfileSet& t);

// int F = int (beta/3) Psi^3 + (sum_j alpha_j Phi_j^2) Psi dx
double functional_F_integral(const ProfileSet& t);

// Lambda = K / (int F)^{2/3}; rejects int F <= 0 (scale-invariant quotient is
// undefined there).
double weinstein_Lambda(const ProfileSet& t);

// Root-sum-square of grid-L2 norms of the N+1 equation residuals with
// multiplier kappa, normalized by max(1, ||Theta||_{L2}).
double ode_residual(const ProfileSet& t, double kappa);

// L Theta: components (sigma - d_xx) Phi_j and (c_tau - gamma d_xx) Psi.
ProfileSet apply_L(const ProfileSet& t);
// Nl(Theta): components alpha_j Phi_j Psi and (1/2)(beta Psi^2 + sum alpha_j Phi_j^2).
ProfileSet apply_Nl(const ProfileSet& t);
// L^{-1} via inverse Helmholtz per component.
ProfileSet apply_L_inverse(const ProfileSet& t);

// Quadrature-weighted inner product stacked over all N+1 components.
double inner_product(const ProfileSet& a, const ProfileSet& b);
// sqrt(inner_product(t, t))
double profile_norm(const ProfileSet& t);

// Elementwise Theta + s * dTheta.
ProfileSet axpy(const ProfileSet& t, double s, const ProfileSet& dt);
// Elementwise s * Theta.
ProfileSet scale(const ProfileSet& t, double s);

// Translates every component by the same offset so the maximum of Psi sits at
// x = 0 (profile equations are translation invariant; comparisons need a gauge).
ProfileSet center_profile(const ProfileSet& t);

}  // namespace lwsw
