#include "lwsw/model.hpp"

#include <cmath>
#include <utility>

namespace lwsw {

void validate_params(const ModelParams& p) {
  if (p.alpha.empty()) throw ValidationError("params: at least one short-wave component required");
  for (std::size_t j = 0; j < p.alpha.size(); ++j) {
    if (!(p.alpha[j] > 0.0) || !std::isfinite(p.alpha[j]))
      throw ValidationError("params: assumption alpha_j > 0 violated (component " +
                            std::to_string(j + 1) + ")");
  }
  if (!(p.beta >= 0.0) || !std::isfinite(p.beta))
    throw ValidationError("params: assumption beta >= 0 violated");
  if (!(p.gamma > 0.0) || !std::isfinite(p.gamma))
    throw ValidationError("params: assumption gamma > 0 violated");
  if (!(p.c > 0.0) || !std::isfinite(p.c))
    throw ValidationError("params: assumption c > 0 violated");
  if (!std::isfinite(p.tau) || !(p.tau <= p.c))
    throw ValidationError("params: assumption tau <= c violated");
  if (!std::isfinite(p.omega) || !(p.sigma() > 0.0))
    throw ValidationError("params: assumption sigma = omega - c^2/4 > 0 violated");
}

void validate_params_for_solve(const ModelParams& p) {
  validate_params(p);
  if (!(p.tau < p.c))
    throw ValidationError(
        "params: solvers require tau < c strictly (eta = (c - tau)/gamma > 0)");
}

ProfileSet ProfileSet::zero(const ModelParams& p, const GridPtr& g) {
  ProfileSet t;
  t.phi.assign(p.components(), RealField(g));
  t.psi = RealField(g);
  t.params = p;
  t.grid = g;
  return t;
}

void validate_profile(const ProfileSet& t) {
  if (!t.grid) throw ValidationError("profile: missing grid");
  if (t.phi.size() != t.params.components())
    throw ValidationError("profile: component count does not match params");
  auto check = [&](const RealField& f, const char* name) {
    if (f.grid != t.grid) throw ValidationError(std::string("profile: ") + name +
                                                " not on the shared grid");
    for (double x : f.values)
      if (!std::isfinite(x))
        throw ValidationError(std::string("profile: non-finite value in ") + name);
  };
  for (const auto& phi : t.phi) check(phi, "phi");
  check(t.psi, "psi");
}

double functional_K(const ProfileSet& t) {
  const double sigma = t.params.sigma();
  const double gamma = t.params.gamma;
  const double c_tau = t.params.c_tau();
  double K = 0.0;
  for (const auto& phi : t.phi) {
    const RealField dphi = derivative(phi, 1);
    RealField integrand(t.grid);
    for (std::size_t i = 0; i < integrand.size(); ++i)
      integrand[i] = dphi[i] * dphi[i] + sigma * phi[i] * phi[i];
    K += quadrature(integrand);
  }
  const RealField dpsi = derivative(t.psi, 1);
  RealField integrand(t.grid);
  for (std::size_t i = 0; i < integrand.size(); ++i)
    integrand[i] = gamma * dpsi[i] * dpsi[i] + c_tau * t.psi[i] * t.psi[i];
  K += quadrature(integrand);
  return K;
}

double functional_F_integral(const ProfileSet& t) {
  RealField integrand(t.grid);
  const double beta3 = t.params.beta / 3.0;
  for (std::size_t i = 0; i < integrand.size(); ++i) {
    double quad = 0.0;
    for (std::size_t j = 0; j < t.phi.size(); ++j)
      quad += t.params.alpha[j] * t.phi[j][i] * t.phi[j][i];
    const double psi = t.psi[i];
    integrand[i] = (beta3 * psi * psi + quad) * psi;
  }
  return quadrature(integrand);
}

double weinstein_Lambda(const ProfileSet& t) {
  const double F = functional_F_integral(t);
  if (!(F > 0.0))
    throw ValidationError("Lambda: int F = " + std::to_string(F) +
                          " is not positive; quotient undefined (constraint takes lambda > 0)");
  return functional_K(t) / std::pow(F, 2.0 / 3.0);
}

ProfileSet apply_L(const ProfileSet& t) {
  const double sigma = t.params.sigma();
  const double gamma = t.params.gamma;
  const double c_tau = t.params.c_tau();
  ProfileSet out = ProfileSet::zero(t.params, t.grid);
  for (std::size_t j = 0; j < t.phi.size(); ++j) {
    const RealField d2 = derivative(t.phi[j], 2);
    for (std::size_t i = 0; i < out.phi[j].size(); ++i)
      out.phi[j][i] = sigma * t.phi[j][i] - d2[i];
  }
  const RealField d2 = derivative(t.psi, 2);
  for (std::size_t i = 0; i < out.psi.size(); ++i)
    out.psi[i] = c_tau * t.psi[i] - gamma * d2[i];
  return out;
}

ProfileSet apply_Nl(const ProfileSet& t) {
  ProfileSet out = ProfileSet::zero(t.params, t.grid);
  for (std::size_t j = 0; j < t.phi.size(); ++j)
    for (std::size_t i = 0; i < out.phi[j].size(); ++i)
      out.phi[j][i] = t.params.alpha[j] * t.phi[j][i] * t.psi[i];
  for (std::size_t i = 0; i < out.psi.size(); ++i) {
    double quad = 0.0;
    for (std::size_t j = 0; j < t.phi.size(); ++j)
      quad += t.params.alpha[j] * t.phi[j][i] * t.phi[j][i];
    out.psi[i] = 0.5 * (t.params.beta * t.psi[i] * t.psi[i] + quad);
  }
  return out;
}

ProfileSet apply_L_inverse(const ProfileSet& t) {
  ProfileSet out = t;
  for (auto& phi : out.phi) phi = helmholtz_inverse(phi, t.params.sigma(), 1.0);
  out.psi = helmholtz_inverse(t.psi, t.params.eta(), t.params.gamma);
  return out;
}

double inner_product(const ProfileSet& a, const ProfileSet& b) {
  RealField prod(a.grid);
  for (std::size_t j = 0; j < a.phi.size(); ++j)
    for (std::size_t i = 0; i < prod.size(); ++i) prod[i] += a.phi[j][i] * b.phi[j][i];
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] += a.psi[i] * b.psi[i];
  return quadrature(prod);
}

double profile_norm(const ProfileSet& t) { return std::sqrt(inner_product(t, t)); }

double ode_residual(const ProfileSet& t, double kappa) {
  const ProfileSet lhs = apply_L(t);
  const ProfileSet rhs = apply_Nl(t);
  double ss = 0.0;
  auto accumulate = [&](const RealField& l, const RealField& r) {
    RealField sq(t.grid);
    for (std::size_t i = 0; i < sq.size(); ++i) {
      const double d = l[i] - kappa * r[i];
      sq[i] = d * d;
    }
    ss += quadrature(sq);
  };
  for (std::size_t j = 0; j < t.phi.size(); ++j) accumulate(lhs.phi[j], rhs.phi[j]);
  accumulate(lhs.psi, rhs.psi);
  return std::sqrt(ss) / std::max(1.0, profile_norm(t));
}

ProfileSet axpy(const ProfileSet& t, double s, const ProfileSet& dt) {
  ProfileSet out = t;
  for (std::size_t j = 0; j < t.phi.size(); ++j)
    for (std::size_t i = 0; i < out.phi[j].size(); ++i) out.phi[j][i] += s * dt.phi[j][i];
  for (std::size_t i = 0; i < out.psi.size(); ++i) out.psi[i] += s * dt.psi[i];
  return out;
}

ProfileSet scale(const ProfileSet& t, double s) {
  ProfileSet out = t;
  for (auto& phi : out.phi)
    for (auto& x : phi.values) x *= s;
  for (auto& x : out.psi.values) x *= s;
  return out;
}

ProfileSet center_profile(const ProfileSet& t) {
  const double x0 = peak_location(t.psi);
  if (x0 == 0.0) return t;
  ProfileSet out = t;
  for (auto& phi : out.phi) phi = fractional_shift(phi, -x0);
  out.psi = fractional_shift(t.psi, -x0);
  return out;
}

}  // namespace lwsw
