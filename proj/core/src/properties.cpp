#include "lwsw/properties.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lwsw/variational.hpp"

namespace lwsw {

namespace {

double max_abs(const RealField& f) {
  double m = 0.0;
  for (double x : f.values) m = std::max(m, std::abs(x));
  return m;
}

// Sign of the component at its largest-magnitude point; 0 for a zero field.
int dominant_sign(const RealField& f) {
  double best = 0.0;
  int sign = 0;
  for (double x : f.values) {
    if (std::abs(x) > best) {
      best = std::abs(x);
      sign = (x > 0.0) ? 1 : -1;
    }
  }
  return sign;
}

}  // namespace

SignVerdict check_sign(const ProfileSet& t, const PropertyThresholds& th) {
  SignVerdict v;
  const double psi_max = max_abs(t.psi);
  if (psi_max == 0.0) {
    v.trivial = true;
    v.pass = true;
  } else {
    v.psi_floor = th.psi_floor_rel * psi_max;
    v.psi_global_min = *std::min_element(t.psi.values.begin(), t.psi.values.end());
    v.psi_min_above_floor = std::numeric_limits<double>::infinity();
    for (double x : t.psi.values) {
      if (std::abs(x) <= v.psi_floor)
        ++v.psi_below_floor_count;
      else
        v.psi_min_above_floor = std::min(v.psi_min_above_floor, x);
    }
    v.pass = v.psi_min_above_floor > 0.0;
  }
  for (const auto& phi : t.phi) {
    const double m = max_abs(phi);
    const int s = dominant_sign(phi);
    v.phi_sign.push_back(s);
    v.phi_floor.push_back(th.sign_floor_rel * m);
    if (m == 0.0) {
      v.phi_min_signed.push_back(0.0);
      v.phi_pass.push_back(true);
      continue;
    }
    double min_signed = std::numeric_limits<double>::infinity();
    for (double x : phi.values) min_signed = std::min(min_signed, s * x);
    v.phi_min_signed.push_back(min_signed);
    v.phi_pass.push_back(min_signed > -th.sign_floor_rel * m);
  }
  for (bool ok : v.phi_pass) v.pass = v.pass && ok;
  return v;
}

SymmetryVerdict check_symmetry_monotonicity(const ProfileSet& t, const PropertyThresholds& th) {
  SymmetryVerdict v;
  const auto& g = *t.grid;
  const std::size_t M = g.size();

  auto component_checks = [&](const RealField& f) {
    const double m = max_abs(f);
    if (m == 0.0) return;
    // -x_i = x_{M-i} for i >= 1; x_0 = -L is its own mirror (periodically).
    double asym = 0.0;
    for (std::size_t i = 1; i < M; ++i)
      asym = std::max(asym, std::abs(f[i] - f[M - i]));
    v.asymmetry = std::max(v.asymmetry, asym / m);

    // Monotone non-increase of the sign-corrected component on [0, L - 5h].
    const double s = dominant_sign(f);
    const double hi = g.half_width() - 5.0 * g.spacing();
    double uphill = 0.0;
    for (std::size_t i = M / 2; i + 1 < M && g.point(i) <= hi; ++i)
      uphill = std::max(uphill, s * (f[i + 1] - f[i]));
    v.uphill_rel = std::max(v.uphill_rel, uphill / m);
  };

  for (const auto& phi : t.phi) component_checks(phi);
  component_checks(t.psi);
  v.evenness_pass = v.asymmetry <= th.evenness_max;
  v.monotonicity_pass = v.uphill_rel <= th.monotonicity_rel;
  return v;
}

DecayFit fit_decay_rate(const RealField& f, double x_lo, double x_hi, double target,
                        double rel_tol) {
  DecayFit fit;
  fit.target = target;
  fit.window_lo = x_lo;
  fit.window_hi = x_hi;
  const auto& g = *f.grid;

  std::vector<double> xs, logs;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double x = g.point(i);
    if (x < x_lo || x > x_hi) continue;
    if (!(f[i] > 0.0)) break;  // shrink the window at the first nonpositive sample
    xs.push_back(x);
    logs.push_back(std::log(f[i]));
  }
  fit.points = static_cast<int>(xs.size());
  if (fit.points < 8) return fit;  // not enough signal to fit
  fit.ok = true;

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += logs[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * logs[i];
  }
  const double n = static_cast<double>(xs.size());
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.rel_error = std::abs(std::abs(fit.slope) - target) / target;
  fit.pass = fit.slope < 0.0 && fit.rel_error <= rel_tol;
  return fit;
}

FourierVerdict check_fourier_positivity(const ProfileSet& t, const PropertyThresholds& th) {
  FourierVerdict v;
  v.min_real_above_floor = std::numeric_limits<double>::infinity();
  bool any = false;
  bool positive = true;

  auto component = [&](const RealField& f, int sign) {
    if (max_abs(f) == 0.0) return;
    any = true;
    auto ct = continuum_transform(f);
    if (sign < 0)
      for (auto& c : ct) c = -c;  // transform of the positive representative
    double max_mag = 0.0;
    for (const auto& c : ct) max_mag = std::max(max_mag, std::abs(c));
    for (const auto& c : ct) v.max_imag_rel = std::max(v.max_imag_rel, std::abs(c.imag()) / max_mag);

    // Walk xi >= 0 (bins 0..M/2) over the leading above-floor stretch.
    const double floor = th.fourier_floor_rel * max_mag;
    const std::size_t nyq = f.grid->nyquist_bin();
    std::size_t last = 0;
    while (last < nyq && std::abs(ct[last + 1]) > floor) ++last;
    for (std::size_t k = 0; k <= last; ++k) {
      const double r = ct[k].real();
      v.min_real_above_floor = std::min(v.min_real_above_floor, r);
      if (!(r > 0.0)) positive = false;
      if (k < last)
        v.max_uphill_rel = std::max(v.max_uphill_rel, (ct[k + 1].real() - r) / max_mag);
    }
  };

  for (std::size_t j = 0; j < t.phi.size(); ++j) component(t.phi[j], dominant_sign(t.phi[j]));
  component(t.psi, +1);

  if (!any) {
    v.trivial = true;  // zero profile: vacuous pass
    v.pass = true;
    v.min_real_above_floor = 0.0;
    return v;
  }
  v.pass = positive && v.max_imag_rel <= th.fourier_imag_rel &&
           v.max_uphill_rel <= th.fourier_floor_rel;
  return v;
}

PropertyReport run_property_suite(const ProfileSet& input, const PropertyThresholds& th) {
  validate_profile(input);
  PropertyReport rep;
  rep.thresholds = th;

  const bool trivial = profile_norm(input) < 1e-12;
  const ProfileSet t = trivial ? input : center_profile(input);

  rep.residual = ode_residual(t, 1.0);
  rep.residual_pass = rep.residual <= th.residual_max;
  rep.sign = check_sign(t, th);
  rep.symmetry = check_symmetry_monotonicity(t, th);
  rep.fourier = check_fourier_positivity(t, th);

  const double sqrt_sigma = std::sqrt(t.params.sigma());
  const double psi_rate = std::min(std::sqrt(t.params.eta()), 2.0 * sqrt_sigma);
  const double lo = t.grid->half_width() / 2.0;
  const double hi = 0.75 * t.grid->half_width();
  rep.decay_pass = true;
  for (std::size_t j = 0; j < t.phi.size(); ++j) {
    RealField abs_phi = t.phi[j];
    const int s = dominant_sign(abs_phi);
    if (s < 0)
      for (auto& x : abs_phi.values) x = -x;
    rep.decay.push_back(fit_decay_rate(abs_phi, lo, hi, sqrt_sigma, th.decay_rel));
    rep.decay_pass = rep.decay_pass && rep.decay.back().pass;
  }
  rep.decay.push_back(fit_decay_rate(t.psi, lo, hi, psi_rate, th.decay_rel));
  rep.decay_pass = rep.decay_pass && rep.decay.back().pass;

  if (!trivial) {
    rep.kappa_hat = multiplier_estimate(t);
    const double F = functional_F_integral(t);
    if (F != 0.0) rep.kappa_identity = 2.0 * functional_K(t) / (3.0 * F);
    double min_corr = 1.0;
    for (const auto& phi : t.phi) {
      double num = 0.0, den = 0.0;
      for (double x : phi.values) {
        num += std::abs(x) * x;
        den += x * x;
      }
      if (den > 0.0) min_corr = std::min(min_corr, std::abs(num) / den);
    }
    rep.min_abs_correlation = min_corr;
  }

  rep.all_pass = rep.residual_pass && rep.sign.pass && rep.symmetry.evenness_pass &&
                 rep.symmetry.monotonicity_pass && rep.decay_pass && rep.fourier.pass;
  return rep;
}

}  // namespace lwsw
