#pragma once

// Qualitative certification of a computed profile: one-signedness, evenness,
// monotone decrease away from the center, exponential decay rates, and
// positivity/monotonicity of the Fourier transforms. Produces a
// machine-readable report in which every verdict carries the number it was
// judged on and the threshold it was judged against.

#include <vector>

#include "lwsw/model.hpp"

namespace lwsw {

struct PropertyThresholds {
  double residual_max = 1e-6;       // converged-solution gate for the suite
  double sign_floor_rel = 1e-10;    // one-sign noise floor, relative to max |Phi_j|
  double psi_floor_rel = 1e-12;     // strict-positivity underflow floor for Psi
  double evenness_max = 1e-6;
  double monotonicity_rel = 1e-8;   // uphill slack relative to max |component|
  double decay_rel = 0.02;
  double fourier_imag_rel = 1e-10;
  double fourier_floor_rel = 1e-12; // spectral noise floor
};

struct SignVerdict {
  bool pass = false;
  bool trivial = false;           // zero profile: vacuous
  double psi_global_min = 0.0;
  double psi_min_above_floor = 0.0;
  double psi_floor = 0.0;
  int psi_below_floor_count = 0;  // far-field entries under the underflow floor
  std::vector<int> phi_sign;      // +1 / -1 (0 for a zero component)
  std::vector<double> phi_min_signed;
  std::vector<double> phi_floor;
  std::vector<bool> phi_pass;
};

struct SymmetryVerdict {
  bool evenness_pass = false;
  double asymmetry = 0.0;  // max over components of max |f(x)-f(-x)| / max|f|
  bool monotonicity_pass = false;
  double uphill_rel = 0.0; // max positive forward difference / max|f|, x in [0, L-5h]
};

struct DecayFit {
  bool ok = false;       // enough strictly positive window points to fit
  bool pass = false;
  double slope = 0.0;    // least-squares slope of log f
  double target = 0.0;   // expected rate (positive number)
  double rel_error = 0.0;
  double window_lo = 0.0;
  double window_hi = 0.0;
  int points = 0;
};

struct FourierVerdict {
  bool pass = false;
  bool trivial = false;
  double max_imag_rel = 0.0;         // max |Im| / max magnitude over components
  double min_real_above_floor = 0.0; // most negative real part above the noise floor
  double max_uphill_rel = 0.0;       // worst increase along |xi|, relative
};

struct PropertyReport {
  PropertyThresholds thresholds;
  double residual = 0.0;  // ode_residual(Theta, 1)
  bool residual_pass = false;
  SignVerdict sign;
  SymmetryVerdict symmetry;
  std::vector<DecayFit> decay;  // Phi_1..Phi_N then Psi
  bool decay_pass = false;
  FourierVerdict fourier;
  double kappa_hat = 0.0;       // least-squares multiplier
  double kappa_identity = 0.0;  // 2K/(3 int F)
  double min_abs_correlation = 0.0;  // linear dependence of |Phi_j| on Phi_j
  bool all_pass = false;
};

// Individual checks; these do not recenter, so gauge-dependent ones (evenness,
// Fourier phases) fail on off-center input by design.
SignVerdict check_sign(const ProfileSet& t, const PropertyThresholds& th = {});
SymmetryVerdict check_symmetry_monotonicity(const ProfileSet& t,
                                            const PropertyThresholds& th = {});
FourierVerdict check_fourier_positivity(const ProfileSet& t,
                                        const PropertyThresholds& th = {});

// Least-squares slope of log f on [x_lo, x_hi]; the window is shrunk at the
// first nonpositive sample. target is the expected decay rate (> 0).
DecayFit fit_decay_rate(const RealField& f, double x_lo, double x_hi, double target,
                        double rel_tol = 0.02);

// Centers the profile (translation gauge), then runs every check. Decay
// targets: sqrt(sigma) for Phi_j, min(sqrt(eta), 2 sqrt(sigma)) for Psi, on
// the default window [L/2, 3L/4].
PropertyReport run_property_suite(const ProfileSet& t, const PropertyThresholds& th = {});

}  // namespace lwsw
