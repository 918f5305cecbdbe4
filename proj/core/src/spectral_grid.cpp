#include "lwsw/spectral_grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <utility>

namespace lwsw {

namespace {

// FFTW plan creation/destruction is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_complex* as_fftw(std::vector<Complex>& v) {
  return reinterpret_cast<fftw_complex*>(v.data());
}

void ensure_finite(const std::vector<double>& v, const char* who) {
  for (double x : v)
    if (!std::isfinite(x)) throw ValidationError(std::string(who) + ": non-finite input value");
}

}  // namespace

SpectralGrid::SpectralGrid(double half_width, std::size_t size)
    : L_(half_width), M_(size), h_(2.0 * half_width / static_cast<double>(size)) {
  xi_.resize(M_);
  const double base = std::numbers::pi / L_;
  for (std::size_t k = 0; k < M_; ++k) {
    const auto m = (k < M_ / 2) ? static_cast<long>(k) : static_cast<long>(k) - static_cast<long>(M_);
    xi_[k] = base * static_cast<double>(m);
  }
  // Plans are created once against scratch buffers; FFTW_UNALIGNED lets them
  // execute on arbitrary vector storage afterwards.
  std::vector<Complex> a(M_), b(M_);
  std::lock_guard<std::mutex> lock(planner_mutex());
  plan_fwd_ = fftw_plan_dft_1d(static_cast<int>(M_), as_fftw(a), as_fftw(b), FFTW_FORWARD,
                               FFTW_ESTIMATE | FFTW_UNALIGNED);
  plan_bwd_ = fftw_plan_dft_1d(static_cast<int>(M_), as_fftw(a), as_fftw(b), FFTW_BACKWARD,
                               FFTW_ESTIMATE | FFTW_UNALIGNED);
}

SpectralGrid::~SpectralGrid() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
}

std::vector<Complex> SpectralGrid::to_spectral(const std::vector<Complex>& f) const {
  std::vector<Complex> in(f), out(M_);
  fftw_execute_dft(static_cast<fftw_plan>(plan_fwd_), as_fftw(in), as_fftw(out));
  const double scale = 1.0 / static_cast<double>(M_);
  for (auto& c : out) c *= scale;
  return out;
}

std::vector<Complex> SpectralGrid::to_physical(const std::vector<Complex>& c) const {
  std::vector<Complex> in(c), out(M_);
  fftw_execute_dft(static_cast<fftw_plan>(plan_bwd_), as_fftw(in), as_fftw(out));
  return out;
}

GridPtr make_grid(double half_width, std::size_t size) {
  if (!(half_width > 0.0) || !std::isfinite(half_width))
    throw ValidationError("grid: half_width L > 0 required");
  if (size < 2 || (size & (size - 1)) != 0)
    throw ValidationError("grid: size M must be a power of two (>= 2)");
  return GridPtr(new SpectralGrid(half_width, size));
}

RealField::RealField(GridPtr g, std::vector<double> v) : values(std::move(v)), grid(std::move(g)) {
  if (values.size() != grid->size()) throw ValidationError("field: length must equal grid size M");
}

ComplexField::ComplexField(GridPtr g, std::vector<Complex> v)
    : values(std::move(v)), grid(std::move(g)) {
  if (values.size() != grid->size()) throw ValidationError("field: length must equal grid size M");
}

namespace {

std::vector<Complex> promote(const RealField& f) {
  std::vector<Complex> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f.values[i];
  return out;
}

RealField real_part(const GridPtr& g, const std::vector<Complex>& v) {
  RealField out(g);
  for (std::size_t i = 0; i < v.size(); ++i) out.values[i] = v[i].real();
  return out;
}

}  // namespace

RealField derivative(const RealField& f, int order) {
  if (order < 1) throw ValidationError("derivative: order must be >= 1");
  ensure_finite(f.values, "derivative");
  const auto& g = *f.grid;
  auto c = g.to_spectral(promote(f));
  for (std::size_t k = 0; k < c.size(); ++k) {
    c[k] *= std::pow(Complex(0.0, g.wavenumber(k)), order);
  }
  if (order % 2 != 0) c[g.nyquist_bin()] = 0.0;  // unpaired mode has no odd derivative
  return real_part(f.grid, g.to_physical(c));
}

RealField helmholtz_inverse(const RealField& f, double s, double mass) {
  if (!(s > 0.0)) throw ValidationError("helmholtz_inverse: s > 0 required");
  if (!(mass > 0.0)) throw ValidationError("helmholtz_inverse: mass > 0 required");
  const auto& g = *f.grid;
  auto c = g.to_spectral(promote(f));
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double xi = g.wavenumber(k);
    c[k] /= mass * (s + xi * xi);
  }
  return real_part(f.grid, g.to_physical(c));
}

namespace {

std::vector<Complex> shift_spectrum(const SpectralGrid& g, std::vector<Complex> c, double d) {
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double xi = g.wavenumber(k);
    c[k] *= Complex(std::cos(xi * d), -std::sin(xi * d));
  }
  return c;
}

}  // namespace

RealField fractional_shift(const RealField& f, double d) {
  if (d == 0.0) return f;
  const auto& g = *f.grid;
  auto c = shift_spectrum(g, g.to_spectral(promote(f)), d);
  return real_part(f.grid, g.to_physical(c));
}

ComplexField fractional_shift(const ComplexField& f, double d) {
  if (d == 0.0) return f;
  const auto& g = *f.grid;
  auto c = shift_spectrum(g, g.to_spectral(f.values), d);
  return ComplexField(f.grid, g.to_physical(c));
}

double quadrature(const RealField& f) {
  double sum = 0.0;
  for (double x : f.values) sum += x;
  return f.grid->spacing() * sum;
}

std::vector<Complex> continuum_transform(const RealField& f) {
  const auto& g = *f.grid;
  auto c = g.to_spectral(promote(f));
  // hat f(xi_m) = h (-1)^m M c_m: bins carry an extra (-1)^m because the grid
  // starts at -L rather than 0.
  const double scale = g.spacing() * static_cast<double>(g.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
    c[k] *= sgn * scale;
  }
  return c;
}

double peak_location(const RealField& f) {
  const auto& g = *f.grid;
  const std::size_t M = g.size();
  std::size_t i0 = 0;
  for (std::size_t i = 1; i < M; ++i)
    if (f.values[i] > f.values[i0]) i0 = i;

  // Parabolic seed through the periodic neighbors.
  const double ym = f.values[(i0 + M - 1) % M];
  const double y0 = f.values[i0];
  const double yp = f.values[(i0 + 1) % M];
  const double denom = ym - 2.0 * y0 + yp;
  double x = g.point(i0);
  if (denom < 0.0) x += 0.5 * g.spacing() * (ym - yp) / denom;

  // Newton on the trigonometric interpolant's derivative. Off-grid evaluation
  // uses the true-phase coefficients a_m = (-1)^m c_m.
  auto c = g.to_spectral(promote(f));
  std::vector<Complex> a(c);
  for (std::size_t k = 0; k < M; ++k)
    if (k % 2 != 0) a[k] = -a[k];

  auto eval_d1_d2 = [&](double xv, double& d1, double& d2) {
    d1 = 0.0;
    d2 = 0.0;
    for (std::size_t k = 0; k < M; ++k) {
      if (k == g.nyquist_bin()) continue;  // no odd-derivative content
      const double xi = g.wavenumber(k);
      const Complex e(std::cos(xi * xv), std::sin(xi * xv));
      const Complex v = a[k] * e;
      d1 += -xi * v.imag();       // Re(i xi a e)
      d2 += -xi * xi * v.real();  // Re(-xi^2 a e)
    }
  };

  for (int it = 0; it < 50; ++it) {
    double d1 = 0.0, d2 = 0.0;
    eval_d1_d2(x, d1, d2);
    if (d2 >= 0.0) break;  // lost the concave cap; keep the best estimate
    const double step = d1 / d2;
    x -= step;
    if (std::abs(step) < 1e-14 * std::max(1.0, std::abs(x))) break;
  }
  // Report within [-L, L).
  const double period = 2.0 * g.half_width();
  x = std::remainder(x, period);
  if (x >= g.half_width()) x -= period;
  if (x < -g.half_width()) x += period;
  return x;
}

}  // namespace lwsw
