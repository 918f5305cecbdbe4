#pragma once

// Periodic pseudospectral discretization of the line: uniform grid on [-L, L),
// FFT-based differentiation, inverse Helmholtz operators, fractional translation
// and quadrature. All fields live in physical space; transforms stay internal.

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

#include "lwsw/errors.hpp"

namespace lwsw {

using Complex = std::complex<double>;

class SpectralGrid;
using GridPtr = std::shared_ptr<const SpectralGrid>;

// Immutable periodic grid with cached FFT plans. Construct through make_grid.
// Thread-safe for concurrent use once built (plans execute on per-call buffers).
class SpectralGrid {
 public:
  ~SpectralGrid();
  SpectralGrid(const SpectralGrid&) = delete;
  SpectralGrid& operator=(const SpectralGrid&) = delete;

  double half_width() const { return L_; }
  std::size_t size() const { return M_; }
  double spacing() const { return h_; }

  // x_i = -L + i h
  double point(std::size_t i) const { return -L_ + h_ * static_cast<double>(i); }
  // FFT bin order: bin k holds mode m = k for k < M/2, m = k - M for k >= M/2;
  // xi_m = pi m / L. Bin M/2 is the lone Nyquist mode.
  double wavenumber(std::size_t bin) const { return xi_[bin]; }
  const std::vector<double>& wavenumbers() const { return xi_; }
  std::size_t nyquist_bin() const { return M_ / 2; }

  // Forward transform, scaled 1/M so that to_physical(to_spectral(f)) = f.
  std::vector<Complex> to_spectral(const std::vector<Complex>& f) const;
  std::vector<Complex> to_physical(const std::vector<Complex>& c) const;

 private:
  friend GridPtr make_grid(double, std::size_t);
  SpectralGrid(double half_width, std::size_t size);

  double L_;
  std::size_t M_;
  double h_;
  std::vector<double> xi_;
  void* plan_fwd_;  // fftw_plan, kept opaque to avoid leaking fftw3.h
  void* plan_bwd_;
};

// Validates L > 0 and M a positive power of two.
GridPtr make_grid(double half_width, std::size_t size);

struct RealField {
  std::vector<double> values;
  GridPtr grid;

  RealField() = default;
  explicit RealField(GridPtr g) : values(g->size(), 0.0), grid(std::move(g)) {}
  RealField(GridPtr g, std::vector<double> v);

  std::size_t size() const { return values.size(); }
  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }
};

struct ComplexField {
  std::vector<Complex> values;
  GridPtr grid;

  ComplexField() = default;
  explicit ComplexField(GridPtr g) : values(g->size(), Complex{}), grid(std::move(g)) {}
  ComplexField(GridPtr g, std::vector<Complex> v);

  std::size_t size() const { return values.size(); }
  Complex& operator[](std::size_t i) { return values[i]; }
  Complex operator[](std::size_t i) const { return values[i]; }
};

// Spectral d^order/dx^order; odd orders zero the Nyquist mode. Rejects
// non-finite input.
RealField derivative(const RealField& f, int order);

// Solves mass*(s - d^2/dx^2) g = f, i.e. divides mode m by mass*(s + xi_m^2).
// Requires s > 0, mass > 0.
RealField helmholtz_inverse(const RealField& f, double s, double mass = 1.0);

// Periodic translation: returns f(x - d) for arbitrary real d (multiplies mode
// m by exp(-i xi_m d)).
RealField fractional_shift(const RealField& f, double d);
ComplexField fractional_shift(const ComplexField& f, double d);

// h * sum_i f(x_i): spectrally accurate integral over the period for smooth
// decaying integrands.
double quadrature(const RealField& f);

// Sub-grid location of the maximum of a smooth field: argmax grid point,
// parabolic seed, then Newton on the trigonometric interpolant's derivative.
double peak_location(const RealField& f);

// Samples of the continuum transform hat f(xi_m) = h sum_j f(x_j) e^{-i xi_m x_j},
// in bin order. (Positive-definiteness checks need the true phase convention,
// which differs from raw FFT bins by (-1)^m.)
std::vector<Complex> continuum_transform(const RealField& f);

}  // namespace lwsw
