#pragma once

// Discrete symmetric decreasing rearrangement on the periodic grid, plus the
// Hardy-Littlewood, Polya-Szego and Riesz inequality checks it certifies.

#include "lwsw/spectral_grid.hpp"

namespace lwsw {

// Nonnegative finite values on a grid; construction validates.
struct NonnegativeField {
  RealField field;

  explicit NonnegativeField(RealField f);
  const GridPtr& grid() const { return field.grid; }
  std::size_t size() const { return field.size(); }
  double operator[](std::size_t i) const { return field[i]; }
};

// Sorts the value multiset decreasingly and places it organ-pipe fashion at
// offsets 0, +h, -h, +2h, -2h, ... from the midpoint index M/2 (the unpaired
// smallest value lands at index 0). Even about M/2 up to the one unpaired
// value, non-increasing in |x - x_{M/2}|, exactly equimeasurable with the input.
NonnegativeField rearrange(const NonnegativeField& f);

struct InequalityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  double slack = 0.0;  // tolerance the verdict used
};

// int f g <= int f* g*   (verdict with absolute slack 1e-12)
InequalityCheck hardy_littlewood_check(const NonnegativeField& f, const NonnegativeField& g);

// sum ((f*)')^2 <= sum (f')^2 with periodic forward differences; the cyclic
// organ-pipe arrangement minimizes the quadratic difference sum over all
// arrangements, so this is exact up to the 1e-12 slack. (Spectral derivatives
// of merely continuous rearranged data would ring and spuriously fail.)
InequalityCheck polya_szego_check(const NonnegativeField& f);

// (f * g * k)(0) <= (f* * g* * k*)(0) by direct double-sum quadrature with
// periodic indexing; slack 1e-10 relative to the right-hand side.
InequalityCheck riesz_check(const NonnegativeField& f, const NonnegativeField& g,
                            const NonnegativeField& k);

}  // namespace lwsw
