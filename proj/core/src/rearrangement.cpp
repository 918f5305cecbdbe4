#include "lwsw/rearrangement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>

namespace lwsw {

NonnegativeField::NonnegativeField(RealField f) : field(std::move(f)) {
  if (!field.grid) throw ValidationError("rearrangement: field has no grid");
  for (double x : field.values)
    if (!(x >= 0.0) || !std::isfinite(x))
      throw ValidationError("rearrangement: entries must be nonnegative and finite");
}

NonnegativeField rearrange(const NonnegativeField& f) {
  std::vector<double> sorted(f.field.values);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const std::size_t M = sorted.size();
  const std::size_t mid = M / 2;
  RealField out(f.grid());
  out[mid] = sorted[0];
  for (std::size_t i = 1; i < mid; ++i) {
    out[mid + i] = sorted[2 * i - 1];
    out[mid - i] = sorted[2 * i];
  }
  if (M >= 2) out[0] = sorted[M - 1];
  return NonnegativeField(std::move(out));
}

InequalityCheck hardy_littlewood_check(const NonnegativeField& f, const NonnegativeField& g) {
  if (f.grid() != g.grid()) throw ValidationError("hardy_littlewood: fields on different grids");
  auto dot = [&](const RealField& a, const RealField& b) {
    RealField prod(a.grid);
    for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = a[i] * b[i];
    return quadrature(prod);
  };
  InequalityCheck chk;
  chk.slack = 1e-12;
  chk.lhs = dot(f.field, g.field);
  chk.rhs = dot(rearrange(f).field, rearrange(g).field);
  chk.holds = chk.lhs <= chk.rhs + chk.slack;
  return chk;
}

namespace {

double forward_difference_energy(const RealField& f) {
  const std::size_t M = f.size();
  const double h = f.grid->spacing();
  double sum = 0.0;
  for (std::size_t i = 0; i < M; ++i) {
    const double d = (f[(i + 1) % M] - f[i]) / h;
    sum += d * d;
  }
  return h * sum;
}

}  // namespace

InequalityCheck polya_szego_check(const NonnegativeField& f) {
  InequalityCheck chk;
  chk.slack = 1e-12;
  chk.lhs = forward_difference_energy(rearrange(f).field);
  chk.rhs = forward_difference_energy(f.field);
  chk.holds = chk.lhs <= chk.rhs + chk.slack;
  return chk;
}

namespace {

// (f * g * k)(0) = h^2 sum_{i,j} f_i g_j k_{(M/2 - i - j) mod M} on the
// periodic grid (index M/2 is x = 0).
double triple_convolution_at_zero(const RealField& f, const RealField& g, const RealField& k) {
  const std::size_t M = f.size();
  const double h = f.grid->spacing();
  double sum = 0.0;
  for (std::size_t i = 0; i < M; ++i) {
    if (f[i] == 0.0) continue;
    double inner = 0.0;
    // (M/2 - i - j) mod M, advanced by decrementing as j increases
    std::size_t idx = (M / 2 + 2 * M - i) % M;
    for (std::size_t j = 0; j < M; ++j) {
      inner += g[j] * k[idx];
      idx = (idx == 0) ? M - 1 : idx - 1;
    }
    sum += f[i] * inner;
  }
  return h * h * sum;
}

}  // namespace

InequalityCheck riesz_check(const NonnegativeField& f, const NonnegativeField& g,
                            const NonnegativeField& k) {
  if (f.grid() != g.grid() || f.grid() != k.grid())
    throw ValidationError("riesz: fields on different grids");
  InequalityCheck chk;
  chk.lhs = triple_convolution_at_zero(f.field, g.field, k.field);
  chk.rhs = triple_convolution_at_zero(rearrange(f).field, rearrange(g).field,
                                       rearrange(k).field);
  chk.slack = 1e-10 * chk.rhs;
  chk.holds = chk.lhs <= chk.rhs + chk.slack;
  return chk;
}

}  // namespace lwsw
