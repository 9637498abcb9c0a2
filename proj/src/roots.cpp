#include "trisum/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "trisum/error.hpp"

namespace trisum {

namespace {

constexpr double kRepeatedRootThreshold = 1e-10;

ComplexValue polish(ComplexValue x, double z) {
  // f = x^3 - 2x^2 + x - z, f' = 3x^2 - 4x + 1
  const ComplexValue f = ((x - 2.0) * x + 1.0) * x - z;
  const ComplexValue df = (3.0 * x - 4.0) * x + 1.0;
  if (std::abs(df) == 0.0) {
    return x;
  }
  return x - f / df;
}

ExtendedComplex polish(ExtendedComplex x, long double z) {
  const ExtendedComplex f = ((x - 2.0L) * x + 1.0L) * x - z;
  const ExtendedComplex df = (3.0L * x - 4.0L) * x + 1.0L;
  if (std::abs(df) == 0.0L) {
    return x;
  }
  return x - f / df;
}

double polish(double x, double z) {
  const double f = ((x - 2.0) * x + 1.0) * x - z;
  const double df = (3.0 * x - 4.0) * x + 1.0;
  return df == 0.0 ? x : x - f / df;
}

}  // namespace

double cubic_discriminant(double z) { return z * (4.0 - 27.0 * z); }

CubicRoots solve_cubic(double z) {
  if (!std::isfinite(z)) {
    throw DomainError("solve_cubic: z must be finite");
  }
  const double disc = cubic_discriminant(z);
  if (std::abs(disc) <= kRepeatedRootThreshold) {
    throw RepeatedRoots("solve_cubic: x(1-x)^2 - z has a repeated root at z = " +
                        std::to_string(z));
  }

  // x = y + 2/3 turns the cubic into y^3 + p y + q with p = -1/3, q = 2/27 - z.
  constexpr double shift = 2.0 / 3.0;
  const double q = 2.0 / 27.0 - z;

  CubicRoots out;
  out.z = z;
  if (disc > 0.0) {
    // Three real roots (0 < z < 4/27): trigonometric form with 2 sqrt(-p/3) = 2/3.
    const double phi = std::acos(std::clamp(-13.5 * q, -1.0, 1.0));
    for (int k = 0; k < 3; ++k) {
      const double y = shift * std::cos((phi - 2.0 * std::numbers::pi * k) / 3.0);
      out.roots[k] = polish(y + shift, z);
    }
  } else {
    // One real root: Cardano with the cancellation-free choice of sign.
    const double d = std::sqrt(q * q / 4.0 - 1.0 / 729.0);
    const double u = std::cbrt(-0.5 * q - std::copysign(d, q));
    const double v = (1.0 / 9.0) / u;  // uv = -p/3
    const double real_root = polish(u + v + shift, z);
    const ComplexValue pair =
        polish(ComplexValue{-0.5 * (u + v) + shift, 0.5 * std::sqrt(3.0) * std::abs(u - v)}, z);
    out.roots = {ComplexValue{real_root, 0.0}, pair, std::conj(pair)};
  }

  std::sort(out.roots.begin(), out.roots.end(), [](ComplexValue a, ComplexValue b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() < b.imag();
  });

  const auto& r = out.roots;
  const ComplexValue e1 = r[0] + r[1] + r[2];
  const ComplexValue e2 = r[0] * r[1] + r[0] * r[2] + r[1] * r[2];
  const ComplexValue e3 = r[0] * r[1] * r[2];
  out.vieta_residual = std::max({std::abs(e1 - 2.0), std::abs(e2 - 1.0), std::abs(e3 - z)});
  return out;
}

ExtendedRoots extended_roots(const CubicRoots& roots) {
  ExtendedRoots out;
  for (std::size_t k = 0; k < out.size(); ++k) {
    ExtendedComplex x(roots.roots[k].real(), roots.roots[k].imag());
    // Quadratic convergence from a double-accurate start: two steps suffice.
    x = polish(polish(x, roots.z), roots.z);
    if (roots.roots[k].imag() == 0.0) x.imag(0.0L);
    out[k] = x;
  }
  return out;
}

}  // namespace trisum
