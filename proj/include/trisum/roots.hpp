#pragma once

#include <array>

#include "trisum/specfun.hpp"

namespace trisum {

/// The three roots of x(1-x)^2 - z = x^3 - 2x^2 + x - z.
///
/// Roots are ordered by descending real part, ties broken by ascending
/// imaginary part, so that z = 2 yields (2, -i, i) and z = -4 yields
/// ((3 - i sqrt7)/2, (3 + i sqrt7)/2, -1).
struct CubicRoots {
  double z = 0.0;
  std::array<ComplexValue, 3> roots{};
  /// max of |e1 - 2|, |e2 - 1|, |e3 - z| over the elementary symmetric sums.
  double vieta_residual = 0.0;
};

/// Roots refined by Newton steps in long double, same order as CubicRoots.
using ExtendedRoots = std::array<ExtendedComplex, 3>;

/// Discriminant of x^3 - 2x^2 + x - z, equal to z(4 - 27z).
double cubic_discriminant(double z);

/// Throws RepeatedRoots when |discriminant| <= 1e-10 (z near 0 or 4/27),
/// DomainError for non-finite z.
CubicRoots solve_cubic(double z);

ExtendedRoots extended_roots(const CubicRoots& roots);

}  // namespace trisum
