#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "trisum/error.hpp"
#include "trisum/roots.hpp"

using namespace trisum;

namespace {
ComplexValue cubic(ComplexValue x, double z) { return x * (1.0 - x) * (1.0 - x) - z; }
}  // namespace

TEST_CASE("discriminant") {
  CHECK(cubic_discriminant(0.0) == 0.0);
  CHECK(cubic_discriminant(2.0) == doctest::Approx(2.0 * (4.0 - 54.0)));
  CHECK(cubic_discriminant(-4.0) == doctest::Approx(-4.0 * (4.0 + 108.0)));
  CHECK(cubic_discriminant(0.1) > 0.0);
}

TEST_CASE("z = 2 gives 2, -i, i in that order") {
  const CubicRoots r = solve_cubic(2.0);
  CHECK(r.z == 2.0);
  CHECK(std::abs(r.roots[0] - ComplexValue(2.0, 0.0)) < 1e-15);
  CHECK(std::abs(r.roots[1] - ComplexValue(0.0, -1.0)) < 1e-15);
  CHECK(std::abs(r.roots[2] - ComplexValue(0.0, 1.0)) < 1e-15);
  CHECK(r.vieta_residual < 1e-14);
}

TEST_CASE("z = -4 gives (3 -+ i sqrt7)/2 and -1") {
  const CubicRoots r = solve_cubic(-4.0);
  const double s7 = std::sqrt(7.0);
  CHECK(std::abs(r.roots[0] - ComplexValue(1.5, -s7 / 2)) < 1e-15);
  CHECK(std::abs(r.roots[1] - ComplexValue(1.5, s7 / 2)) < 1e-15);
  CHECK(std::abs(r.roots[2] - ComplexValue(-1.0, 0.0)) < 1e-15);
}

TEST_CASE("three real roots inside (0, 4/27)") {
  const CubicRoots r = solve_cubic(0.1);
  for (const auto& x : r.roots) {
    CHECK(x.imag() == 0.0);
    CHECK(std::abs(cubic(x, 0.1)) < 1e-15);
  }
  CHECK(r.roots[0].real() > r.roots[1].real());
  CHECK(r.roots[1].real() > r.roots[2].real());
}

TEST_CASE("repeated roots are rejected") {
  CHECK_THROWS_AS(solve_cubic(0.0), RepeatedRoots);
  CHECK_THROWS_AS(solve_cubic(4.0 / 27.0), RepeatedRoots);
  CHECK_THROWS_AS(solve_cubic(1e-12), RepeatedRoots);
  CHECK_THROWS_AS(solve_cubic(std::nan("")), DomainError);
  CHECK_THROWS_AS(solve_cubic(INFINITY), DomainError);
}

TEST_CASE("property: roots solve the cubic and satisfy Vieta") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> mag(0.0, 4.0);
  std::bernoulli_distribution neg(0.5);
  for (int i = 0; i < 500; ++i) {
    const double z = (neg(rng) ? -1.0 : 1.0) * std::pow(10.0, mag(rng) - 1.0);
    if (std::abs(cubic_discriminant(z)) <= 1e-6) continue;
    CAPTURE(z);
    const CubicRoots r = solve_cubic(z);
    const double scale = std::max(1.0, std::abs(z));
    for (const auto& x : r.roots) {
      CHECK(std::abs(cubic(x, z)) <= 1e-13 * scale);
    }
    CHECK(std::abs(r.roots[0] + r.roots[1] + r.roots[2] - 2.0) <= 1e-13 * scale);
    CHECK(std::abs(r.roots[0] * r.roots[1] * r.roots[2] - z) <= 1e-13 * scale);
    CHECK(r.vieta_residual <= 1e-13 * scale);
    // One real root and a conjugate pair outside [0, 4/27].
    const bool three_real = z > 0.0 && z < 4.0 / 27.0;
    if (!three_real) {
      int real_count = 0;
      for (const auto& x : r.roots) real_count += x.imag() == 0.0;
      CHECK(real_count == 1);
    }
    for (std::size_t k = 0; k + 1 < 3; ++k) {
      const bool ordered = r.roots[k].real() > r.roots[k + 1].real() ||
                           (r.roots[k].real() == r.roots[k + 1].real() &&
                            r.roots[k].imag() <= r.roots[k + 1].imag());
      CHECK(ordered);
    }
  }
}

TEST_CASE("extended roots refine the double roots") {
  for (double z : {2.0, -4.0, -8.0, 5.0, 0.1, 1e6}) {
    CAPTURE(z);
    const CubicRoots r = solve_cubic(z);
    const ExtendedRoots e = extended_roots(r);
    for (std::size_t k = 0; k < 3; ++k) {
      const ExtendedComplex x = e[k];
      const ExtendedComplex f = x * (1.0L - x) * (1.0L - x) - static_cast<long double>(z);
      const long double scale = std::max(1.0L, std::abs(x) * std::abs(x) * std::abs(x));
      CHECK(std::abs(f) <= 1e-17L * scale);
      CHECK(std::abs(ComplexValue(static_cast<double>(x.real()), static_cast<double>(x.imag())) -
                     r.roots[k]) <= 1e-14 * std::abs(r.roots[k]));
    }
  }
  const ExtendedRoots two = extended_roots(solve_cubic(2.0));
  CHECK(two[0].imag() == 0.0L);
  CHECK(std::abs(two[0] - 2.0L) < 1e-18L);
}
