#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace trisum {

using ComplexValue = std::complex<double>;
using ExtendedComplex = std::complex<long double>;
using Rational = boost::multiprecision::cpp_rational;

/// H_n = 1 + 1/2 + ... + 1/n, compensated summation. H_0 = 0.
double harmonic(std::size_t n);

/// O_n = 1 + 1/3 + ... + 1/(2n-1). O_0 = 0.
double odd_harmonic(std::size_t n);

/// H_n and O_n tabulated up to a fixed bound, both as exact rationals and
/// as compensated doubles. The exact table anchors the double one in tests.
class HarmonicCache {
 public:
  static constexpr std::size_t kMaxExact = 512;

  /// Throws std::out_of_range if max_n exceeds kMaxExact.
  explicit HarmonicCache(std::size_t max_n);

  [[nodiscard]] std::size_t max_n() const { return values_.size() - 1; }

  [[nodiscard]] const Rational& exact(std::size_t n) const { return exact_.at(n); }
  [[nodiscard]] const Rational& odd_exact(std::size_t n) const { return odd_exact_.at(n); }
  [[nodiscard]] double value(std::size_t n) const { return values_.at(n); }
  [[nodiscard]] double odd_value(std::size_t n) const { return odd_values_.at(n); }

 private:
  std::vector<Rational> exact_;
  std::vector<Rational> odd_exact_;
  std::vector<double> values_;
  std::vector<double> odd_values_;
};

/// Principal-branch dilogarithm Li_2(z) with the cut on [1, inf).
///
/// Real arguments x > 1 on the cut return the limit from below,
/// Im Li_2(x) = -pi ln x, which is what the principal logarithm in
/// -log(1 - z) produces for z = x - i0.
ComplexValue dilog(ComplexValue z);

/// dilog in long double, for closed forms that cancel heavily.
ExtendedComplex dilog_extended(ExtendedComplex z);

/// Clausen function Cl_2(theta) = sum sin(n theta)/n^2 = Im Li_2(e^{i theta}).
double clausen2(double theta);

/// Catalan's constant G = Cl_2(pi/2), evaluated once.
double catalan();

}  // namespace trisum
