#include "trisum/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>

#include "trisum/compensated.hpp"

namespace trisum {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeta2 = kPi * kPi / 6.0;

// Li_2(z) = u - u^2/4 + sum_n B_{2n} u^{2n+1} / (2n+1)!, u = -ln(1 - z),
// converges for |u| < 2 pi. Every reduced region keeps |u| <= pi/3, where
// the n-th term is about 2 (pi/3)^{2n+1} / ((2n+1) (2 pi)^{2n}): ten terms
// reach double rounding, fifteen reach long double rounding.
template <typename T>
struct DilogTraits;

template <>
struct DilogTraits<double> {
  static constexpr int kTerms = 10;
};

template <>
struct DilogTraits<long double> {
  static constexpr int kTerms = 15;
};

template <typename T>
const std::array<T, DilogTraits<T>::kTerms>& bernoulli_coefficients() {
  static const auto table = [] {
    std::array<T, DilogTraits<T>::kTerms> c{};
    for (int n = 1; n <= DilogTraits<T>::kTerms; ++n) {
      c[n - 1] = boost::math::bernoulli_b2n<T>(n) / boost::math::factorial<T>(2 * n + 1);
    }
    return c;
  }();
  return table;
}

template <typename T>
std::complex<T> bernoulli_series(std::complex<T> u) {
  const auto& c = bernoulli_coefficients<T>();
  const std::complex<T> u2 = u * u;
  std::complex<T> odd{};
  for (int n = static_cast<int>(c.size()) - 1; n >= 0; --n) {
    odd = odd * u2 + c[n];
  }
  return u - T(0.25) * u2 + u * u2 * odd;
}

// Reduced evaluation once log(1 - z) is known; log1mz is passed in so that
// callers with an exact expression for it (points on the unit circle) can
// avoid the cancellation in 1 - z.
template <typename T>
std::complex<T> dilog_reduced(std::complex<T> z, std::complex<T> log1mz) {
  using C = std::complex<T>;
  const T zeta2 = std::numbers::pi_v<T> * std::numbers::pi_v<T> / 6;
  const T nz = std::norm(z);
  if (nz < std::numeric_limits<T>::epsilon()) {
    return z * (T(1) + T(0.25) * z);
  }
  if (z.real() <= T(0.5)) {
    if (nz <= T(1)) {
      return bernoulli_series(-log1mz);
    }
    const C lz = std::log(-z);
    const C u = -std::log(T(1) - T(1) / z);
    return -bernoulli_series(u) - T(0.5) * lz * lz - zeta2;
  }
  if (nz <= T(2) * z.real()) {
    // |1 - z| <= 1: reflect through z -> 1 - z
    const C u = -std::log(z);
    return -bernoulli_series(u) + u * log1mz + zeta2;
  }
  const C lz = std::log(-z);
  const C u = -std::log(T(1) - T(1) / z);
  return -bernoulli_series(u) - T(0.5) * lz * lz - zeta2;
}

template <typename T>
T dilog_real_below_one(T x) {
  return dilog_reduced<T>({x, T(0)}, {std::log1p(-x), T(0)}).real();
}

template <typename T>
std::complex<T> dilog_impl(std::complex<T> z) {
  const T pi = std::numbers::pi_v<T>;
  const T zeta2 = pi * pi / 6;
  if (z.imag() == T(0)) {
    const T x = z.real();
    if (x == T(1)) {
      return zeta2;
    }
    if (x > T(1)) {
      // Cut: limit from below the real axis.
      const T lx = std::log(x);
      T re;
      if (x <= T(2)) {
        re = zeta2 - lx * std::log(x - T(1)) - dilog_real_below_one(T(1) - x);
      } else {
        re = 2 * zeta2 - T(0.5) * lx * lx - dilog_real_below_one(T(1) / x);
      }
      return {re, -pi * lx};
    }
    return {dilog_real_below_one(x), z.imag()};
  }
  return dilog_reduced(z, std::log(T(1) - z));
}

}  // namespace

double harmonic(std::size_t n) {
  CompensatedSum<double> sum;
  for (std::size_t k = n; k >= 1; --k) {
    sum += 1.0 / static_cast<double>(k);
  }
  return sum.value();
}

double odd_harmonic(std::size_t n) {
  CompensatedSum<double> sum;
  for (std::size_t k = n; k >= 1; --k) {
    sum += 1.0 / (2.0 * static_cast<double>(k) - 1.0);
  }
  return sum.value();
}

HarmonicCache::HarmonicCache(std::size_t max_n) {
  if (max_n > kMaxExact) {
    throw std::out_of_range("HarmonicCache: exact mode supports n <= 512");
  }
  exact_.reserve(max_n + 1);
  odd_exact_.reserve(max_n + 1);
  values_.reserve(max_n + 1);
  odd_values_.reserve(max_n + 1);

  exact_.emplace_back(0);
  odd_exact_.emplace_back(0);
  values_.push_back(0.0);
  odd_values_.push_back(0.0);

  CompensatedSum<double> h;
  CompensatedSum<double> o;
  for (std::size_t n = 1; n <= max_n; ++n) {
    exact_.push_back(exact_.back() + Rational(1, n));
    odd_exact_.push_back(odd_exact_.back() + Rational(1, 2 * n - 1));
    h += 1.0 / static_cast<double>(n);
    o += 1.0 / (2.0 * static_cast<double>(n) - 1.0);
    values_.push_back(h.value());
    odd_values_.push_back(o.value());
  }
}

ComplexValue dilog(ComplexValue z) { return dilog_impl(z); }

ExtendedComplex dilog_extended(ExtendedComplex z) { return dilog_impl(z); }

double clausen2(double theta) {
  // Reduce to [-pi, pi]; Cl_2 is odd and 2 pi periodic.
  const double t = std::remainder(theta, 2.0 * kPi);
  if (t == 0.0 || std::abs(t) == kPi) {
    return 0.0;
  }
  const ComplexValue z{std::cos(t), std::sin(t)};
  // 1 - e^{it} = 2 sin(t/2) e^{i(t - pi)/2}, taken on the principal branch.
  const double s = 2.0 * std::sin(0.5 * t);
  const ComplexValue log1mz{std::log(std::abs(s)), 0.5 * t - std::copysign(0.5 * kPi, t)};
  if (std::abs(t) < kPi / 3.0) {
    // Re z > 1/2 on the unit circle: u = -log z = -i t exactly.
    const ComplexValue u{0.0, -t};
    return (-bernoulli_series(u) + u * log1mz + kZeta2).imag();
  }
  return bernoulli_series(-log1mz).imag();
}

double catalan() {
  static const double g = clausen2(0.5 * kPi);
  return g;
}

}  // namespace trisum
