#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "trisum/compensated.hpp"
#include "trisum/error.hpp"
#include "trisum/series.hpp"

namespace trisum {

/// Tanh-sinh (double-exponential) quadrature on (0, 1).
///
/// The substitution x = (1 + tanh(pi/2 sinh t)) / 2 pushes logarithmic
/// endpoint singularities into tails that decay like exp(-pi/2 e^|t|), so
/// the trapezoid rule in t converges near machine precision without
/// integrand-specific splitting. Integrands receive both x and 1 - x; the
/// latter is tabulated directly so ln(1 - x) keeps full relative accuracy
/// near x = 1.
namespace quad {

inline constexpr int kMaxLevel = 12;
inline constexpr int kMinLevel = 3;
inline constexpr double kMaxAbscissa = 4.5;

struct Node {
  double x;
  double one_minus_x;
  double weight;  ///< dx/dt, without the step factor
};

/// Nodes added at each level: level 0 holds t = 0, +-1, ..., level l >= 1
/// holds t = odd multiples of 2^-l. Built once, immutable afterwards.
const std::vector<std::vector<Node>>& node_levels();

}  // namespace quad

template <typename T>
struct QuadResult {
  T value{};
  double error_estimate = 0.0;  ///< |I_L - I_{L-1}| at exit
  int level = 0;
  std::size_t evaluations = 0;
  std::vector<double> level_errors;  ///< error estimate after each level >= 1
};

/// Integrates f(x, 1 - x) over (0, 1). Refinement stops once the difference
/// between successive levels is below tol times the L1 scale (the integral
/// of |f|). Throws NoConvergence if level kMaxLevel is reached first.
template <typename F>
auto tanh_sinh(F&& f, double tol) {
  using T = std::decay_t<decltype(f(0.5, 0.5))>;
  QuadResult<T> out;
  CompensatedSum<T> sum;
  CompensatedSum<double> l1;
  const auto& levels = quad::node_levels();

  T previous{};
  for (int level = 0; level <= quad::kMaxLevel; ++level) {
    for (const auto& node : levels[level]) {
      const T v = f(node.x, node.one_minus_x) * node.weight;
      sum += v;
      l1 += std::abs(v);
    }
    out.evaluations += levels[level].size();
    const double h = std::ldexp(1.0, -level);
    const T current = sum.value() * h;
    if (level > 0) {
      const double err = std::abs(current - previous);
      out.level_errors.push_back(err);
      const double scale = l1.value() * h;
      if (!std::isfinite(err)) {
        break;
      }
      if (level >= quad::kMinLevel && err <= tol * scale) {
        out.value = current;
        out.error_estimate = err;
        out.level = level;
        return out;
      }
    }
    previous = current;
  }
  throw NoConvergence("tanh_sinh: error estimate stagnated above tolerance");
}

enum class Kernel { LnX, LnRatio };

enum class Variant { Thm1, Thm2, Concluding1, Concluding2, Concluding3, Concluding4 };

/// With q = x(1-x)^2 and K the kernel (ln x or ln(x/(1-x))):
///   Thm1: q^m K / (q - z)^{m+1}       Thm2: K / (q - z)^{m+1}
///   Concluding1/3: K / (1 + z^2 q^2)  Concluding2/4: q K / (1 + z^2 q^2)
/// Concluding1/2 take ln x, Concluding3/4 take ln(x/(1-x)).
struct IntegrandSpec {
  Kernel kernel = Kernel::LnX;
  Variant variant = Variant::Thm1;
  double z = 0.0;
  unsigned m = 0;
};

std::string to_string(Kernel kernel);
std::string to_string(Variant variant);

/// Raw integral of the selected integrand over (0, 1).
/// Throws DomainError for inadmissible specs (pole on [0, 1], kernel that
/// does not match a concluding variant, tol < 1e-14).
QuadResult<double> integrate(const IntegrandSpec& spec, double tol);

/// The integral representation of a series family, signed and scaled so that
/// it equals sum_series(family, z, m) directly.
double family_quadrature(SeriesFamily family, double z, unsigned m, double tol);

/// IntegrandSpec matching a family.
IntegrandSpec family_integrand(SeriesFamily family, double z, unsigned m);

/// Quadrature of int_0^1 x^k (1-x)^{2k} ln x dx for 0 <= k <= 30.
double beta_term_integral(unsigned k);

}  // namespace trisum
