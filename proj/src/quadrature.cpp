#include "trisum/quadrature.hpp"

#include <numbers>

namespace trisum {

namespace quad {

namespace {

Node make_node(double t) {
  // x = 1/(1 + e^{-2s}), s = pi/2 sinh t; both x and 1 - x from e = e^{-2|s|}.
  const double s = 0.5 * std::numbers::pi * std::sinh(t);
  const double e = std::exp(-2.0 * std::abs(s));
  const double big = 1.0 / (1.0 + e);
  const double small = e / (1.0 + e);
  const double weight = std::numbers::pi * std::cosh(t) * e / ((1.0 + e) * (1.0 + e));
  return s >= 0.0 ? Node{big, small, weight} : Node{small, big, weight};
}

std::vector<std::vector<Node>> build_levels() {
  std::vector<std::vector<Node>> levels(kMaxLevel + 1);
  for (int k = -static_cast<int>(kMaxAbscissa); k <= static_cast<int>(kMaxAbscissa); ++k) {
    levels[0].push_back(make_node(k));
  }
  for (int level = 1; level <= kMaxLevel; ++level) {
    const double h = std::ldexp(1.0, -level);
    for (long j = 1;; j += 2) {
      const double t = j * h;
      if (t > kMaxAbscissa) break;
      levels[level].push_back(make_node(t));
      levels[level].push_back(make_node(-t));
    }
  }
  return levels;
}

}  // namespace

const std::vector<std::vector<Node>>& node_levels() {
  static const std::vector<std::vector<Node>> levels = build_levels();
  return levels;
}

}  // namespace quad

std::string to_string(Kernel kernel) {
  return kernel == Kernel::LnX ? "lnx" : "lnratio";
}

std::string to_string(Variant variant) {
  switch (variant) {
    case Variant::Thm1: return "thm1";
    case Variant::Thm2: return "thm2";
    case Variant::Concluding1: return "c1";
    case Variant::Concluding2: return "c2";
    case Variant::Concluding3: return "c3";
    case Variant::Concluding4: return "c4";
  }
  return "?";
}

QuadResult<double> integrate(const IntegrandSpec& spec, double tol) {
  if (!(tol >= 1e-14)) {
    throw DomainError("integrate: tol must be >= 1e-14");
  }
  if (!std::isfinite(spec.z)) {
    throw DomainError("integrate: z must be finite");
  }
  const bool theorem = spec.variant == Variant::Thm1 || spec.variant == Variant::Thm2;
  if (theorem && spec.z >= 0.0 && spec.z <= 4.0 / 27.0) {
    // x(1-x)^2 sweeps [0, 4/27] on [0, 1]
    throw DomainError("integrate: x(1-x)^2 - z vanishes on [0,1] for z in [0, 4/27]");
  }
  if (!theorem) {
    const bool wants_lnx =
        spec.variant == Variant::Concluding1 || spec.variant == Variant::Concluding2;
    if (wants_lnx != (spec.kernel == Kernel::LnX)) {
      throw DomainError("integrate: kernel " + to_string(spec.kernel) +
                        " does not match variant " + to_string(spec.variant));
    }
  }

  const double z = spec.z;
  const int power = static_cast<int>(spec.m) + 1;
  const auto kernel = [lnratio = spec.kernel == Kernel::LnRatio](double x, double y) {
    return lnratio ? std::log(x) - std::log(y) : std::log(x);
  };

  switch (spec.variant) {
    case Variant::Thm1:
      return tanh_sinh(
          [&](double x, double y) {
            const double q = x * y * y;
            return std::pow(q, static_cast<int>(spec.m)) * kernel(x, y) / std::pow(q - z, power);
          },
          tol);
    case Variant::Thm2:
      return tanh_sinh(
          [&](double x, double y) {
            const double q = x * y * y;
            return kernel(x, y) / std::pow(q - z, power);
          },
          tol);
    case Variant::Concluding1:
    case Variant::Concluding3:
      return tanh_sinh(
          [&](double x, double y) {
            const double zq = z * x * y * y;
            return kernel(x, y) / (1.0 + zq * zq);
          },
          tol);
    case Variant::Concluding2:
    case Variant::Concluding4:
      return tanh_sinh(
          [&](double x, double y) {
            const double q = x * y * y;
            return q * kernel(x, y) / (1.0 + z * z * q * q);
          },
          tol);
  }
  throw DomainError("integrate: unknown variant");
}

IntegrandSpec family_integrand(SeriesFamily family, double z, unsigned m) {
  switch (family) {
    case SeriesFamily::A1: return {Kernel::LnX, Variant::Thm1, z, m};
    case SeriesFamily::A2: return {Kernel::LnX, Variant::Thm2, z, m};
    case SeriesFamily::B1: return {Kernel::LnRatio, Variant::Thm1, z, m};
    case SeriesFamily::B2: return {Kernel::LnRatio, Variant::Thm2, z, m};
    case SeriesFamily::C1: return {Kernel::LnX, Variant::Concluding1, z, 0};
    case SeriesFamily::C2: return {Kernel::LnX, Variant::Concluding2, z, 0};
    case SeriesFamily::C3: return {Kernel::LnRatio, Variant::Concluding3, z, 0};
    case SeriesFamily::C4: return {Kernel::LnRatio, Variant::Concluding4, z, 0};
  }
  throw DomainError("family_integrand: unknown family");
}

double family_quadrature(SeriesFamily family, double z, unsigned m, double tol) {
  const bool theorem = is_theorem_family(family);
  if (!std::isfinite(z) || (theorem && std::abs(z) < 1.0) || (!theorem && std::abs(z) > 1.0)) {
    throw DomainError(std::string("family_quadrature: family ") + std::string(to_string(family)) +
                      (theorem ? " requires |z| >= 1" : " requires |z| <= 1"));
  }
  if (!theorem && m != 0) {
    throw DomainError("family_quadrature: alternating families take no order m");
  }
  const double raw = integrate(family_integrand(family, z, m), tol).value;
  switch (family) {
    case SeriesFamily::C1:
    case SeriesFamily::C3:
      return -raw;
    case SeriesFamily::C2:
    case SeriesFamily::C4:
      return -z * raw;
    default:
      return m % 2 == 0 ? raw : -raw;
  }
}

double beta_term_integral(unsigned k) {
  if (k > 30) {
    throw DomainError("beta_term_integral: k must be in [0, 30]");
  }
  const int kk = static_cast<int>(k);
  return tanh_sinh(
             [kk](double x, double y) {
               return std::pow(x, kk) * std::pow(y, 2 * kk) * std::log(x);
             },
             1e-14)
      .value;
}

}  // namespace trisum
