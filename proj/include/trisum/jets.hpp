#pragma once

#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "trisum/error.hpp"
#include "trisum/roots.hpp"
#include "trisum/specfun.hpp"

namespace trisum {

/// Truncated Taylor expansion sum_k c_k (x - center)^k, k = 0..order.
///
/// The partial-fraction coefficients are (m-r)-th derivatives divided by
/// (m-r)!, i.e. plain Taylor coefficients, so polynomial jets multiplied and
/// divided together deliver them exactly up to rounding. Scalar is
/// ComplexValue or ExtendedComplex.
template <typename Scalar>
class BasicJet {
 public:
  /// Throws DomainError on an empty coefficient list.
  BasicJet(Scalar center, std::vector<Scalar> coeffs)
      : center_(center), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
      throw DomainError("Jet: at least one coefficient is required");
    }
  }

  [[nodiscard]] Scalar center() const { return center_; }
  [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
  [[nodiscard]] std::span<const Scalar> coeffs() const { return coeffs_; }
  [[nodiscard]] Scalar operator[](std::size_t k) const { return coeffs_[k]; }

 private:
  Scalar center_;
  std::vector<Scalar> coeffs_;
};

template <typename T>
concept JetScalar = std::same_as<T, ComplexValue> || std::same_as<T, ExtendedComplex>;

using Jet = BasicJet<ComplexValue>;
using ExtendedJet = BasicJet<ExtendedComplex>;

namespace poly {
struct Identity {};  ///< x
struct OneMinus {};  ///< 1 - x
struct Shifted {     ///< x - root
  ExtendedComplex root;
};
}  // namespace poly

using PolySpec = std::variant<poly::Identity, poly::OneMinus, poly::Shifted>;

namespace detail {

template <typename Scalar>
void require_compatible(const BasicJet<Scalar>& a, const BasicJet<Scalar>& b, const char* op) {
  if (a.center() != b.center() || a.order() != b.order()) {
    throw DomainError(std::string(op) + ": jets must share center and order");
  }
}

}  // namespace detail

template <JetScalar Scalar>
BasicJet<Scalar> jet_constant(Scalar center, std::size_t order, Scalar value) {
  std::vector<Scalar> c(order + 1);
  c[0] = value;
  return BasicJet<Scalar>(center, std::move(c));
}

template <JetScalar Scalar>
BasicJet<Scalar> jet_poly(Scalar center, std::size_t order, const PolySpec& spec) {
  using Real = typename Scalar::value_type;
  std::vector<Scalar> c(order + 1);
  Scalar slope = Real(1);
  if (std::holds_alternative<poly::Identity>(spec)) {
    c[0] = center;
  } else if (std::holds_alternative<poly::OneMinus>(spec)) {
    c[0] = Real(1) - center;
    slope = Real(-1);
  } else {
    const ExtendedComplex root = std::get<poly::Shifted>(spec).root;
    c[0] = center - Scalar(static_cast<Real>(root.real()), static_cast<Real>(root.imag()));
  }
  if (order >= 1) c[1] = slope;
  return BasicJet<Scalar>(center, std::move(c));
}

// Double precision entry points; they also accept real centers and values.
inline Jet jet_constant(ComplexValue center, std::size_t order, ComplexValue value) {
  return jet_constant<ComplexValue>(center, order, value);
}

inline Jet jet_poly(ComplexValue center, std::size_t order, const PolySpec& spec) {
  return jet_poly<ComplexValue>(center, order, spec);
}

// Operands must share center and order (DomainError otherwise).
template <typename Scalar>
BasicJet<Scalar> jet_mul(const BasicJet<Scalar>& a, const BasicJet<Scalar>& b) {
  detail::require_compatible(a, b, "jet_mul");
  const std::size_t n = a.order();
  std::vector<Scalar> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Scalar s{};
    for (std::size_t i = 0; i <= k; ++i) {
      s += a[i] * b[k - i];
    }
    c[k] = s;
  }
  return BasicJet<Scalar>(a.center(), std::move(c));
}

template <typename Scalar>
BasicJet<Scalar> jet_pow(const BasicJet<Scalar>& a, unsigned p) {
  using Real = typename Scalar::value_type;
  BasicJet<Scalar> result = jet_constant(a.center(), a.order(), Scalar(Real(1)));
  BasicJet<Scalar> base = a;
  while (p > 0) {
    if (p & 1u) result = jet_mul(result, base);
    p >>= 1u;
    if (p > 0) base = jet_mul(base, base);
  }
  return result;
}

/// Throws SingularDivision when |b_0| <= 1e-300.
template <typename Scalar>
BasicJet<Scalar> jet_div(const BasicJet<Scalar>& a, const BasicJet<Scalar>& b) {
  detail::require_compatible(a, b, "jet_div");
  if (std::abs(b[0]) <= 1e-300) {
    throw SingularDivision("jet_div: divisor has a vanishing constant term");
  }
  const std::size_t n = a.order();
  std::vector<Scalar> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Scalar s = a[k];
    for (std::size_t i = 1; i <= k; ++i) {
      s -= b[i] * c[k - i];
    }
    c[k] = s / b[0];
  }
  return BasicJet<Scalar>(a.center(), std::move(c));
}

template <typename Scalar>
BasicJet<Scalar> operator*(const BasicJet<Scalar>& a, const BasicJet<Scalar>& b) {
  return jet_mul(a, b);
}

template <typename Scalar>
BasicJet<Scalar> operator/(const BasicJet<Scalar>& a, const BasicJet<Scalar>& b) {
  return jet_div(a, b);
}

/// a_0..a_m for the root roots.roots[which] (0-based), the coefficients of
/// the partial fraction expansion of x^m (1-x)^{2m} / (x(1-x)^2 - z)^{m+1}.
/// Computed in long double from extended_roots and rounded.
std::vector<ComplexValue> coeff_a(unsigned m, const CubicRoots& roots, std::size_t which);

/// b_0..b_m: as coeff_a with numerator 1.
std::vector<ComplexValue> coeff_b(unsigned m, const CubicRoots& roots, std::size_t which);

/// Long double versions on roots polished by extended_roots.
std::vector<ExtendedComplex> coeff_a_extended(unsigned m, const ExtendedRoots& roots,
                                              std::size_t which);
std::vector<ExtendedComplex> coeff_b_extended(unsigned m, const ExtendedRoots& roots,
                                              std::size_t which);

}  // namespace trisum
