#include "trisum/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "trisum/compensated.hpp"
#include "trisum/error.hpp"

namespace trisum {

namespace {

using boost::multiprecision::cpp_int;

constexpr double kTailInflation = 1.1;
constexpr double kBinomialGrowth = 27.0 / 4.0;

double harmonic_difference(TermKind kind, std::size_t k) {
  // H_{3k+1} - H_k or H_{2k} - H_k as a sum of positive reciprocals.
  const std::size_t hi = kind == TermKind::A ? 3 * k + 1 : 2 * k;
  CompensatedSum<double> sum;
  for (std::size_t j = hi; j > k; --j) {
    sum += 1.0 / static_cast<double>(j);
  }
  return sum.value();
}

// C(3(k+1), k+1) / C(3k, k)
double binomial_ratio(std::size_t k) {
  const double kk = static_cast<double>(k);
  return (3 * kk + 1) * (3 * kk + 2) * (3 * kk + 3) / ((kk + 1) * (2 * kk + 1) * (2 * kk + 2));
}

double binomial(double n, unsigned m) {
  // C(n, m) for integer n >= 0; zero when n < m.
  if (n < m) return 0.0;
  double c = 1.0;
  for (unsigned i = 1; i <= m; ++i) {
    c = c * (n - m + i) / i;
  }
  return c;
}

Rational exact_base_term(TermKind kind, std::size_t k) {
  const std::size_t hi = kind == TermKind::A ? 3 * k + 1 : 2 * k;
  Rational diff = 0;
  for (std::size_t j = k + 1; j <= hi; ++j) {
    diff += Rational(1, j);
  }
  cpp_int binom = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    binom = binom * (2 * k + i) / i;
  }
  return diff / Rational(cpp_int(3 * k + 1) * binom);
}

}  // namespace

std::string_view to_string(SeriesFamily family) {
  switch (family) {
    case SeriesFamily::A1: return "A1";
    case SeriesFamily::A2: return "A2";
    case SeriesFamily::B1: return "B1";
    case SeriesFamily::B2: return "B2";
    case SeriesFamily::C1: return "C1";
    case SeriesFamily::C2: return "C2";
    case SeriesFamily::C3: return "C3";
    case SeriesFamily::C4: return "C4";
  }
  return "?";
}

std::optional<SeriesFamily> parse_family(std::string_view name) {
  for (auto f : kAllFamilies) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

bool is_theorem_family(SeriesFamily family) {
  switch (family) {
    case SeriesFamily::A1:
    case SeriesFamily::A2:
    case SeriesFamily::B1:
    case SeriesFamily::B2:
      return true;
    default:
      return false;
  }
}

TermKind term_kind(SeriesFamily family) {
  switch (family) {
    case SeriesFamily::A1:
    case SeriesFamily::A2:
    case SeriesFamily::C1:
    case SeriesFamily::C2:
      return TermKind::A;
    default:
      return TermKind::B;
  }
}

TermValue base_term(TermKind kind, std::size_t k) {
  double inverse_binomial = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    inverse_binomial *= static_cast<double>(i) / static_cast<double>(2 * k + i);
  }
  const double value =
      harmonic_difference(kind, k) * inverse_binomial / static_cast<double>(3 * k + 1);
  return {k, value, std::nullopt};
}

TermValue base_term_exact(TermKind kind, std::size_t k) {
  TermValue t = base_term(kind, k);
  t.exact = exact_base_term(kind, k);
  return t;
}

SeriesResult sum_series(SeriesFamily family, double z, unsigned m, double tol,
                        const SeriesOptions& options) {
  if (!(tol >= 1e-15)) {
    throw DomainError("sum_series: tol must be >= 1e-15");
  }
  const bool theorem = is_theorem_family(family);
  if (!std::isfinite(z) || (theorem && std::abs(z) < 1.0) || (!theorem && std::abs(z) > 1.0)) {
    throw NonConvergent(std::string("sum_series: family ") + std::string(to_string(family)) +
                        (theorem ? " requires |z| >= 1" : " requires |z| <= 1") +
                        " (got z = " + std::to_string(z) + ")");
  }
  if (!theorem && m != 0) {
    throw DomainError("sum_series: alternating families take no order m");
  }

  const TermKind kind = term_kind(family);
  const bool first_order = family == SeriesFamily::A1 || family == SeriesFamily::B1;
  // Parity of the base index kept by the alternating families.
  const std::size_t parity =
      (family == SeriesFamily::C2 || family == SeriesFamily::C4) ? 1 : 0;

  // running = 1/(C(3n,n) z^{n+1}) for A/B, z^n / C(3n,n) for C.
  double running = theorem ? 1.0 / z : 1.0;
  const double step = theorem ? 1.0 / z : z;
  const double extra = theorem && !first_order ? std::pow(z, -static_cast<double>(m)) : 1.0;
  const double asymptotic_ratio =
      theorem ? 1.0 / (kBinomialGrowth * std::abs(z)) : z * z / (kBinomialGrowth * kBinomialGrowth);

  CompensatedSum<double> sum;
  double previous = 0.0;
  SeriesResult out;

  for (std::size_t n = 0; n < options.max_terms; ++n) {
    if (n > 0) {
      running *= step / binomial_ratio(n - 1);
    }
    if (!theorem && n % 2 != parity) continue;

    const double base = harmonic_difference(kind, n) / static_cast<double>(3 * n + 1);
    double term;
    if (theorem) {
      const double weight = first_order ? binomial(static_cast<double>(n), m)
                                        : binomial(static_cast<double>(n + m), m);
      term = base * running * weight * extra;
    } else {
      const double sign = (n / 2) % 2 == 0 ? 1.0 : -1.0;
      term = sign * base * running;
    }
    sum += term;
    out.terms = n + 1;

    if (!theorem && z == 0.0) {
      out.value = sum.value();
      return out;
    }
    if (term != 0.0 && previous != 0.0 && n > m + 2) {
      const double rho =
          std::max(kTailInflation * std::abs(term / previous), asymptotic_ratio);
      if (rho < 1.0) {
        const double bound = std::abs(term) * rho / (1.0 - rho);
        const double s = sum.value();
        const double scale = options.relative ? std::abs(s) : std::max(1.0, std::abs(s));
        if (bound <= tol * scale) {
          out.value = s;
          out.tail_bound = bound;
          return out;
        }
      }
    }
    previous = term;
  }
  throw TooManyTerms("sum_series: " + std::to_string(options.max_terms) +
                     " terms did not reach the requested tolerance");
}

}  // namespace trisum
