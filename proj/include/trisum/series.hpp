#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "trisum/specfun.hpp"

namespace trisum {

/// The series families, all built from the base terms
///   A_k = (H_{3k+1} - H_k) / ((3k+1) C(3k,k)),
///   B_k = (H_{2k}   - H_k) / ((3k+1) C(3k,k)).
///
///   A1: sum A_k C(k,m) / z^{k+1}          A2: sum A_k C(k+m,k) / z^{k+m+1}
///   B1: sum B_k C(k,m) / z^{k+1}          B2: sum B_k C(k+m,k) / z^{k+m+1}
///   C1: sum (-1)^k A_{2k}   z^{2k}        C2: sum (-1)^k A_{2k+1} z^{2k+1}
///   C3: sum (-1)^k B_{2k}   z^{2k}        C4: sum (-1)^k B_{2k+1} z^{2k+1}
///
/// A/B families need real |z| >= 1; C families need |z| <= 1.
enum class SeriesFamily { A1, A2, B1, B2, C1, C2, C3, C4 };

inline constexpr std::array<SeriesFamily, 8> kAllFamilies = {
    SeriesFamily::A1, SeriesFamily::A2, SeriesFamily::B1, SeriesFamily::B2,
    SeriesFamily::C1, SeriesFamily::C2, SeriesFamily::C3, SeriesFamily::C4};

inline constexpr std::array<SeriesFamily, 4> kTheoremFamilies = {
    SeriesFamily::A1, SeriesFamily::A2, SeriesFamily::B1, SeriesFamily::B2};

enum class TermKind { A, B };

std::string_view to_string(SeriesFamily family);
std::optional<SeriesFamily> parse_family(std::string_view name);

/// True for A1, A2, B1, B2 (the families with closed forms).
bool is_theorem_family(SeriesFamily family);
TermKind term_kind(SeriesFamily family);

struct TermValue {
  std::size_t k = 0;
  double value = 0.0;
  std::optional<Rational> exact;
};

/// Double-mode base term; the harmonic difference is summed directly as
/// sum 1/j (no cancellation) and 1/C(3k,k) as a product of ratios.
TermValue base_term(TermKind kind, std::size_t k);

/// Same, with the exact rational value attached.
TermValue base_term_exact(TermKind kind, std::size_t k);

inline constexpr std::size_t kDefaultMaxTerms = 10000;

struct SeriesOptions {
  std::size_t max_terms = kDefaultMaxTerms;
  /// Stop on tol * |sum| instead of tol * max(1, |sum|); for sums far below 1.
  bool relative = false;
};

struct SeriesResult {
  double value = 0.0;
  std::size_t terms = 0;     ///< base indices visited
  double tail_bound = 0.0;   ///< bound on the neglected tail at exit
};

/// Direct summation until the geometric tail bound falls below
/// tol * max(1, |sum|) (tol * |sum| with options.relative).
///
/// Throws NonConvergent when z is outside the family's domain, DomainError
/// when tol < 1e-15, and TooManyTerms when options.max_terms is exhausted.
SeriesResult sum_series(SeriesFamily family, double z, unsigned m, double tol,
                        const SeriesOptions& options = {});

}  // namespace trisum
