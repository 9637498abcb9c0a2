#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "trisum/expr.hpp"
#include "trisum/roots.hpp"
#include "trisum/series.hpp"
#include "trisum/specfun.hpp"

namespace trisum {

/// C_r(lambda) = int_0^1 ln x / (x - lambda)^{r+1} dx for lambda off [0, 1].
///
///   C_0(lambda) = Li_2(1/lambda)
///   C_r(lambda) = (-1)^r/r sum_{p=1}^{r-1} (1/(p lambda^{r-p})) ((lambda-1)^{-p} - lambda^{-p})
///                 - (-1)^r/(r lambda^r) ln((lambda-1)/lambda)
///
/// Principal logarithm throughout. Throws DomainError for lambda in [0, 1].
ComplexValue C_of(unsigned r, ComplexValue lambda);

/// int_0^1 ln(x/(1-x)) / (x - lambda)^{r+1} dx = C_r(lambda) + (-1)^r C_r(1 - lambda).
ComplexValue C_mirror(unsigned r, ComplexValue lambda);

struct Contribution {
  std::size_t root = 0;   ///< index into CubicRoots::roots
  unsigned order = 0;     ///< j in a_j / b_j
  ComplexValue coefficient;
  ComplexValue c_factor;  ///< C_j or its mirror
  ComplexValue product;
};

struct ClosedFormBreakdown {
  SeriesFamily family = SeriesFamily::A1;
  double z = 0.0;
  unsigned m = 0;
  double total = 0.0;
  /// |Im| of the signed grand sum before it is discarded; conjugate roots
  /// make it vanish up to rounding.
  double imag_residual = 0.0;
  CubicRoots roots;
  std::vector<Contribution> contributions;
};

/// Closed form of the A1/A2/B1/B2 series at real z with |z| >= 1:
///   A1: (-1)^m sum_k sum_j a_j(z_k) C_j(z_k)
///   A2: (-1)^m sum_k sum_j b_j(z_k) C_j(z_k)
///   B1/B2: as A1/A2 with C_mirror in place of C_j.
/// Throws DomainError (|z| < 1 or a C family) and RepeatedRoots.
ClosedFormBreakdown closed_sum(SeriesFamily family, double z, unsigned m);

/// A printed evaluation: scale * series(family, z, m) == value.
struct PaperConstant {
  std::string id;
  std::string description;
  SeriesFamily family;
  double z;
  unsigned m;
  double scale;
  Expr value;
};

const std::vector<PaperConstant>& paper_constants();

/// Throws UnknownConstant.
const PaperConstant& find_paper_constant(std::string_view id);

/// Value of the registry expression for id. Throws UnknownConstant.
double paper_constant(std::string_view id);

}  // namespace trisum
