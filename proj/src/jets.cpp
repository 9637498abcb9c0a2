#include "trisum/jets.hpp"

namespace trisum {

namespace {

// x^m (1-x)^{2m} / prod_{k != which} (x - z_k)^{m+1}, expanded about
// lambda = z_which. The factor (x - lambda)^{m+1} of (x(1-x)^2 - z)^{m+1}
// cancels analytically because the cubic is monic.
std::vector<ExtendedComplex> reduced_coefficients(unsigned m, const ExtendedRoots& roots,
                                                  std::size_t which, bool with_numerator) {
  if (which >= roots.size()) {
    throw DomainError("root index must be 0, 1 or 2");
  }
  const ExtendedComplex lambda = roots[which];
  const std::size_t order = m;
  const ExtendedComplex one(1.0L);

  ExtendedJet value = jet_constant(lambda, order, one);
  if (with_numerator) {
    value = jet_pow(jet_poly(lambda, order, poly::Identity{}), m) *
            jet_pow(jet_poly(lambda, order, poly::OneMinus{}), 2 * m);
  }
  ExtendedJet denominator = jet_constant(lambda, order, one);
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (k == which) continue;
    denominator = denominator * jet_poly(lambda, order, poly::Shifted{roots[k]});
  }
  value = value / jet_pow(denominator, m + 1);

  // a_r is the Taylor coefficient of order m - r.
  std::vector<ExtendedComplex> out(m + 1);
  for (unsigned r = 0; r <= m; ++r) {
    out[r] = value[m - r];
  }
  return out;
}

std::vector<ComplexValue> rounded(const std::vector<ExtendedComplex>& v) {
  std::vector<ComplexValue> out;
  out.reserve(v.size());
  for (const auto& c : v) {
    out.emplace_back(static_cast<double>(c.real()), static_cast<double>(c.imag()));
  }
  return out;
}

}  // namespace

std::vector<ExtendedComplex> coeff_a_extended(unsigned m, const ExtendedRoots& roots,
                                              std::size_t which) {
  return reduced_coefficients(m, roots, which, true);
}

std::vector<ExtendedComplex> coeff_b_extended(unsigned m, const ExtendedRoots& roots,
                                              std::size_t which) {
  return reduced_coefficients(m, roots, which, false);
}

std::vector<ComplexValue> coeff_a(unsigned m, const CubicRoots& roots, std::size_t which) {
  return rounded(coeff_a_extended(m, extended_roots(roots), which));
}

std::vector<ComplexValue> coeff_b(unsigned m, const CubicRoots& roots, std::size_t which) {
  return rounded(coeff_b_extended(m, extended_roots(roots), which));
}

}  // namespace trisum
