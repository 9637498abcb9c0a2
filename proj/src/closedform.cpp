#include "trisum/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <type_traits>

#include "trisum/compensated.hpp"
#include "trisum/error.hpp"
#include "trisum/jets.hpp"

namespace trisum {

namespace {

bool on_unit_interval(ComplexValue lambda) {
  return lambda.imag() == 0.0 && lambda.real() >= 0.0 && lambda.real() <= 1.0;
}

std::vector<PaperConstant> build_registry() {
  const auto N = [](long long a, long long b = 1) { return Expr::number(a, b); };
  const Expr pi = Expr::symbol(Symbol::Pi);
  const Expr ln2 = Expr::symbol(Symbol::Ln2);
  const Expr G = Expr::symbol(Symbol::Catalan);
  const Expr s7 = Expr::symbol(Symbol::Sqrt7);
  const Expr at = Expr::symbol(Symbol::ArctanSqrt7Over5);
  const Expr pi2 = pow(pi, 2);
  const Expr ln22 = pow(ln2, 2);

  using F = SeriesFamily;
  std::vector<PaperConstant> r;

  r.push_back({"grfgv7c", "sum A_k / 2^{k+1}", F::A1, 2.0, 0, 1.0,
               pi2 / N(48) - ln22 / N(10) + N(2, 5) * G});
  r.push_back({"fx7c65q", "sum A_k (-1)^k / 4^{k+1} (Re/Im Li2 form)", F::A1, -4.0, 0, -1.0,
               pi2 / N(96) + N(1, 8) * Expr::symbol(Symbol::ReLi2W) +
                   N(5) * s7 / N(56) * Expr::symbol(Symbol::ImLi2W)});
  r.push_back({"z7wnv9j", "sum A_k (-1)^k / 4^{k+1} (quotient form)", F::A1, -4.0, 0, -1.0,
               // (4/sqrt7) Im(Li2(v)/(5 + i sqrt7)) = (4/sqrt7)(5 Im Li2(v) - sqrt7 Re Li2(v))/32
               pi2 / N(96) - N(4) / s7 *
                                 (N(5) * Expr::symbol(Symbol::ImLi2V) -
                                  s7 * Expr::symbol(Symbol::ReLi2V)) /
                                 N(32)});
  r.push_back({"a1-z2-m1", "sum A_k k / 2^{k+1}", F::A1, 2.0, 1, 1.0,
               N(3) * pi / N(100) - N(3) * pi2 / N(400) + N(3, 25) * ln2 + N(9, 250) * ln22 -
                   N(13, 125) * G});
  r.push_back({"a1-z2-m2", "sum A_k k(k-1) / 2^{k+2}", F::A1, 2.0, 2, 1.0,
               N(3, 100) - N(29) * pi / N(1250) + N(149) * pi2 / N(30000) - N(58, 625) * ln2 -
                   N(149, 6250) * ln22 + N(243, 3125) * G});
  r.push_back({"a1-z2-m3", "sum A_k C(k,3) / 2^{k+1}", F::A1, 2.0, 3, 1.0,
               -N(13, 375) + N(1529) * pi / N(75000) - N(577) * pi2 / N(150000) +
                   N(752, 9375) * ln2 + N(577, 31250) * ln22 - N(1903, 31250) * G});
  r.push_back({"a2-z2-m1", "sum A_k (k+1) / 2^{k+2}", F::A2, 2.0, 1, 1.0,
               N(3) * pi / N(200) + pi2 / N(150) + N(3, 50) * ln2 - N(4, 125) * ln22 +
                   N(37) * G / N(250)});
  r.push_back({"a2-z2-m2", "sum A_k (k+1)(k+2) / 2^{k+4}", F::A2, 2.0, 2, 1.0,
               N(3, 400) + N(23) * pi / N(2500) + N(27) * pi2 / N(10000) + N(23, 625) * ln2 -
                   N(81, 6250) * ln22 + N(843) * G / N(12500)});
  r.push_back({"a2-z2-m3", "sum A_k C(k+3,k) / 2^{k+4}", F::A2, 2.0, 3, 1.0,
               N(83, 12000) + N(3059) * pi / N(600000) + N(11) * pi2 / N(9375) +
                   N(1517, 75000) * ln2 - N(88, 15625) * ln22 + N(8137) * G / N(250000)});
  r.push_back({"xuvoy6t", "sum B_k / 2^{k+1}", F::B1, 2.0, 0, 1.0,
               pi * ln2 / N(20) - N(3, 40) * ln22 - pi2 / N(160)});
  r.push_back({"qwvbjrj", "sum B_k (-1)^k / 4^{k+1}", F::B1, -4.0, 0, -1.0,
               N(3, 64) * ln22 + N(1, 16) * pow(at, 2) - N(5) * s7 / N(112) * ln2 * at});
  r.push_back({"b1-z2-m1", "sum B_k k / 2^{k+1}", F::B1, 2.0, 1, 1.0,
               -pi / N(200) + N(9) * pi2 / N(4000) + N(3, 100) * ln2 + N(27, 1000) * ln22 -
                   N(13, 1000) * pi * ln2});
  r.push_back({"b1-z2-m2", "sum B_k k(k-1) / 2^{k+2}", F::B1, 2.0, 2, 1.0,
               N(2) * pi / N(625) - N(149) * pi2 / N(100000) - N(51, 5000) * ln2 -
                   N(447, 25000) * ln22 + N(243, 25000) * pi * ln2});
  r.push_back({"b1-zm4-m1", "sum B_k (-1)^k k / 4^{k+1}", F::B1, -4.0, 1, -1.0,
               N(3, 448) * ln2 - N(9, 512) * ln22 - N(3, 128) * pow(at, 2) -
                   (N(1, 224) - N(89, 6272) * ln2) * s7 * at});
  r.push_back({"b1-zm4-m2", "sum B_k (-1)^k k(k-1) / 4^{k+1}", F::B1, -4.0, 2, -2.0,
               -N(219, 25088) * ln2 + N(93, 4096) * ln22 + N(31, 1024) * pow(at, 2) +
                   (N(1, 256) - N(6651, 351232) * ln2) * s7 * at});
  r.push_back({"b2-z2-m1", "sum B_k (k+1) / 2^{k+2}", F::B2, 2.0, 1, 1.0,
               -pi / N(400) + N(37, 2000) * pi * ln2 - pi2 / N(500) + N(3, 200) * ln2 -
                   N(3, 125) * ln22});
  r.push_back({"b2-z2-m2", "sum B_k C(k+2,k) / 2^{k+3}", F::B2, 2.0, 2, 1.0,
               -N(17) * pi / N(10000) + N(843, 100000) * pi * ln2 - N(81) * pi2 / N(100000) +
                   N(249, 20000) * ln2 - N(243, 25000) * ln22});
  return r;
}

}  // namespace

namespace {

template <typename T>
T C_impl(unsigned r, T lambda) {
  using Real = typename T::value_type;
  const T one(Real(1));
  if (r == 0) {
    if constexpr (std::is_same_v<T, ExtendedComplex>) {
      return dilog_extended(one / lambda);
    } else {
      return dilog(one / lambda);
    }
  }
  const Real sign = r % 2 == 0 ? Real(1) : Real(-1);
  const Real rr = static_cast<Real>(r);
  CompensatedSum<T> sum;
  for (unsigned p = 1; p < r; ++p) {
    const T diff = one / std::pow(lambda - one, static_cast<int>(p)) -
                   one / std::pow(lambda, static_cast<int>(p));
    sum += diff / (static_cast<Real>(p) * std::pow(lambda, static_cast<int>(r - p)));
  }
  return sign / rr * sum.value() -
         sign / (rr * std::pow(lambda, static_cast<int>(r))) * std::log((lambda - one) / lambda);
}

template <typename T>
T C_mirror_impl(unsigned r, T lambda) {
  using Real = typename T::value_type;
  const Real sign = r % 2 == 0 ? Real(1) : Real(-1);
  return C_impl(r, lambda) + sign * C_impl(r, T(Real(1)) - lambda);
}

void require_off_interval(ComplexValue lambda) {
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag()) || on_unit_interval(lambda)) {
    throw DomainError("C_of: lambda must lie off the real interval [0, 1]");
  }
}

ComplexValue narrow(ExtendedComplex v) {
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

}  // namespace

ComplexValue C_of(unsigned r, ComplexValue lambda) {
  require_off_interval(lambda);
  return C_impl(r, lambda);
}

ComplexValue C_mirror(unsigned r, ComplexValue lambda) {
  require_off_interval(lambda);
  return C_mirror_impl(r, lambda);
}

// The contributions cancel heavily for m > 0 (sums of order 1e-8 built from
// terms of order 1e-2), so the whole evaluation runs in long double on
// Newton-polished roots and only the reported pieces are rounded.
ClosedFormBreakdown closed_sum(SeriesFamily family, double z, unsigned m) {
  if (!is_theorem_family(family)) {
    throw DomainError("closed_sum: no closed form for family " + std::string(to_string(family)));
  }
  if (!std::isfinite(z) || std::abs(z) < 1.0) {
    throw DomainError("closed_sum: requires real z with |z| >= 1 (got z = " + std::to_string(z) +
                      ")");
  }

  ClosedFormBreakdown out;
  out.family = family;
  out.z = z;
  out.m = m;
  out.roots = solve_cubic(z);
  const ExtendedRoots roots = extended_roots(out.roots);

  const bool numerator = family == SeriesFamily::A1 || family == SeriesFamily::B1;
  const bool mirrored = family == SeriesFamily::B1 || family == SeriesFamily::B2;

  CompensatedSum<ExtendedComplex> sum;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const ExtendedComplex lambda = roots[k];
    require_off_interval(out.roots.roots[k]);
    const auto coeffs = numerator ? coeff_a_extended(m, roots, k) : coeff_b_extended(m, roots, k);
    for (unsigned j = 0; j <= m; ++j) {
      const ExtendedComplex c = mirrored ? C_mirror_impl(j, lambda) : C_impl(j, lambda);
      const ExtendedComplex product = coeffs[j] * c;
      out.contributions.push_back({k, j, narrow(coeffs[j]), narrow(c), narrow(product)});
      sum += product;
    }
  }
  const ExtendedComplex total = (m % 2 == 0 ? 1.0L : -1.0L) * sum.value();
  out.total = static_cast<double>(total.real());
  out.imag_residual = static_cast<double>(std::abs(total.imag()));
  return out;
}

const std::vector<PaperConstant>& paper_constants() {
  static const std::vector<PaperConstant> registry = build_registry();
  return registry;
}

const PaperConstant& find_paper_constant(std::string_view id) {
  const auto& registry = paper_constants();
  const auto it = std::find_if(registry.begin(), registry.end(),
                               [id](const PaperConstant& c) { return c.id == id; });
  if (it == registry.end()) {
    throw UnknownConstant("unknown constant id: " + std::string(id));
  }
  return *it;
}

double paper_constant(std::string_view id) { return find_paper_constant(id).value.evaluate(); }

}  // namespace trisum
