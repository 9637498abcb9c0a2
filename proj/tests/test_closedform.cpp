#include <cmath>
#include <numbers>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "trisum/closedform.hpp"
#include "trisum/error.hpp"
#include "trisum/expr.hpp"

using namespace trisum;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double ln2 = std::numbers::ln2;
constexpr double G = 0.915965594177219015054603514932384110774;
const double s7 = std::sqrt(7.0);
constexpr double at = 0.4866949550747732024638;  // arctan(sqrt7/5)
constexpr double re_w = 0.3700775896642514215587;  // Li2((3 + i sqrt7)/8)
constexpr double im_w = 0.4040475183129954163154;

long double binom(unsigned n, unsigned k) {
  long double r = 1.0L;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double naive_sum(SeriesFamily f, double z, unsigned m) {
  const bool a = f == SeriesFamily::A1 || f == SeriesFamily::A2;
  const bool first = f == SeriesFamily::A1 || f == SeriesFamily::B1;
  long double s = 0.0L;
  for (unsigned k = 0; k < 80; ++k) {
    const long double t = (a ? oracle::a_term(k) : oracle::b_term(k)).convert_to<long double>();
    s += first ? t * binom(k, m) / std::pow(static_cast<long double>(z), k + 1)
               : t * binom(k + m, k) / std::pow(static_cast<long double>(z), k + m + 1);
  }
  return static_cast<double>(s);
}

struct Printed {
  const char* id;
  double value;
};

// The printed right-hand sides, written out independently of the registry.
const Printed kPrinted[] = {
    {"grfgv7c", pi * pi / 48 - ln2 * ln2 / 10 + 2 * G / 5},
    {"fx7c65q", pi * pi / 96 + re_w / 8 + 5 * s7 / 56 * im_w},
    // Li2(2/(3 + i sqrt7)) is the conjugate of Li2((3 + i sqrt7)/8).
    {"z7wnv9j", pi * pi / 96 - 4 / s7 * (5 * -im_w - s7 * re_w) / 32},
    {"a1-z2-m1", 3 * pi / 100 - 3 * pi * pi / 400 + 3.0 / 25 * ln2 + 9.0 / 250 * ln2 * ln2 -
                     13.0 / 125 * G},
    {"a1-z2-m2", 3.0 / 100 - 29 * pi / 1250 + 149 * pi * pi / 30000 - 58.0 / 625 * ln2 -
                     149.0 / 6250 * ln2 * ln2 + 243.0 / 3125 * G},
    {"a1-z2-m3", -13.0 / 375 + 1529 * pi / 75000 - 577 * pi * pi / 150000 + 752.0 / 9375 * ln2 +
                     577.0 / 31250 * ln2 * ln2 - 1903.0 / 31250 * G},
    {"a2-z2-m1", 3 * pi / 200 + pi * pi / 150 + 3.0 / 50 * ln2 - 4.0 / 125 * ln2 * ln2 +
                     37 * G / 250},
    {"a2-z2-m2", 3.0 / 400 + 23 * pi / 2500 + 27 * pi * pi / 10000 + 23.0 / 625 * ln2 -
                     81.0 / 6250 * ln2 * ln2 + 843 * G / 12500},
    {"a2-z2-m3", 83.0 / 12000 + 3059 * pi / 600000 + 11 * pi * pi / 9375 + 1517.0 / 75000 * ln2 -
                     88.0 / 15625 * ln2 * ln2 + 8137 * G / 250000},
    {"xuvoy6t", pi * ln2 / 20 - 3.0 / 40 * ln2 * ln2 - pi * pi / 160},
    {"qwvbjrj", 3.0 / 64 * ln2 * ln2 + at * at / 16 - 5 * s7 / 112 * ln2 * at},
    {"b1-z2-m1", -pi / 200 + 9 * pi * pi / 4000 + 3.0 / 100 * ln2 + 27.0 / 1000 * ln2 * ln2 -
                     13.0 / 1000 * pi * ln2},
    {"b1-z2-m2", 2 * pi / 625 - 149 * pi * pi / 100000 - 51.0 / 5000 * ln2 -
                     447.0 / 25000 * ln2 * ln2 + 243.0 / 25000 * pi * ln2},
    {"b1-zm4-m1", 3.0 / 448 * ln2 - 9.0 / 512 * ln2 * ln2 - 3.0 / 128 * at * at -
                      (1.0 / 224 - 89.0 / 6272 * ln2) * s7 * at},
    {"b1-zm4-m2", -219.0 / 25088 * ln2 + 93.0 / 4096 * ln2 * ln2 + 31.0 / 1024 * at * at +
                      (1.0 / 256 - 6651.0 / 351232 * ln2) * s7 * at},
    {"b2-z2-m1", -pi / 400 + 37.0 / 2000 * pi * ln2 - pi * pi / 500 + 3.0 / 200 * ln2 -
                     3.0 / 125 * ln2 * ln2},
    {"b2-z2-m2", -17 * pi / 10000 + 843.0 / 100000 * pi * ln2 - 81 * pi * pi / 100000 +
                     249.0 / 20000 * ln2 - 243.0 / 25000 * ln2 * ln2},
};

}  // namespace

TEST_CASE("expression trees") {
  const Expr e = Expr::number(3, 4) * Expr::symbol(Symbol::Pi) - Expr::number(1, 2);
  CHECK(e.evaluate() == doctest::Approx(0.75 * pi - 0.5).epsilon(1e-16));
  CHECK(e.to_string() == "(3/4*pi + -1/2)");
  CHECK(pow(Expr::symbol(Symbol::Ln2), 2).evaluate() == doctest::Approx(ln2 * ln2));
  CHECK((Expr::number(1) / Expr::number(8)).evaluate() == 0.125);
  CHECK((-Expr::number(5)).to_string() == "-5");
  CHECK_THROWS_AS(Expr::number(1, 0), DomainError);
  CHECK(evaluate(Symbol::Catalan) == doctest::Approx(G).epsilon(1e-16));
  CHECK(evaluate(Symbol::ArctanSqrt7Over5) == doctest::Approx(at).epsilon(1e-16));
  CHECK(std::abs(evaluate(Symbol::ReLi2W) - re_w) < 1e-15);
  CHECK(std::abs(evaluate(Symbol::ImLi2W) - im_w) < 1e-15);
  CHECK(std::abs(evaluate(Symbol::ReLi2V) - re_w) < 1e-15);
  CHECK(std::abs(evaluate(Symbol::ImLi2V) + im_w) < 1e-15);
  CHECK(to_string(Symbol::Catalan) == "G");
}

TEST_CASE("C_r against boost quadrature") {
  const ComplexValue lambdas[] = {2.0, -1.0, {0.0, 1.0}, {1.5, 1.3228756555322954},
                                  {3.0, 2.0}, -0.5, {0.5, -0.3}, 1.0001};
  for (const auto& lambda : lambdas) {
    for (unsigned r = 0; r <= 5; ++r) {
      CAPTURE(lambda);
      CAPTURE(r);
      const ComplexValue expected = oracle::c_integral(r, lambda);
      CHECK(std::abs(C_of(r, lambda) - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
    }
  }
  CHECK(std::abs(C_of(0, 2.0) - ComplexValue(pi * pi / 12 - ln2 * ln2 / 2)) < 1e-15);
  CHECK(std::abs(C_of(0, {0.0, 1.0}) - ComplexValue(-pi * pi / 48, -G)) < 1e-15);
  // Close to the cut the integrand peaks near 1e6 and boost's quadrature
  // loses digits; compare with a 40-digit mpmath value instead.
  const ComplexValue near_cut(22.623307622732806268, 4.4008546130385467005);
  CHECK(std::abs(C_of(5, {0.5, -0.1}) - near_cut) <= 1e-14 * std::abs(near_cut));
}

TEST_CASE("C_r rejects lambda on [0, 1]") {
  for (double x : {0.0, 0.3, 1.0}) CHECK_THROWS_AS(C_of(0, x), DomainError);
  CHECK_THROWS_AS(C_of(2, 0.5), DomainError);
  CHECK_THROWS_AS(C_mirror(1, 0.25), DomainError);
  CHECK_THROWS_AS(C_of(0, {std::nan(""), 0.0}), DomainError);
}

TEST_CASE("mirror C_r against boost quadrature") {
  for (ComplexValue lambda : {ComplexValue(2.0), ComplexValue(-1.0), ComplexValue(0.2, 0.9)}) {
    for (unsigned r = 0; r <= 4; ++r) {
      const auto part = [&](bool imag) {
        return oracle::boost_integral([&](double x) {
          const ComplexValue v = std::log(x / (1.0 - x)) /
                                 std::pow(ComplexValue(x) - lambda, static_cast<int>(r + 1));
          return imag ? v.imag() : v.real();
        });
      };
      CHECK(std::abs(C_mirror(r, lambda) - ComplexValue(part(false), part(true))) < 1e-12);
    }
  }
}

TEST_CASE("closed sums agree with exact-term summation") {
  for (auto f : kTheoremFamilies) {
    for (double z : {2.0, 3.0, -4.0, -8.0, 5.0, -2.0, 1.0, -1.0, 27.5}) {
      for (unsigned m = 0; m <= 5; ++m) {
        CAPTURE(f);
        CAPTURE(z);
        CAPTURE(m);
        const auto b = closed_sum(f, z, m);
        const double expected = naive_sum(f, z, m);
        CHECK(std::abs(b.total - expected) <= 1e-11 * std::max(1.0, std::abs(expected)));
        CHECK(b.imag_residual < 1e-12);
        CHECK(b.contributions.size() == 3 * (m + 1));
        CHECK(b.family == f);
        CHECK(b.m == m);
      }
    }
  }
}

TEST_CASE("closed sums stay relatively accurate under cancellation") {
  // mpmath, 30 digits. The root contributions are of order 1e-2 here.
  const struct {
    SeriesFamily f;
    double z;
    double value;
  } cases[] = {
      {SeriesFamily::B1, -8.0, -2.7656200266827568486e-9},
      {SeriesFamily::A1, -8.0, -4.7872713488748547724e-9},
      {SeriesFamily::A1, 5.0, 6.2488669764698599115e-8},
      {SeriesFamily::B1, 5.0, 3.623356996719601441e-8},
  };
  for (const auto& c : cases) {
    CAPTURE(c.f);
    CAPTURE(c.z);
    CHECK(std::abs(closed_sum(c.f, c.z, 4).total - c.value) <= 1e-10 * std::abs(c.value));
  }
}

TEST_CASE("breakdown products sum to the total") {
  const auto b = closed_sum(SeriesFamily::B2, -4.0, 2);
  ComplexValue sum = 0.0;
  for (const auto& c : b.contributions) {
    CHECK(std::abs(c.product - c.coefficient * c.c_factor) < 1e-15);
    sum += c.product;
  }
  CHECK(std::abs(sum.real() - b.total) < 1e-15);  // (-1)^m = 1
  CHECK(std::abs(b.roots.roots[2] + 1.0) < 1e-15);
}

TEST_CASE("closed sum argument errors") {
  CHECK_THROWS_AS(closed_sum(SeriesFamily::C1, 2.0, 0), DomainError);
  CHECK_THROWS_AS(closed_sum(SeriesFamily::A1, 0.5, 0), DomainError);
  CHECK_THROWS_AS(closed_sum(SeriesFamily::A1, -0.999, 0), DomainError);
  CHECK_THROWS_AS(closed_sum(SeriesFamily::A1, INFINITY, 0), DomainError);
}

TEST_CASE("registry matches the printed values") {
  const auto& registry = paper_constants();
  CHECK(registry.size() == std::size(kPrinted));
  std::set<std::string> ids;
  for (const auto& c : registry) ids.insert(c.id);
  CHECK(ids.size() == registry.size());
  for (const auto& p : kPrinted) {
    CAPTURE(p.id);
    const PaperConstant& c = find_paper_constant(p.id);
    CHECK(std::abs(c.value.evaluate() - p.value) < 1e-15);
    CHECK(paper_constant(p.id) == c.value.evaluate());
    CHECK(std::abs(c.scale * closed_sum(c.family, c.z, c.m).total - p.value) < 1e-11);
    CHECK_FALSE(c.description.empty());
  }
  CHECK_THROWS_AS(find_paper_constant("nope"), UnknownConstant);
  CHECK_THROWS_AS(paper_constant(""), UnknownConstant);
}

TEST_CASE("the two printed forms of the alternating A sum coincide") {
  CHECK(std::abs(paper_constant("fx7c65q") - paper_constant("z7wnv9j")) < 1e-15);
  CHECK(std::abs(-closed_sum(SeriesFamily::A1, -4.0, 0).total - paper_constant("z7wnv9j")) < 1e-12);
}

TEST_CASE("B1 at z = -4, m = 1 carries the sign of the alternating sum") {
  // sum B_k C(k,1) / (-4)^{k+1} = -sum B_k (-1)^k k / 4^{k+1}.
  const double printed = paper_constant("b1-zm4-m1");
  CHECK(std::abs(closed_sum(SeriesFamily::B1, -4.0, 1).total + printed) < 1e-12);
}
