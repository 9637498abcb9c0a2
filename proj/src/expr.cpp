#include "trisum/expr.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "trisum/error.hpp"
#include "trisum/specfun.hpp"

namespace trisum {

namespace {

const ComplexValue& li2_w() {
  static const ComplexValue v = dilog(ComplexValue{3.0, std::sqrt(7.0)} / 8.0);
  return v;
}

const ComplexValue& li2_v() {
  static const ComplexValue v = dilog(2.0 / ComplexValue{3.0, std::sqrt(7.0)});
  return v;
}

}  // namespace

double evaluate(Symbol symbol) {
  switch (symbol) {
    case Symbol::Pi: return std::numbers::pi;
    case Symbol::Ln2: return std::numbers::ln2;
    case Symbol::Catalan: return catalan();
    case Symbol::Sqrt7: return std::sqrt(7.0);
    case Symbol::ArctanSqrt7Over5: return std::atan(std::sqrt(7.0) / 5.0);
    case Symbol::ReLi2W: return li2_w().real();
    case Symbol::ImLi2W: return li2_w().imag();
    case Symbol::ReLi2V: return li2_v().real();
    case Symbol::ImLi2V: return li2_v().imag();
  }
  return std::nan("");
}

std::string to_string(Symbol symbol) {
  switch (symbol) {
    case Symbol::Pi: return "pi";
    case Symbol::Ln2: return "ln2";
    case Symbol::Catalan: return "G";
    case Symbol::Sqrt7: return "sqrt7";
    case Symbol::ArctanSqrt7Over5: return "atan(sqrt7/5)";
    case Symbol::ReLi2W: return "Re Li2((3+i sqrt7)/8)";
    case Symbol::ImLi2W: return "Im Li2((3+i sqrt7)/8)";
    case Symbol::ReLi2V: return "Re Li2(2/(3+i sqrt7))";
    case Symbol::ImLi2V: return "Im Li2(2/(3+i sqrt7))";
  }
  return "?";
}

struct Expr::Node {
  enum class Kind { Number, Symbol, Sum, Product, Negate, Power };
  Kind kind;
  long long numerator = 0;
  long long denominator = 1;
  trisum::Symbol symbol = trisum::Symbol::Pi;
  int exponent = 1;
  std::vector<Expr> children;
};

Expr Expr::number(long long numerator, long long denominator) {
  if (denominator == 0) {
    throw DomainError("Expr::number: zero denominator");
  }
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Number;
  n->numerator = numerator;
  n->denominator = denominator;
  return Expr(std::move(n));
}

Expr Expr::symbol(Symbol s) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Symbol;
  n->symbol = s;
  return Expr(std::move(n));
}

Expr operator+(const Expr& a, const Expr& b) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Node::Kind::Sum;
  n->children = {a, b};
  return Expr(std::move(n));
}

Expr operator-(const Expr& a) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Node::Kind::Negate;
  n->children = {a};
  return Expr(std::move(n));
}

Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

Expr operator*(const Expr& a, const Expr& b) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Node::Kind::Product;
  n->children = {a, b};
  return Expr(std::move(n));
}

Expr pow(const Expr& base, int exponent) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Node::Kind::Power;
  n->exponent = exponent;
  n->children = {base};
  return Expr(std::move(n));
}

Expr operator/(const Expr& a, const Expr& b) { return a * pow(b, -1); }

double Expr::evaluate() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Node::Kind::Number:
      return static_cast<double>(n.numerator) / static_cast<double>(n.denominator);
    case Node::Kind::Symbol:
      return trisum::evaluate(n.symbol);
    case Node::Kind::Sum:
      return n.children[0].evaluate() + n.children[1].evaluate();
    case Node::Kind::Product:
      return n.children[0].evaluate() * n.children[1].evaluate();
    case Node::Kind::Negate:
      return -n.children[0].evaluate();
    case Node::Kind::Power:
      return std::pow(n.children[0].evaluate(), n.exponent);
  }
  return std::nan("");
}

std::string Expr::to_string() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Node::Kind::Number:
      return n.denominator == 1 ? std::to_string(n.numerator)
                                : std::to_string(n.numerator) + "/" + std::to_string(n.denominator);
    case Node::Kind::Symbol:
      return trisum::to_string(n.symbol);
    case Node::Kind::Sum:
      return "(" + n.children[0].to_string() + " + " + n.children[1].to_string() + ")";
    case Node::Kind::Product:
      return n.children[0].to_string() + "*" + n.children[1].to_string();
    case Node::Kind::Negate:
      return "-" + n.children[0].to_string();
    case Node::Kind::Power:
      return "(" + n.children[0].to_string() + ")^" + std::to_string(n.exponent);
  }
  return "?";
}

}  // namespace trisum
