#pragma once

#include <memory>
#include <string>

namespace trisum {

/// Constants that appear in the printed closed forms.
enum class Symbol {
  Pi,
  Ln2,
  Catalan,
  Sqrt7,
  ArctanSqrt7Over5,  ///< arctan(sqrt7 / 5)
  ReLi2W,            ///< Re Li_2((3 + i sqrt7)/8)
  ImLi2W,            ///< Im Li_2((3 + i sqrt7)/8)
  ReLi2V,            ///< Re Li_2(2/(3 + i sqrt7))
  ImLi2V,            ///< Im Li_2(2/(3 + i sqrt7))
};

double evaluate(Symbol symbol);
std::string to_string(Symbol symbol);

/// Immutable expression tree over rationals and Symbols.
class Expr {
 public:
  /// Throws DomainError for a zero denominator.
  static Expr number(long long numerator, long long denominator = 1);
  static Expr symbol(Symbol s);

  [[nodiscard]] double evaluate() const;
  [[nodiscard]] std::string to_string() const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);
  friend Expr pow(const Expr& base, int exponent);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace trisum
