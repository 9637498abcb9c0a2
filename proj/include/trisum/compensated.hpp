#pragma once

#include <cmath>
#include <complex>
#include <type_traits>

namespace trisum {

/// Neumaier's variant of Kahan summation. Unlike plain Kahan it stays
/// accurate when an addend is larger in magnitude than the running sum.
template <typename Value>
class CompensatedSum {
 public:
  constexpr CompensatedSum() = default;
  constexpr explicit CompensatedSum(Value initial) : sum_(initial) {}

  CompensatedSum& operator+=(Value value) {
    const Value t = sum_ + value;
    compensation_ += error_term(sum_, value, t);
    sum_ = t;
    return *this;
  }

  CompensatedSum& operator-=(Value value) { return *this += -value; }

  [[nodiscard]] Value value() const { return sum_ + compensation_; }

 private:
  static Value error_term(const Value& a, const Value& b, const Value& t) {
    if constexpr (std::is_floating_point_v<Value>) {
      return std::abs(a) >= std::abs(b) ? (a - t) + b : (b - t) + a;
    } else {
      // complex: compensate each component independently
      using R = typename Value::value_type;
      const auto part = [](R x, R y, R s) {
        return std::abs(x) >= std::abs(y) ? (x - s) + y : (y - s) + x;
      };
      return {part(a.real(), b.real(), t.real()), part(a.imag(), b.imag(), t.imag())};
    }
  }

  Value sum_{};
  Value compensation_{};
};

}  // namespace trisum
