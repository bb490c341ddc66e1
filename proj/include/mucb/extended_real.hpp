#pragma once

#include <compare>
#include <limits>
#include <ostream>

namespace mucb {

/// A real number or +infinity. NaN and -infinity are rejected on construction,
/// so the ordering is total (every finite value < +infinity).
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  explicit ExtendedReal(double value);

  static constexpr ExtendedReal infinity() {
    ExtendedReal r;
    r.value_ = std::numeric_limits<double>::infinity();
    return r;
  }

  [[nodiscard]] constexpr bool is_infinite() const { return value_ == std::numeric_limits<double>::infinity(); }
  [[nodiscard]] constexpr bool is_finite() const { return !is_infinite(); }

  // Underlying double; +inf for the infinite value.
  [[nodiscard]] constexpr double value() const { return value_; }

  // Throws when infinite.
  [[nodiscard]] double finite_value() const;

  friend constexpr bool operator==(ExtendedReal a, ExtendedReal b) { return a.value_ == b.value_; }
  friend constexpr std::strong_ordering operator<=>(ExtendedReal a, ExtendedReal b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  double value_ = 0.0;
};

std::ostream& operator<<(std::ostream& os, ExtendedReal x);

}  // namespace mucb
