#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace vlink {

// Exact half-integer arithmetic: the value is doubled_/2. Linking numbers of
// virtual links are genuinely half-integer valued, so no floating point is
// used anywhere.
class HalfInteger {
public:
  constexpr HalfInteger() = default;
  static constexpr HalfInteger from_doubled(std::int64_t d) {
    HalfInteger h;
    h.doubled_ = d;
    return h;
  }
  static constexpr HalfInteger from_int(std::int64_t v) { return from_doubled(2 * v); }

  constexpr std::int64_t doubled() const { return doubled_; }
  constexpr bool is_integer() const { return doubled_ % 2 == 0; }

  // Smallest integer >= value. Sound for comparing against integral move
  // counts, which can never be fractional.
  constexpr std::int64_t ceil() const {
    if (doubled_ >= 0) return (doubled_ + 1) / 2;
    return doubled_ / 2;
  }

  constexpr HalfInteger operator+(HalfInteger o) const { return from_doubled(doubled_ + o.doubled_); }
  constexpr HalfInteger operator-(HalfInteger o) const { return from_doubled(doubled_ - o.doubled_); }
  constexpr HalfInteger operator-() const { return from_doubled(-doubled_); }
  constexpr HalfInteger abs() const { return from_doubled(doubled_ < 0 ? -doubled_ : doubled_); }

  constexpr auto operator<=>(const HalfInteger&) const = default;

  std::string str() const {
    if (is_integer()) return std::to_string(doubled_ / 2);
    // Exact decimal: .5 is always representable.
    std::int64_t whole = doubled_ / 2;
    if (doubled_ < 0 && doubled_ % 2 != 0) {
      // -3 doubled -> -1.5
      return (whole == 0 ? std::string("-0") : std::to_string(whole)) + ".5";
    }
    return std::to_string(whole) + ".5";
  }

private:
  std::int64_t doubled_ = 0;
};

} // namespace vlink
