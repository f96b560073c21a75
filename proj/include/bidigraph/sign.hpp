#pragma once

#include <cstdint>
#include <optional>

namespace bidi {

/// A value in {-1, +1}. Orders minus before plus.
class Sign {
 public:
  static constexpr Sign plus() { return Sign(1); }
  static constexpr Sign minus() { return Sign(-1); }

  /// Maps +1 to plus and -1 to minus; anything else is rejected.
  static constexpr std::optional<Sign> from_int(int v) {
    if (v == 1) return plus();
    if (v == -1) return minus();
    return std::nullopt;
  }

  /// Parses the ASCII tokens "+" and "-".
  static constexpr std::optional<Sign> from_char(char c) {
    if (c == '+') return plus();
    if (c == '-') return minus();
    return std::nullopt;
  }

  constexpr int value() const { return v_; }
  constexpr bool is_plus() const { return v_ > 0; }
  constexpr bool is_minus() const { return v_ < 0; }
  constexpr char symbol() const { return is_plus() ? '+' : '-'; }

  constexpr Sign operator-() const { return Sign(static_cast<std::int8_t>(-v_)); }
  friend constexpr Sign operator*(Sign a, Sign b) {
    return Sign(static_cast<std::int8_t>(a.v_ * b.v_));
  }

  friend constexpr auto operator<=>(Sign, Sign) = default;

 private:
  constexpr explicit Sign(std::int8_t v) : v_(v) {}
  std::int8_t v_;
};

}  // namespace bidi
