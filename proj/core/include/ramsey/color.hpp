#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace ramsey {

/// Colors are numbered 1..r. Zero never names a color.
using Color = std::uint32_t;

inline constexpr int kMaxColors = 32;

/// A set of colors, stored as a bit mask (bit c-1 for color c).
class ColorSet {
 public:
  constexpr ColorSet() = default;
  constexpr explicit ColorSet(std::uint32_t mask) : mask_(mask) {}

  static constexpr ColorSet single(Color c) { return ColorSet(std::uint32_t{1} << (c - 1)); }
  /// {1, ..., r}
  static constexpr ColorSet all(int r) {
    return ColorSet(r >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << r) - 1);
  }

  constexpr bool contains(Color c) const { return c >= 1 && c <= 32 && ((mask_ >> (c - 1)) & 1u); }
  constexpr void insert(Color c) { mask_ |= std::uint32_t{1} << (c - 1); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr std::uint32_t mask() const { return mask_; }

  /// Least color in the set, 0 when empty.
  constexpr Color least() const {
    return mask_ == 0 ? 0 : static_cast<Color>(std::countr_zero(mask_) + 1);
  }
  constexpr Color greatest() const {
    return mask_ == 0 ? 0 : static_cast<Color>(32 - std::countl_zero(mask_));
  }

  std::vector<Color> to_vector() const {
    std::vector<Color> out;
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) {
      out.push_back(static_cast<Color>(std::countr_zero(m) + 1));
    }
    return out;
  }

  constexpr ColorSet operator&(ColorSet o) const { return ColorSet(mask_ & o.mask_); }
  constexpr ColorSet operator|(ColorSet o) const { return ColorSet(mask_ | o.mask_); }
  constexpr ColorSet& operator&=(ColorSet o) {
    mask_ &= o.mask_;
    return *this;
  }
  constexpr bool operator==(const ColorSet&) const = default;

 private:
  std::uint32_t mask_ = 0;
};

}  // namespace ramsey
