#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "weyl27/perm_group.hpp"

namespace weyl27 {

/// A subset of the 27 lines. Bit i is line i + 1.
struct Arrangement {
  std::uint32_t mask = 0;

  static constexpr std::uint32_t kFull = (1u << kNumLines) - 1;

  static Arrangement from_indices(const std::vector<int>& one_based);
  /// Strictly increasing 1-based member indices.
  std::vector<int> indices() const;
  int size() const { return std::popcount(mask); }
  bool contains(std::size_t line) const { return (mask >> line) & 1u; }
  /// 0-based largest member; -1 for the empty set.
  int last() const { return mask == 0 ? -1 : 31 - std::countl_zero(mask); }
  Arrangement complement() const { return Arrangement{kFull & ~mask}; }

  friend bool operator==(Arrangement, Arrangement) = default;
};

/// Sorted image {s^pi : s in S}.
inline Arrangement apply_perm(Arrangement s, const Permutation& pi) {
  std::uint32_t out = 0;
  for (std::uint32_t m = s.mask; m; m &= m - 1) out |= 1u << pi(static_cast<std::size_t>(std::countr_zero(m)));
  return Arrangement{out};
}

/// Same as apply_perm, reading the images from a row of a flat group table.
inline std::uint32_t apply_images(std::uint32_t mask, const std::uint8_t* images) {
  std::uint32_t out = 0;
  for (; mask; mask &= mask - 1) out |= 1u << images[std::countr_zero(mask)];
  return out;
}

/// Lex order on increasing index sequences for equal-size masks. The lowest
/// differing line decides: the side that contains it is smaller.
inline bool lex_less_unchecked(std::uint32_t a, std::uint32_t b) {
  const std::uint32_t diff = a ^ b;
  return diff != 0 && (a & diff & (~diff + 1)) != 0;
}

/// Throws std::invalid_argument when the sizes differ.
inline bool lex_less(Arrangement a, Arrangement b) {
  if (a.size() != b.size()) throw std::invalid_argument("lex_less: arrangements of different size");
  return lex_less_unchecked(a.mask, b.mask);
}

}  // namespace weyl27
