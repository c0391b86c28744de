#pragma once

// Permutations of the 27 lines and the group they generate.
//
// Points are 0-based internally and 1-based in every serialized form.
// Composition follows the right action: x^(s*t) = (x^s)^t.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace weyl27 {

inline constexpr std::size_t kNumLines = 27;

class Permutation {
 public:
  /// Identity.
  Permutation();
  /// images[i] is the 0-based image of point i. Throws unless a bijection.
  explicit Permutation(const std::array<std::uint8_t, kNumLines>& images);

  std::uint8_t operator()(std::size_t point) const { return images_[point]; }
  const std::array<std::uint8_t, kNumLines>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// Cycle notation with 1-based points: each cycle starts at its smallest
  /// point and cycles are sorted by that point, e.g. "(4,21)(5,20)". The
  /// identity is "()".
  std::string cycle_string() const;
  static Permutation from_cycles(std::string_view text);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::array<std::uint8_t, kNumLines> images_;
};

/// Right-action product: apply a first, then b.
Permutation operator*(const Permutation& a, const Permutation& b);

/// The full element table of a permutation group of degree 27.
class PermutationGroup {
 public:
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  /// Flat table: images of element g occupy [g * 27, g * 27 + 27).
  std::span<const std::uint8_t> table() const { return table_; }

  /// Sorted 0-based orbit of a point.
  std::vector<std::size_t> orbit_of(std::size_t point) const;
  bool contains(const Permutation& p) const;

  friend PermutationGroup generate_group(const std::vector<Permutation>& gens);

 private:
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<std::uint8_t> table_;
};

/// Breadth-first closure of gens under right multiplication. The identity is
/// always element 0, and the element order is deterministic.
PermutationGroup generate_group(const std::vector<Permutation>& gens);

}  // namespace weyl27
