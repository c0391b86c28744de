#pragma once

// The rank-7 lattice of a cubic surface, its 27 line classes, and the
// reflection group W(E6) acting on them.
//
// Coordinates are taken in the basis h, e1, ..., e6 with Gram matrix
// diag(1, -1, -1, -1, -1, -1, -1). Line numbering:
//   1..6    e_i
//   7..21   h - e_i - e_j   for i < j in lexicographic order
//   22..27  2h - (e1 + ... + e6) + e_k

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "weyl27/lattice.hpp"
#include "weyl27/perm_group.hpp"

namespace weyl27 {

inline constexpr std::size_t kAmbientRank = 7;

const GramLattice& ambient_lattice();
/// (3, -1, -1, -1, -1, -1, -1)
const IntVector& anticanonical_class();
/// The simple roots r1..r6 of the E6 lattice orthogonal to the anticanonical class.
const std::vector<IntVector>& e6_simple_roots();

/// Row-vector isometry: x maps to x * matrix.
struct Isometry {
  IntMatrix matrix;

  IntVector apply(const IntVector& x) const { return x * matrix; }
  bool preserves(const GramLattice& lattice) const;
  bool fixes(const IntVector& x) const { return apply(x) == x; }
};

Isometry operator*(const Isometry& a, const Isometry& b);

struct LineSystem {
  std::vector<IntVector> classes;       // 0-based, classes[0] is line 1
  std::array<std::array<int, kNumLines>, kNumLines> inter{};

  /// 0-based index of a class, or kNumLines when it is not a line class.
  std::size_t index_of(const IntVector& cls) const;
  /// Human label in the blow-up notation: "1", "12", "bar3".
  static std::string label(std::size_t index);
};

LineSystem build_line_system();
/// A shared immutable instance.
const LineSystem& cubic_lines();

/// x -> x + <x, r> r. Throws std::invalid_argument unless <r, r> = -2.
Isometry reflection(const IntVector& root);

/// pi with class(i) * g = class(pi(i)). Throws std::invalid_argument when g
/// does not permute the 27 line classes.
Permutation isometry_to_permutation(const Isometry& g, const LineSystem& lines);

/// The unique isometry inducing pi, solved on the basis formed by lines 1..7.
/// Throws std::invalid_argument when no integral line-preserving isometry exists.
Isometry permutation_to_isometry(const Permutation& pi, const LineSystem& lines);

/// Norms -2 and the pairing pattern of the E6 diagram:
/// r1-r4, r2-r3, r3-r4, r4-r5, r5-r6 pair to 1, all others to 0.
bool verify_dynkin(const std::vector<IntVector>& roots);

/// Line permutations induced by the reflections in the given roots.
std::vector<Permutation> reflection_permutations(const std::vector<IntVector>& roots, const LineSystem& lines);

/// W(E6) generated by the six simple reflections (order 51840). Built once.
const PermutationGroup& weyl_e6();

}  // namespace weyl27
