#pragma once

// Lattice invariants of a line arrangement S: the orthogonal complement of
// the span H(S) of its line classes, and the cokernel of the restriction
// map from the ambient lattice to the direct sum of one Z per line of S.

#include <string>
#include <vector>

#include "weyl27/arrangement.hpp"
#include "weyl27/lattice.hpp"
#include "weyl27/lines.hpp"

namespace weyl27 {

enum class Parity { even, odd };

std::string to_string(Parity p);

struct InvariantReport {
  Arrangement arrangement;
  std::size_t hs_rank = 0;
  std::size_t perp_rank = 0;
  Parity perp_parity = Parity::odd;
  IntVector h1_torsion;
  std::size_t h1_free_rank = 0;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

/// Classes of the members of s, in index order.
std::vector<IntVector> sublattice_hs(Arrangement s, const LineSystem& lines = cubic_lines());

/// |S| x 7 matrix whose row for line l is (<basis_j, [l]>)_j, i.e. [l] * Gram.
IntMatrix restriction_matrix(Arrangement s, const LineSystem& lines = cubic_lines());

OrthogonalComplement perp_lattice(Arrangement s, const LineSystem& lines = cubic_lines());

/// Parity of H(S)^perp. The zero lattice counts as even.
Parity perp_parity(Arrangement s, const LineSystem& lines = cubic_lines());

/// Invariant factors and free rank of the restriction cokernel, which
/// presents H_1 of the complement of the union of the lines.
CokernelInvariants h1_complement(Arrangement s, const LineSystem& lines = cubic_lines());

InvariantReport invariant_report(Arrangement s, const LineSystem& lines = cubic_lines());

}  // namespace weyl27
