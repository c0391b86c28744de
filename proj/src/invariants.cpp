#include "weyl27/invariants.hpp"

namespace weyl27 {

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

std::vector<IntVector> sublattice_hs(Arrangement s, const LineSystem& lines) {
  std::vector<IntVector> out;
  for (int i : s.indices()) out.push_back(lines.classes[static_cast<std::size_t>(i - 1)]);
  return out;
}

IntMatrix restriction_matrix(Arrangement s, const LineSystem& lines) {
  return IntMatrix::from_rows(sublattice_hs(s, lines), kAmbientRank) * ambient_lattice().gram;
}

OrthogonalComplement perp_lattice(Arrangement s, const LineSystem& lines) {
  return orthogonal_complement(sublattice_hs(s, lines), ambient_lattice());
}

Parity perp_parity(Arrangement s, const LineSystem& lines) {
  return is_even(perp_lattice(s, lines).gram_restricted) ? Parity::even : Parity::odd;
}

CokernelInvariants h1_complement(Arrangement s, const LineSystem& lines) {
  return cokernel_invariants(restriction_matrix(s, lines), static_cast<std::size_t>(s.size()));
}

InvariantReport invariant_report(Arrangement s, const LineSystem& lines) {
  InvariantReport r;
  r.arrangement = s;
  r.hs_rank = rank(IntMatrix::from_rows(sublattice_hs(s, lines), kAmbientRank));
  const OrthogonalComplement perp = perp_lattice(s, lines);
  r.perp_rank = perp.basis.size();
  r.perp_parity = is_even(perp.gram_restricted) ? Parity::even : Parity::odd;
  const CokernelInvariants h1 = h1_complement(s, lines);
  r.h1_torsion = h1.torsion;
  r.h1_free_rank = h1.free_rank;
  return r;
}

}  // namespace weyl27
