#pragma once

// Combinatorial types of arrangements. With no three lines through a point,
// an intersection-form preserving bijection is the same thing as an
// isomorphism of the 0/1 intersection graph, so types are compared through
// a canonical form of that graph.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "weyl27/arrangement.hpp"
#include "weyl27/enumerate.hpp"
#include "weyl27/invariants.hpp"
#include "weyl27/lines.hpp"

namespace weyl27 {

struct IntersectionGraph {
  int n = 0;
  std::vector<std::uint32_t> adj;  // adj[i] bit j set iff vertices i, j meet
  std::vector<int> vertex_lines;   // 1-based line index of each vertex

  bool edge(int i, int j) const { return (adj[static_cast<std::size_t>(i)] >> j) & 1u; }
  static IntersectionGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
};

/// Identifies an intersection graph up to isomorphism: the vertex count and
/// the lex-smallest upper-triangle adjacency bitstring over the labelings
/// reached by the canonical search, packed MSB-first and written in hex.
struct CombCertificate {
  int n = 0;
  std::string hex;

  std::string str() const { return std::to_string(n) + ":" + hex; }
  friend auto operator<=>(const CombCertificate&, const CombCertificate&) = default;
};

IntersectionGraph intersection_graph(Arrangement s, const LineSystem& lines = cubic_lines());

/// Individualization/refinement search with trace and automorphism pruning.
CombCertificate canonical_certificate(const IntersectionGraph& g);

/// Certificates for many arrangements; workers == 0 runs serially.
std::vector<CombCertificate> certificates(const std::vector<OrbitRecord>& records, int workers = 0,
                                          const LineSystem& lines = cubic_lines());

/// Fibers of the map from orbits to combinatorial types, keyed by certificate.
/// Members keep the order of the input records.
using TypeFibers = std::map<CombCertificate, std::vector<OrbitRecord>>;
TypeFibers classify_types(const std::vector<OrbitRecord>& records, int workers = 0,
                          const LineSystem& lines = cubic_lines());

struct ZariskiTuple {
  CombCertificate certificate;
  std::vector<OrbitRecord> members;
  std::vector<InvariantReport> reports;
  /// Names of the invariants that take more than one value on the members:
  /// "perp_parity" and/or "h1".
  std::vector<std::string> separated_by;
  /// Every pair of members differs in at least one computed invariant.
  bool fully_separated = false;
};

/// The fibers with more than one orbit, with their invariant reports.
std::vector<ZariskiTuple> find_zariski_pairs(const TypeFibers& fibers, const LineSystem& lines = cubic_lines());

/// Orbits sharing a combinatorial type and all computed invariants. Empty
/// exactly when these data separate every orbit.
std::vector<std::vector<OrbitRecord>> unseparated_orbits(const TypeFibers& fibers,
                                                         const LineSystem& lines = cubic_lines());

}  // namespace weyl27
