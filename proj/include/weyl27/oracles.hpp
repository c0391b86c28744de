#pragma once

// Slow brute-force references. Test and verification code only.

#include <cstdint>
#include <vector>

#include "weyl27/combinatorics.hpp"
#include "weyl27/lattice.hpp"
#include "weyl27/lines.hpp"
#include "weyl27/perm_group.hpp"

namespace weyl27::oracle {

/// Lex-smallest upper-triangle adjacency bitstring over all n! labelings.
std::vector<std::uint8_t> brute_canonical_bits(const IntersectionGraph& g);

/// Isomorphism by trying every bijection.
bool brute_isomorphic(const IntersectionGraph& a, const IntersectionGraph& b);

/// u * a * v == d, evaluated with 128-bit accumulators.
bool product_equals(const IntMatrix& u, const IntMatrix& a, const IntMatrix& v, const IntMatrix& d);

/// |det m| == 1, decided from determinants modulo enough large primes to
/// exceed the Hadamard bound.
bool is_unimodular(const IntMatrix& m);

/// Parity by evaluating x G x over the box {-radius..radius}^rank.
bool box_is_even(const IntMatrix& gram, int radius = 2);

/// Orbits of the given masks under the group generated by gens, found by
/// union-find over generator images. Each orbit is returned sorted by mask.
/// The mask set must be closed under the generators.
std::vector<std::vector<std::uint32_t>> orbits_by_union_find(const std::vector<std::uint32_t>& masks,
                                                             const std::vector<Permutation>& gens);

/// All k-subsets of the 27 lines whose members are pairwise disjoint.
std::vector<std::uint32_t> pairwise_disjoint_subsets(const LineSystem& lines, int k);

/// Elements of any group reachable from gens, by naive closure with the
/// group stored as a sorted vector.
std::size_t closure_order(const std::vector<Permutation>& gens);

}  // namespace weyl27::oracle
