#pragma once

// Orbits of line arrangements under a permutation group, represented by
// their lex-minimal members.
//
// Minimal representatives of size n + 1 are exactly the minimal extensions
// of minimal representatives of size n by a line larger than their last
// member, so the search climbs one cardinality at a time.

#include <cstdint>
#include <span>
#include <vector>

#include "weyl27/arrangement.hpp"
#include "weyl27/perm_group.hpp"

namespace weyl27 {

struct OrbitRecord {
  Arrangement min_rep;
  int n = 0;
  std::uint64_t orbit_size = 0;

  friend bool operator==(const OrbitRecord&, const OrbitRecord&) = default;
};

/// True iff no element maps s to a lex-smaller arrangement.
bool is_minimal(Arrangement s, const PermutationGroup& group);

/// |{s^g : g in group}|, counted by collecting the distinct images.
std::uint64_t orbit_size(Arrangement s, const PermutationGroup& group);

namespace kernels {

struct ScanResult {
  bool minimal = false;
  /// Number of elements fixing the candidate; only filled in when minimal.
  std::uint32_t stabilizer = 0;

  friend bool operator==(const ScanResult&, const ScanResult&) = default;
};

/// One candidate against the flat element table, with early exit.
ScanResult scan_candidate(std::uint32_t mask, std::span<const std::uint8_t> table);

/// Serial reference.
std::vector<ScanResult> scan_serial(std::span<const std::uint32_t> candidates, std::span<const std::uint8_t> table);

/// OpenMP version; identical output for every worker count.
std::vector<ScanResult> scan_parallel(std::span<const std::uint32_t> candidates, std::span<const std::uint8_t> table,
                                      int workers);

/// Stabilizer sizes of arbitrary arrangements (no minimality test).
std::vector<std::uint32_t> stabilizer_parallel(std::span<const std::uint32_t> masks,
                                               std::span<const std::uint8_t> table, int workers);

}  // namespace kernels

/// Every one-line extension of each rep by a line past its last member, in lex order.
std::vector<std::uint32_t> extension_candidates(const std::vector<Arrangement>& reps);

/// Minimal representatives of size n + 1 from the complete sorted list at size n.
/// workers == 0 selects the serial reference kernel.
std::vector<Arrangement> extend_minimal(const std::vector<Arrangement>& reps, const PermutationGroup& group,
                                        int workers = 0);

/// Records for every cardinality 0..27, sorted by (n, lex of min_rep).
/// workers == 0 selects the serial reference kernel.
std::vector<OrbitRecord> enumerate_all(const PermutationGroup& group, int workers = 0);

/// Records of every cardinality from 0 to max_n.
std::vector<OrbitRecord> enumerate_up_to(const PermutationGroup& group, int max_n, int workers = 0);

/// Sort masks of equal cardinality by lex order of their index sequences.
void sort_lex(std::vector<Arrangement>& v);

}  // namespace weyl27
