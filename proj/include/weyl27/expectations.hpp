#pragma once

// Reference values the pipeline is checked against, read from a JSON file
// shipped in data/. WEYL27_EXPECTATIONS overrides the path.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace weyl27 {

struct ExpectedTuple {
  std::vector<std::vector<int>> members;
  std::vector<std::uint64_t> orbit_sizes;
  std::vector<std::string> perp_parity;              // empty when not asserted
  std::vector<std::vector<std::int64_t>> h1_torsion;  // empty when not asserted
  std::vector<std::size_t> h1_free_rank;
};

struct Expectations {
  std::uint64_t group_order = 0;
  std::vector<std::string> generators;
  std::int64_t anticanonical_norm = 0;
  int lines_met_by_each_line = 0;
  std::vector<std::size_t> orbit_counts;
  std::size_t total_orbits = 0;
  std::uint64_t orbit_size_sum = 0;
  std::vector<ExpectedTuple> zariski_tuples;
  std::size_t disjoint_five_count = 0;
  std::vector<std::uint64_t> disjoint_five_sizes;
};

/// $WEYL27_EXPECTATIONS if set, else the copy in the source tree.
std::string default_expectations_path();

/// Throws std::runtime_error on a missing or malformed file.
Expectations load_expectations(const std::string& path);
Expectations load_expectations();

}  // namespace weyl27
