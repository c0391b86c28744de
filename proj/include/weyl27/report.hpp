#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "weyl27/combinatorics.hpp"
#include "weyl27/enumerate.hpp"
#include "weyl27/invariants.hpp"

namespace weyl27 {

using Json = nlohmann::ordered_json;

Json arrangement_json(Arrangement s);
/// {"n":..., "min_rep":[...], "orbit_size":...}
Json record_json(const OrbitRecord& r);
Json invariant_json(const InvariantReport& r);
/// {"certificate":..., "members":[...], "is_zariski_tuple":...}
Json fiber_json(const CombCertificate& cert, const std::vector<OrbitRecord>& members, bool is_zariski_tuple);
Json zariski_json(const ZariskiTuple& z);

/// One JSON object per line, in record order.
void write_jsonl(std::ostream& os, const std::vector<OrbitRecord>& records);
/// "n,count" header, then one row per cardinality 0..27.
void write_count_csv(std::ostream& os, const std::vector<OrbitRecord>& records);
std::vector<std::size_t> counts_by_size(const std::vector<OrbitRecord>& records);

/// Bracketed 1-based list, e.g. "[1,2,3,4,21]".
std::string format_indices(Arrangement s);
/// "Z/2 + Z^1" style abelian group; "0" for the trivial group.
std::string format_group(const IntVector& torsion, std::size_t free_rank);

}  // namespace weyl27
