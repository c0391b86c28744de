#include "weyl27/report.hpp"

#include <ostream>

namespace weyl27 {

Json arrangement_json(Arrangement s) { return Json(s.indices()); }

Json record_json(const OrbitRecord& r) {
  Json j;
  j["n"] = r.n;
  j["min_rep"] = arrangement_json(r.min_rep);
  j["orbit_size"] = r.orbit_size;
  return j;
}

Json invariant_json(const InvariantReport& r) {
  Json j;
  j["arrangement"] = arrangement_json(r.arrangement);
  j["hs_rank"] = r.hs_rank;
  j["perp_rank"] = r.perp_rank;
  j["perp_parity"] = to_string(r.perp_parity);
  j["h1_torsion"] = r.h1_torsion;
  j["h1_free_rank"] = r.h1_free_rank;
  return j;
}

Json fiber_json(const CombCertificate& cert, const std::vector<OrbitRecord>& members, bool is_zariski_tuple) {
  Json j;
  j["certificate"] = cert.str();
  Json reps = Json::array();
  for (const auto& m : members) reps.push_back(arrangement_json(m.min_rep));
  j["members"] = std::move(reps);
  j["is_zariski_tuple"] = is_zariski_tuple;
  return j;
}

Json zariski_json(const ZariskiTuple& z) {
  Json j;
  j["certificate"] = z.certificate.str();
  Json members = Json::array();
  for (std::size_t i = 0; i < z.members.size(); ++i) {
    Json m = record_json(z.members[i]);
    m["invariants"] = invariant_json(z.reports[i]);
    members.push_back(std::move(m));
  }
  j["members"] = std::move(members);
  j["separated_by"] = z.separated_by;
  j["fully_separated"] = z.fully_separated;
  return j;
}

void write_jsonl(std::ostream& os, const std::vector<OrbitRecord>& records) {
  for (const auto& r : records) os << record_json(r).dump() << '\n';
}

std::vector<std::size_t> counts_by_size(const std::vector<OrbitRecord>& records) {
  std::vector<std::size_t> counts(kNumLines + 1, 0);
  for (const auto& r : records) ++counts[static_cast<std::size_t>(r.n)];
  return counts;
}

void write_count_csv(std::ostream& os, const std::vector<OrbitRecord>& records) {
  const auto counts = counts_by_size(records);
  os << "n,count\n";
  for (std::size_t n = 0; n < counts.size(); ++n) os << n << ',' << counts[n] << '\n';
}

std::string format_indices(Arrangement s) {
  std::string out = "[";
  bool first = true;
  for (int i : s.indices()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(i);
  }
  return out + "]";
}

std::string format_group(const IntVector& torsion, std::size_t free_rank) {
  std::string out;
  for (Int t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + std::to_string(t);
  }
  if (free_rank > 0) {
    if (!out.empty()) out += " + ";
    out += free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  }
  return out.empty() ? "0" : out;
}

}  // namespace weyl27
