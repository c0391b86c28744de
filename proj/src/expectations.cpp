#include "weyl27/expectations.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#ifndef WEYL27_DEFAULT_EXPECTATIONS
#define WEYL27_DEFAULT_EXPECTATIONS "data/expectations.json"
#endif

namespace weyl27 {

std::string default_expectations_path() {
  if (const char* env = std::getenv("WEYL27_EXPECTATIONS"); env && *env) return env;
  return WEYL27_DEFAULT_EXPECTATIONS;
}

Expectations load_expectations(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open expectations file: " + path);
  Expectations e;
  try {
    const nlohmann::json j = nlohmann::json::parse(in);
    e.group_order = j.at("group_order").get<std::uint64_t>();
    e.generators = j.at("generators").get<std::vector<std::string>>();
    e.anticanonical_norm = j.at("anticanonical_norm").get<std::int64_t>();
    e.lines_met_by_each_line = j.at("lines_met_by_each_line").get<int>();
    e.orbit_counts = j.at("orbit_counts").get<std::vector<std::size_t>>();
    e.total_orbits = j.at("total_orbits").get<std::size_t>();
    e.orbit_size_sum = j.at("orbit_size_sum").get<std::uint64_t>();
    for (const auto& t : j.at("zariski_tuples")) {
      ExpectedTuple et;
      et.members = t.at("members").get<std::vector<std::vector<int>>>();
      et.orbit_sizes = t.at("orbit_sizes").get<std::vector<std::uint64_t>>();
      if (t.contains("perp_parity")) et.perp_parity = t["perp_parity"].get<std::vector<std::string>>();
      if (t.contains("h1_torsion")) et.h1_torsion = t["h1_torsion"].get<std::vector<std::vector<std::int64_t>>>();
      if (t.contains("h1_free_rank")) et.h1_free_rank = t["h1_free_rank"].get<std::vector<std::size_t>>();
      e.zariski_tuples.push_back(std::move(et));
    }
    const auto& d = j.at("disjoint_five_orbits");
    e.disjoint_five_count = d.at("count").get<std::size_t>();
    e.disjoint_five_sizes = d.at("orbit_sizes").get<std::vector<std::uint64_t>>();
  } catch (const nlohmann::json::exception& ex) {
    throw std::runtime_error("malformed expectations file " + path + ": " + ex.what());
  }
  return e;
}

Expectations load_expectations() { return load_expectations(default_expectations_path()); }

}  // namespace weyl27
