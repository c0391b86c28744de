#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "weyl27/combinatorics.hpp"
#include "weyl27/enumerate.hpp"
#include "weyl27/oracles.hpp"

using namespace weyl27;

namespace {

IntersectionGraph graph_from_bits(int n, std::uint64_t bits) {
  std::vector<std::pair<int, int>> edges;
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if ((bits >> k) & 1u) edges.emplace_back(i, j);
  return IntersectionGraph::from_edges(n, edges);
}

IntersectionGraph relabel(const IntersectionGraph& g, const std::vector<int>& p) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (g.edge(i, j)) edges.emplace_back(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
  return IntersectionGraph::from_edges(g.n, edges);
}

const std::vector<OrbitRecord>& full_records() {
  static const std::vector<OrbitRecord> records = enumerate_all(weyl_e6(), 1);
  return records;
}

const TypeFibers& full_fibers() {
  static const TypeFibers fibers = classify_types(full_records(), 1);
  return fibers;
}

}  // namespace

TEST_CASE("intersection graphs of arrangements") {
  const auto s1 = intersection_graph(Arrangement::from_indices({1, 2, 3, 4, 5}));
  CHECK(s1.n == 5);
  CHECK(std::all_of(s1.adj.begin(), s1.adj.end(), [](std::uint32_t a) { return a == 0; }));
  // bar6 = 2h - sum e + e6 meets e1..e5.
  const auto t1 = intersection_graph(Arrangement::from_indices({1, 2, 3, 4, 5, 27}));
  for (int i = 0; i < 5; ++i) CHECK(t1.edge(i, 5));
  CHECK(t1.vertex_lines == std::vector<int>{1, 2, 3, 4, 5, 27});
  CHECK(intersection_graph(Arrangement{}).n == 0);
  CHECK_THROWS_AS(IntersectionGraph::from_edges(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(IntersectionGraph::from_edges(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("certificate serialization") {
  CHECK(canonical_certificate(IntersectionGraph::from_edges(0, {})).str() == "0:");
  CHECK(canonical_certificate(IntersectionGraph::from_edges(1, {})).str() == "1:");
  CHECK(canonical_certificate(IntersectionGraph::from_edges(2, {{0, 1}})).str() == "2:80");
  CHECK(canonical_certificate(IntersectionGraph::from_edges(5, {})).str() == "5:0000");
}

TEST_CASE("path and triangle differ") {
  const auto p3 = IntersectionGraph::from_edges(3, {{0, 1}, {1, 2}});
  const auto k3 = IntersectionGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(canonical_certificate(p3) != canonical_certificate(k3));
  CHECK_FALSE(oracle::brute_isomorphic(p3, k3));
}

TEST_CASE("hexagon and two triangles differ") {
  const auto c6 = IntersectionGraph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  const auto two_k3 = IntersectionGraph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK(canonical_certificate(c6) != canonical_certificate(two_k3));
}

TEST_CASE("certificates separate exactly the brute-force isomorphism classes") {
  // Equal certificates iff equal brute-force canonical bitstrings, both ways.
  auto check_graphs = [](const std::vector<IntersectionGraph>& graphs) {
    std::map<std::vector<std::uint8_t>, CombCertificate> by_brute;
    std::map<CombCertificate, std::vector<std::uint8_t>> by_cert;
    for (const auto& g : graphs) {
      const auto bits = oracle::brute_canonical_bits(g);
      const auto cert = canonical_certificate(g);
      const auto it1 = by_brute.emplace(bits, cert).first;
      const auto it2 = by_cert.emplace(cert, bits).first;
      CHECK(it1->second == cert);
      CHECK(it2->second == bits);
    }
    return by_cert.size();
  };
  const std::vector<std::size_t> classes{1, 1, 2, 4, 11, 34};
  for (int n = 0; n <= 5; ++n) {
    std::vector<IntersectionGraph> graphs;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * (n - 1) / 2)); ++bits)
      graphs.push_back(graph_from_bits(n, bits));
    CHECK(check_graphs(graphs) == classes[static_cast<std::size_t>(n)]);
  }
  std::mt19937_64 rng(29);
  std::vector<IntersectionGraph> six;
  for (int t = 0; t < 400; ++t) six.push_back(graph_from_bits(6, rng() & 0x7fff));
  check_graphs(six);
}

TEST_CASE("certificates are invariant under every relabeling (n <= 5)") {
  for (int n = 1; n <= 5; ++n) {
    const std::uint64_t graphs = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t bits = 0; bits < graphs; ++bits) {
      const auto g = graph_from_bits(n, bits);
      const auto cert = canonical_certificate(g);
      std::vector<int> p(static_cast<std::size_t>(n));
      std::iota(p.begin(), p.end(), 0);
      bool ok = true;
      do ok = ok && canonical_certificate(relabel(g, p)) == cert;
      while (std::next_permutation(p.begin(), p.end()));
      CHECK(ok);
    }
  }
}

TEST_CASE("certificates are invariant under random relabelings of larger graphs") {
  std::mt19937_64 rng(31);
  const auto& records = full_records();
  std::uniform_int_distribution<std::size_t> pick(0, records.size() - 1);
  for (int t = 0; t < 200; ++t) {
    const auto g = intersection_graph(records[pick(rng)].min_rep);
    std::vector<int> p(static_cast<std::size_t>(g.n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    CHECK(canonical_certificate(relabel(g, p)) == canonical_certificate(g));
  }
  // The full configuration is highly symmetric and has many equal leaves.
  const auto all = intersection_graph(Arrangement{Arrangement::kFull});
  std::vector<int> p(27);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  CHECK(canonical_certificate(relabel(all, p)) == canonical_certificate(all));
}

TEST_CASE("certificates are constant on orbits") {
  const PermutationGroup& w = weyl_e6();
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<std::size_t> elem(0, w.order() - 1);
  const auto& records = full_records();
  for (std::size_t i = 0; i < records.size(); i += 53) {
    const Arrangement image = apply_perm(records[i].min_rep, w.elements()[elem(rng)]);
    CHECK(canonical_certificate(intersection_graph(image)) ==
          canonical_certificate(intersection_graph(records[i].min_rep)));
  }
}

TEST_CASE("serial and parallel certificates agree") {
  const auto& records = full_records();
  std::vector<OrbitRecord> sample(records.begin(), records.begin() + 800);
  CHECK(certificates(sample, 0) == certificates(sample, 4));
}

TEST_CASE("type fibers") {
  const TypeFibers& fibers = full_fibers();
  std::size_t members = 0;
  std::vector<const std::vector<OrbitRecord>*> multi;
  for (const auto& [cert, fiber] : fibers) {
    members += fiber.size();
    for (const auto& r : fiber) CHECK(r.n == cert.n);
    if (fiber.size() > 1) multi.push_back(&fiber);
  }
  CHECK(members == 5486);
  CHECK(fibers.size() == 5484);
  REQUIRE(multi.size() == 2);
  CHECK((*multi[0])[0].min_rep.indices() == std::vector<int>{1, 2, 3, 4, 5});
  CHECK((*multi[0])[1].min_rep.indices() == std::vector<int>{1, 2, 3, 4, 21});
  CHECK((*multi[1])[0].min_rep.indices() == std::vector<int>{1, 2, 3, 4, 5, 27});
  CHECK((*multi[1])[1].min_rep.indices() == std::vector<int>{1, 2, 3, 4, 21, 26});
}

TEST_CASE("members of a fiber are combinatorially equivalent, others are not") {
  for (const auto& [cert, fiber] : full_fibers()) {
    if (fiber.size() < 2 || cert.n > 8) continue;
    const auto a = intersection_graph(fiber[0].min_rep);
    for (std::size_t i = 1; i < fiber.size(); ++i) CHECK(oracle::brute_isomorphic(a, intersection_graph(fiber[i].min_rep)));
  }
  // Distinct certificates among small orbits are never isomorphic.
  std::vector<IntersectionGraph> small;
  std::vector<CombCertificate> certs;
  for (const auto& [cert, fiber] : full_fibers())
    if (cert.n == 4) {
      small.push_back(intersection_graph(fiber[0].min_rep));
      certs.push_back(cert);
    }
  for (std::size_t i = 0; i < small.size(); ++i)
    for (std::size_t j = i + 1; j < small.size(); ++j) CHECK_FALSE(oracle::brute_isomorphic(small[i], small[j]));
}

TEST_CASE("Zariski pairs and their separating invariants") {
  const auto tuples = find_zariski_pairs(full_fibers());
  REQUIRE(tuples.size() == 2);
  CHECK(tuples[0].separated_by == std::vector<std::string>{"perp_parity"});
  CHECK(tuples[0].fully_separated);
  CHECK(tuples[0].reports[0].perp_parity == Parity::odd);
  CHECK(tuples[0].reports[1].perp_parity == Parity::even);
  CHECK(tuples[1].fully_separated);
  CHECK(std::find(tuples[1].separated_by.begin(), tuples[1].separated_by.end(), "h1") != tuples[1].separated_by.end());
  CHECK(tuples[1].reports[0].h1_torsion == IntVector{2});
  CHECK(tuples[1].reports[1].h1_torsion.empty());
  CHECK(unseparated_orbits(full_fibers()).empty());
}

TEST_CASE("unseparated orbits are detected") {
  // Two copies of one orbit in a fiber carry identical invariants.
  const auto& records = full_records();
  TypeFibers fake;
  fake[CombCertificate{1, ""}] = {records[1], records[1]};
  const auto groups = unseparated_orbits(fake);
  REQUIRE(groups.size() == 1);
  CHECK(groups[0].size() == 2);
  const auto tuples = find_zariski_pairs(fake);
  REQUIRE(tuples.size() == 1);
  CHECK_FALSE(tuples[0].fully_separated);
  CHECK(tuples[0].separated_by.empty());
}
