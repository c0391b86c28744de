#include "weyl27/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "weyl27/combinatorics.hpp"
#include "weyl27/enumerate.hpp"
#include "weyl27/invariants.hpp"
#include "weyl27/lines.hpp"
#include "weyl27/oracles.hpp"
#include "weyl27/report.hpp"

namespace weyl27 {

namespace {

// Runtime limits, in seconds.
constexpr double kGroupSeconds = 10.0;
constexpr double kLineSystemSeconds = 1.0;
constexpr double kEnumerateSerialSeconds = 600.0;
constexpr double kEnumerateEightWorkerSeconds = 120.0;

// Property suite sizes.
constexpr int kSnfTrials = 1000;
constexpr int kSnfMaxDim = 8;
constexpr int kSnfEntryBound = 9;
constexpr int kParityTrials = 100;
constexpr int kParityMaxRank = 4;
constexpr int kCertificateMaxVertices = 5;
constexpr int kInvarianceMaxSize = 3;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Pipeline {
  std::vector<OrbitRecord> records;
  double enumerate_seconds = 0.0;
  TypeFibers fibers;
};

CheckResult timed(std::string id, std::string name, const std::function<bool(std::ostringstream&)>& body) {
  CheckResult r{std::move(id), std::move(name), false, "", 0.0};
  std::ostringstream detail;
  const auto t0 = Clock::now();
  try {
    r.pass = body(detail);
  } catch (const std::exception& ex) {
    detail << "exception: " << ex.what();
    r.pass = false;
  }
  r.seconds = seconds_since(t0);
  r.detail = detail.str();
  return r;
}

const OrbitRecord* find_record(const std::vector<OrbitRecord>& records, Arrangement s) {
  for (const auto& r : records)
    if (r.min_rep == s) return &r;
  return nullptr;
}

bool check_group(const Expectations& e, std::ostringstream& out) {
  const auto t0 = Clock::now();
  const LineSystem lines = build_line_system();
  const auto perms = reflection_permutations(e6_simple_roots(), lines);
  const PermutationGroup g = generate_group(perms);
  const double secs = seconds_since(t0);

  bool ok = verify_dynkin(e6_simple_roots());
  if (!ok) out << "roots do not form the E6 diagram; ";
  for (const auto& r : e6_simple_roots()) {
    const Isometry s = reflection(r);
    if (!s.preserves(ambient_lattice()) || !s.fixes(anticanonical_class())) {
      ok = false;
      out << "reflection fails to be an isometry fixing -K; ";
    }
  }
  if (inner_product(anticanonical_class(), anticanonical_class(), ambient_lattice()) != e.anticanonical_norm) {
    ok = false;
    out << "<-K,-K> mismatch; ";
  }
  if (perms.size() != e.generators.size()) {
    ok = false;
  } else {
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i].cycle_string() != e.generators[i]) {
        ok = false;
        out << "sigma" << i + 1 << " = " << perms[i].cycle_string() << " expected " << e.generators[i] << "; ";
      }
  }
  if (g.order() != e.group_order) {
    ok = false;
    out << "order " << g.order() << " expected " << e.group_order << "; ";
  }
  if (secs >= kGroupSeconds) {
    ok = false;
    out << "too slow; ";
  }
  out << "order " << g.order() << ", six generators byte-match, build " << secs << " s";
  return ok;
}

bool check_lines(const Expectations& e, std::ostringstream& out) {
  const auto t0 = Clock::now();
  const LineSystem ls = build_line_system();
  bool ok = ls.classes.size() == kNumLines;
  for (std::size_t a = 0; a < kNumLines; ++a) {
    int met = 0;
    if (ls.inter[a][a] != -1) ok = false;
    for (std::size_t b = 0; b < kNumLines; ++b) {
      if (ls.inter[a][b] != ls.inter[b][a]) ok = false;
      if (a != b) {
        if (ls.inter[a][b] != 0 && ls.inter[a][b] != 1) ok = false;
        met += ls.inter[a][b];
      }
    }
    if (met != e.lines_met_by_each_line) ok = false;
  }
  for (const auto& pi : weyl_e6().generators())
    for (std::size_t a = 0; a < kNumLines; ++a)
      for (std::size_t b = 0; b < kNumLines; ++b)
        if (ls.inter[pi(a)][pi(b)] != ls.inter[a][b]) ok = false;
  const double secs = seconds_since(t0);
  if (secs >= kLineSystemSeconds) ok = false;
  out << "27 classes, symmetric, diagonal -1, degree " << e.lines_met_by_each_line
      << ", generators preserve the matrix (" << secs << " s)";
  return ok;
}

bool check_table(const Expectations& e, const Pipeline& p, int workers, std::ostringstream& out) {
  const auto counts = counts_by_size(p.records);
  bool ok = counts == e.orbit_counts && p.records.size() == e.total_orbits;
  const double limit = workers >= 8 ? kEnumerateEightWorkerSeconds : kEnumerateSerialSeconds;
  if (p.enumerate_seconds > limit) ok = false;
  out << "counts";
  for (auto c : counts) out << ' ' << c;
  out << "; total " << p.records.size() << "; " << p.enumerate_seconds << " s with " << workers
      << " worker(s), limit " << limit << " s";
  return ok;
}

bool check_partition(const Expectations& e, const Pipeline& p, std::ostringstream& out) {
  std::uint64_t sum = 0;
  bool divides = true;
  for (const auto& r : p.records) {
    sum += r.orbit_size;
    if (e.group_order % r.orbit_size != 0) divides = false;
  }
  out << "sum " << sum << ", all sizes divide " << e.group_order << ": " << (divides ? "yes" : "no");
  return sum == e.orbit_size_sum && divides;
}

bool check_fibers(const Expectations& e, const Pipeline& p, std::ostringstream& out) {
  std::vector<std::vector<std::vector<int>>> large;
  for (const auto& [cert, members] : p.fibers) {
    if (members.size() < 2) continue;
    std::vector<std::vector<int>> reps;
    for (const auto& m : members) reps.push_back(m.min_rep.indices());
    large.push_back(std::move(reps));
  }
  std::vector<std::vector<std::vector<int>>> expected;
  for (const auto& t : e.zariski_tuples) expected.push_back(t.members);
  std::sort(large.begin(), large.end());
  std::sort(expected.begin(), expected.end());
  out << p.fibers.size() << " combinatorial types, " << large.size() << " fiber(s) of size > 1:";
  for (const auto& f : large) {
    out << " {";
    for (const auto& r : f) out << format_indices(Arrangement::from_indices(r));
    out << "}";
  }
  return large == expected;
}

bool check_orbit_sizes(const Expectations& e, const Pipeline& p, std::ostringstream& out) {
  bool ok = true;
  const PermutationGroup& g = weyl_e6();
  for (const auto& t : e.zariski_tuples)
    for (std::size_t i = 0; i < t.members.size(); ++i) {
      const Arrangement s = Arrangement::from_indices(t.members[i]);
      const std::uint64_t hashed = orbit_size(s, g);
      const OrbitRecord* rec = find_record(p.records, s);
      const bool match = hashed == t.orbit_sizes[i] && rec && rec->orbit_size == hashed;
      ok &= match;
      out << format_indices(s) << "=" << hashed << (match ? " " : "(!) ");
    }
  return ok;
}

bool check_invariants(const Expectations& e, std::ostringstream& out) {
  bool ok = true;
  for (const auto& t : e.zariski_tuples)
    for (std::size_t i = 0; i < t.members.size(); ++i) {
      const Arrangement s = Arrangement::from_indices(t.members[i]);
      if (!t.perp_parity.empty()) {
        const std::string got = to_string(perp_parity(s));
        ok &= got == t.perp_parity[i];
        out << "parity" << format_indices(s) << "=" << got << " ";
      }
      if (!t.h1_torsion.empty()) {
        const CokernelInvariants h1 = h1_complement(s);
        ok &= h1.torsion == t.h1_torsion[i] && h1.free_rank == t.h1_free_rank[i];
        out << "H1" << format_indices(s) << "=" << format_group(h1.torsion, h1.free_rank) << " ";
      }
    }
  return ok;
}

bool check_disjoint_five(const Expectations& e, const Pipeline& p, std::ostringstream& out) {
  // Oracle route: list every 5-set of pairwise disjoint lines and join them
  // along generator images.
  const auto subsets = oracle::pairwise_disjoint_subsets(cubic_lines(), 5);
  const auto orbits = oracle::orbits_by_union_find(subsets, weyl_e6().generators());
  std::vector<std::uint64_t> sizes;
  for (const auto& o : orbits) sizes.push_back(o.size());
  std::sort(sizes.rbegin(), sizes.rend());
  std::vector<std::uint64_t> expected = e.disjoint_five_sizes;
  std::sort(expected.rbegin(), expected.rend());

  // Enumerator route: edgeless 5-vertex fiber.
  std::size_t via_fibers = 0;
  const CombCertificate edgeless = canonical_certificate(IntersectionGraph::from_edges(5, {}));
  if (auto it = p.fibers.find(edgeless); it != p.fibers.end()) via_fibers = it->second.size();

  out << subsets.size() << " disjoint 5-sets in " << orbits.size() << " orbits of sizes";
  for (auto s : sizes) out << ' ' << s;
  out << "; edgeless 5-vertex fiber has " << via_fibers << " orbits";
  return orbits.size() == e.disjoint_five_count && sizes == expected && via_fibers == e.disjoint_five_count;
}

bool check_snf_property(std::mt19937_64& rng, std::ostringstream& out) {
  std::uniform_int_distribution<int> dim(1, kSnfMaxDim);
  std::uniform_int_distribution<Int> entry(-kSnfEntryBound, kSnfEntryBound);
  int failures = 0;
  for (int trial = 0; trial < kSnfTrials; ++trial) {
    IntMatrix a(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
    const SNFResult s = smith_normal_form(a);
    bool ok = oracle::product_equals(s.u, a, s.v, s.d);
    ok &= oracle::is_unimodular(s.u) && oracle::is_unimodular(s.v);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (i != j && s.d(i, j) != 0) ok = false;
        if (i == j && (s.d(i, i) < 0 || (i < s.rank) != (s.d(i, i) != 0))) ok = false;
      }
    for (std::size_t i = 0; i + 1 < s.rank; ++i)
      if (s.d(i + 1, i + 1) % s.d(i, i) != 0) ok = false;
    if (!ok) ++failures;
  }
  out << "SNF " << kSnfTrials - failures << "/" << kSnfTrials;
  return failures == 0;
}

bool check_parity_property(std::mt19937_64& rng, std::ostringstream& out) {
  std::uniform_int_distribution<int> dim(1, kParityMaxRank);
  std::uniform_int_distribution<Int> entry(-3, 3);
  int failures = 0;
  for (int trial = 0; trial < kParityTrials; ++trial) {
    const auto r = static_cast<std::size_t>(dim(rng));
    IntMatrix g(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i; j < r; ++j) g(i, j) = g(j, i) = entry(rng);
    if (is_even(g) != oracle::box_is_even(g)) ++failures;
  }
  out << "; parity " << kParityTrials - failures << "/" << kParityTrials;
  return failures == 0;
}

bool check_certificate_property(std::ostringstream& out) {
  std::size_t graphs = 0;
  bool ok = true;
  for (int n = 0; n <= kCertificateMaxVertices; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::map<std::vector<std::uint8_t>, std::set<CombCertificate>> by_brute;
    std::map<CombCertificate, std::set<std::vector<std::uint8_t>>> by_cert;
    for (std::uint32_t bits = 0; bits < (1u << pairs.size()); ++bits) {
      std::vector<std::pair<int, int>> edges;
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if ((bits >> k) & 1u) edges.push_back(pairs[k]);
      const IntersectionGraph g = IntersectionGraph::from_edges(n, edges);
      const auto brute = oracle::brute_canonical_bits(g);
      const auto cert = canonical_certificate(g);
      by_brute[brute].insert(cert);
      by_cert[cert].insert(brute);
      ++graphs;
    }
    for (const auto& [k, v] : by_brute) ok &= v.size() == 1;
    for (const auto& [k, v] : by_cert) ok &= v.size() == 1;
  }
  out << "; certificates agree with exhaustive isomorphism on " << graphs << " labeled graphs";
  return ok;
}

bool check_invariance_property(std::ostringstream& out) {
  const auto& gens = weyl_e6().generators();
  std::size_t tested = 0;
  bool ok = true;
  std::vector<std::uint32_t> masks{0};
  for (int size = 1; size <= kInvarianceMaxSize; ++size) {
    const std::size_t begin = masks.size();
    for (std::size_t i = 0; i < begin; ++i) {
      if (std::popcount(masks[i]) != size - 1) continue;
      const int last = Arrangement{masks[i]}.last();
      for (int j = last + 1; j < static_cast<int>(kNumLines); ++j) masks.push_back(masks[i] | (1u << j));
    }
  }
  for (std::uint32_t m : masks) {
    const InvariantReport base = invariant_report(Arrangement{m});
    for (const auto& g : gens) {
      InvariantReport img = invariant_report(apply_perm(Arrangement{m}, g));
      img.arrangement = base.arrangement;
      ok &= img == base;
    }
    ++tested;
  }
  out << "; invariants W(E6)-stable on all " << tested << " arrangements with <= " << kInvarianceMaxSize
      << " lines";
  return ok;
}

bool check_corollary(const Pipeline& p, std::ostringstream& out) {
  const auto unsep = unseparated_orbits(p.fibers);
  std::set<std::pair<CombCertificate, std::string>> classes;
  for (const auto& [cert, members] : p.fibers)
    for (const auto& m : members) {
      const InvariantReport r = invariant_report(m.min_rep);
      classes.emplace(cert, to_string(r.perp_parity) + "|" + format_group(r.h1_torsion, r.h1_free_rank));
    }
  out << classes.size() << " classes under (type, parity, H1) for " << p.records.size() << " orbits; "
      << unsep.size() << " unseparated group(s)";
  return unsep.empty() && classes.size() == p.records.size();
}

}  // namespace

std::vector<CheckResult> run_acceptance(const Expectations& e, const AcceptanceOptions& opt) {
  std::vector<CheckResult> results;
  std::mt19937_64 rng(opt.seed);

  results.push_back(timed("AC1", "group construction", [&](auto& out) { return check_group(e, out); }));
  results.push_back(timed("AC2", "line system", [&](auto& out) { return check_lines(e, out); }));

  Pipeline p;
  {
    const auto t0 = Clock::now();
    p.records = enumerate_all(weyl_e6(), opt.workers);
    p.enumerate_seconds = seconds_since(t0);
    p.fibers = classify_types(p.records, opt.workers);
  }

  results.push_back(
      timed("AC3", "orbit enumeration counts", [&](auto& out) { return check_table(e, p, opt.workers, out); }));
  results.push_back(timed("AC4", "orbit partition of 2^27", [&](auto& out) { return check_partition(e, p, out); }));
  results.push_back(timed("AC5", "combinatorial fibers", [&](auto& out) { return check_fibers(e, p, out); }));
  results.push_back(timed("AC6", "orbit sizes", [&](auto& out) { return check_orbit_sizes(e, p, out); }));
  results.push_back(timed("AC7", "lattice invariants", [&](auto& out) { return check_invariants(e, out); }));
  results.push_back(
      timed("AC8", "five disjoint lines split in two orbits", [&](auto& out) { return check_disjoint_five(e, p, out); }));
  results.push_back(timed("AC9", "property suites", [&](auto& out) {
    bool ok = check_snf_property(rng, out);
    ok &= check_parity_property(rng, out);
    ok &= check_certificate_property(out);
    ok &= check_invariance_property(out);
    return ok;
  }));
  results.push_back(
      timed("AC10", "deformation classes equal invariant classes", [&](auto& out) { return check_corollary(p, out); }));

  if (opt.compare_reference) {
    results.push_back(timed("X1", "serial reference kernel agrees", [&](auto& out) {
      const auto ref = enumerate_all(weyl_e6(), 0);
      out << ref.size() << " records compared against " << opt.workers << "-worker run";
      return ref == p.records;
    }));
  }
  return results;
}

void print_results(std::ostream& os, const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.3f", r.seconds);
    os << (r.pass ? "PASS " : "FAIL ") << r.id << ' ' << r.name << " (" << secs << " s): " << r.detail << '\n';
  }
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

}  // namespace weyl27
