#include "weyl27/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace weyl27 {

IntersectionGraph IntersectionGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0 || n > 32) throw std::invalid_argument("graph size must lie in 0..32");
  IntersectionGraph g;
  g.n = n;
  g.adj.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) g.vertex_lines.push_back(i + 1);
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw std::invalid_argument("bad edge");
    g.adj[static_cast<std::size_t>(a)] |= 1u << b;
    g.adj[static_cast<std::size_t>(b)] |= 1u << a;
  }
  return g;
}

IntersectionGraph intersection_graph(Arrangement s, const LineSystem& lines) {
  IntersectionGraph g;
  g.vertex_lines = s.indices();
  g.n = static_cast<int>(g.vertex_lines.size());
  g.adj.assign(g.vertex_lines.size(), 0);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      if (i == j) continue;
      const auto a = static_cast<std::size_t>(g.vertex_lines[static_cast<std::size_t>(i)] - 1);
      const auto b = static_cast<std::size_t>(g.vertex_lines[static_cast<std::size_t>(j)] - 1);
      if (lines.inter[a][b] == 1) g.adj[static_cast<std::size_t>(i)] |= 1u << j;
    }
  return g;
}

namespace {

using Cell = std::vector<int>;
using Partition = std::vector<Cell>;

class Canonizer {
 public:
  explicit Canonizer(const IntersectionGraph& g) : g_(g) {}

  std::vector<std::uint8_t> run() {
    Partition root;
    if (g_.n > 0) {
      Cell all(static_cast<std::size_t>(g_.n));
      std::iota(all.begin(), all.end(), 0);
      root.push_back(std::move(all));
    }
    std::vector<int> prefix;
    search(std::move(root), prefix, 0);
    return best_bits_.value_or(std::vector<std::uint8_t>{});
  }

 private:
  std::uint32_t cell_mask(const Cell& c) const {
    std::uint32_t m = 0;
    for (int v : c) m |= 1u << v;
    return m;
  }

  // Split every cell by its vertices' neighbour counts into all cells until
  // stable. Sub-cells are ordered by signature, which keeps the procedure
  // independent of vertex names.
  void refine(Partition& p) const {
    for (;;) {
      std::vector<std::uint32_t> masks;
      masks.reserve(p.size());
      for (const auto& c : p) masks.push_back(cell_mask(c));
      Partition next;
      next.reserve(static_cast<std::size_t>(g_.n));
      for (const auto& c : p) {
        if (c.size() == 1) {
          next.push_back(c);
          continue;
        }
        std::vector<std::pair<std::vector<int>, int>> sig;
        sig.reserve(c.size());
        for (int v : c) {
          std::vector<int> counts(masks.size());
          for (std::size_t k = 0; k < masks.size(); ++k)
            counts[k] = std::popcount(g_.adj[static_cast<std::size_t>(v)] & masks[k]);
          sig.emplace_back(std::move(counts), v);
        }
        std::stable_sort(sig.begin(), sig.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 0; i < sig.size();) {
          Cell sub;
          std::size_t j = i;
          while (j < sig.size() && sig[j].first == sig[i].first) sub.push_back(sig[j++].second);
          next.push_back(std::move(sub));
          i = j;
        }
      }
      const bool changed = next.size() != p.size();
      p = std::move(next);
      if (!changed) return;
    }
  }

  // Cell sizes and the quotient matrix of an equitable partition.
  std::vector<int> node_invariant(const Partition& p) const {
    std::vector<std::uint32_t> masks;
    for (const auto& c : p) masks.push_back(cell_mask(c));
    std::vector<int> inv;
    inv.reserve(p.size() * (p.size() + 1));
    for (const auto& c : p) {
      inv.push_back(static_cast<int>(c.size()));
      for (std::uint32_t m : masks) inv.push_back(std::popcount(g_.adj[static_cast<std::size_t>(c.front())] & m));
    }
    return inv;
  }

  std::vector<std::uint8_t> bits_for(const std::vector<int>& lab) const {
    std::vector<std::uint8_t> bits;
    bits.reserve(lab.size() * lab.size() / 2);
    for (std::size_t i = 0; i < lab.size(); ++i)
      for (std::size_t j = i + 1; j < lab.size(); ++j) bits.push_back(g_.edge(lab[i], lab[j]) ? 1 : 0);
    return bits;
  }

  // Orbit representative of v under the found automorphisms that fix the
  // current prefix pointwise.
  int orbit_root(int v, const std::vector<int>& prefix) const {
    std::vector<int> parent(static_cast<std::size_t>(g_.n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    for (const auto& a : autos_) {
      bool fixes = true;
      for (int x : prefix)
        if (a[static_cast<std::size_t>(x)] != x) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int x = 0; x < g_.n; ++x) {
        const int rx = find(x), ry = find(a[static_cast<std::size_t>(x)]);
        if (rx != ry) parent[static_cast<std::size_t>(std::max(rx, ry))] = std::min(rx, ry);
      }
    }
    return find(v);
  }

  void search(Partition p, std::vector<int>& prefix, std::size_t depth) {
    refine(p);
    std::vector<int> inv = node_invariant(p);
    if (depth < trace_.size()) {
      if (inv > trace_[depth]) return;
      if (inv < trace_[depth]) {
        trace_.resize(depth);
        trace_.push_back(std::move(inv));
        best_bits_.reset();
      }
    } else {
      trace_.push_back(std::move(inv));
    }

    const auto target = std::find_if(p.begin(), p.end(), [](const Cell& c) { return c.size() > 1; });
    if (target == p.end()) {
      std::vector<int> lab;
      lab.reserve(p.size());
      for (const auto& c : p) lab.push_back(c.front());
      std::vector<std::uint8_t> bits = bits_for(lab);
      if (!best_bits_ || bits < *best_bits_) {
        best_bits_ = std::move(bits);
        best_lab_ = std::move(lab);
      } else if (bits == *best_bits_) {
        std::vector<int> a(static_cast<std::size_t>(g_.n));
        for (std::size_t i = 0; i < lab.size(); ++i) a[static_cast<std::size_t>(lab[i])] = best_lab_[i];
        autos_.push_back(std::move(a));
      }
      return;
    }

    const std::size_t t = static_cast<std::size_t>(target - p.begin());
    const Cell cell = *target;
    std::vector<int> explored_roots;
    for (int v : cell) {
      const int root = orbit_root(v, prefix);
      bool seen = false;
      for (int e : explored_roots)
        if (orbit_root(e, prefix) == root) {
          seen = true;
          break;
        }
      if (seen) continue;

      Partition child;
      child.reserve(p.size() + 1);
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (k != t) {
          child.push_back(p[k]);
          continue;
        }
        child.push_back(Cell{v});
        Cell rest;
        for (int w : cell)
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      prefix.push_back(v);
      search(std::move(child), prefix, depth + 1);
      prefix.pop_back();
      explored_roots.push_back(v);
    }
  }

  const IntersectionGraph& g_;
  std::vector<std::vector<int>> trace_;
  std::optional<std::vector<std::uint8_t>> best_bits_;
  std::vector<int> best_lab_;
  std::vector<std::vector<int>> autos_;
};

std::string pack_hex(const std::vector<std::uint8_t>& bits) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  for (std::size_t i = 0; i < bits.size(); i += 8) {
    unsigned byte = 0;
    for (std::size_t k = 0; k < 8; ++k) byte = (byte << 1) | (i + k < bits.size() ? bits[i + k] : 0u);
    out += digits[byte >> 4];
    out += digits[byte & 15];
  }
  return out;
}

}  // namespace

CombCertificate canonical_certificate(const IntersectionGraph& g) {
  if (g.n > 32) throw std::invalid_argument("canonical_certificate: at most 32 vertices");
  return CombCertificate{g.n, pack_hex(Canonizer(g).run())};
}

std::vector<CombCertificate> certificates(const std::vector<OrbitRecord>& records, int workers,
                                          const LineSystem& lines) {
  std::vector<CombCertificate> out(records.size());
  const auto count = static_cast<std::ptrdiff_t>(records.size());
  if (workers == 0) {
    for (std::ptrdiff_t i = 0; i < count; ++i)
      out[static_cast<std::size_t>(i)] =
          canonical_certificate(intersection_graph(records[static_cast<std::size_t>(i)].min_rep, lines));
    return out;
  }
#pragma omp parallel for schedule(dynamic, 8) num_threads(workers)
  for (std::ptrdiff_t i = 0; i < count; ++i)
    out[static_cast<std::size_t>(i)] =
        canonical_certificate(intersection_graph(records[static_cast<std::size_t>(i)].min_rep, lines));
  return out;
}

TypeFibers classify_types(const std::vector<OrbitRecord>& records, int workers, const LineSystem& lines) {
  const std::vector<CombCertificate> certs = certificates(records, workers, lines);
  TypeFibers fibers;
  for (std::size_t i = 0; i < records.size(); ++i) fibers[certs[i]].push_back(records[i]);
  return fibers;
}

namespace {

struct InvariantKey {
  Parity parity;
  IntVector torsion;
  std::size_t free_rank;
  friend auto operator<=>(const InvariantKey&, const InvariantKey&) = default;
};

InvariantKey key_of(const InvariantReport& r) { return {r.perp_parity, r.h1_torsion, r.h1_free_rank}; }

}  // namespace

std::vector<ZariskiTuple> find_zariski_pairs(const TypeFibers& fibers, const LineSystem& lines) {
  std::vector<ZariskiTuple> out;
  for (const auto& [cert, members] : fibers) {
    if (members.size() < 2) continue;
    ZariskiTuple z;
    z.certificate = cert;
    z.members = members;
    for (const auto& m : members) z.reports.push_back(invariant_report(m.min_rep, lines));
    bool parity_differs = false, h1_differs = false;
    for (const auto& r : z.reports) {
      parity_differs |= r.perp_parity != z.reports.front().perp_parity;
      h1_differs |= r.h1_torsion != z.reports.front().h1_torsion || r.h1_free_rank != z.reports.front().h1_free_rank;
    }
    if (parity_differs) z.separated_by.push_back("perp_parity");
    if (h1_differs) z.separated_by.push_back("h1");
    std::map<InvariantKey, int> seen;
    for (const auto& r : z.reports) ++seen[key_of(r)];
    z.fully_separated = seen.size() == z.reports.size();
    out.push_back(std::move(z));
  }
  return out;
}

std::vector<std::vector<OrbitRecord>> unseparated_orbits(const TypeFibers& fibers, const LineSystem& lines) {
  std::vector<std::vector<OrbitRecord>> out;
  for (const auto& [cert, members] : fibers) {
    if (members.size() < 2) continue;
    std::map<InvariantKey, std::vector<OrbitRecord>> groups;
    for (const auto& m : members) groups[key_of(invariant_report(m.min_rep, lines))].push_back(m);
    for (auto& [key, group] : groups)
      if (group.size() > 1) out.push_back(std::move(group));
  }
  return out;
}

}  // namespace weyl27
