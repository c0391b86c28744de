#include "weyl27/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "weyl27/arrangement.hpp"

namespace weyl27::oracle {

std::vector<std::uint8_t> brute_canonical_bits(const IntersectionGraph& g) {
  if (g.n > 8) throw std::invalid_argument("brute_canonical_bits: too many vertices");
  std::vector<int> lab(static_cast<std::size_t>(g.n));
  std::iota(lab.begin(), lab.end(), 0);
  std::vector<std::uint8_t> best;
  bool have = false;
  do {
    std::vector<std::uint8_t> bits;
    for (std::size_t i = 0; i < lab.size(); ++i)
      for (std::size_t j = i + 1; j < lab.size(); ++j) bits.push_back(g.edge(lab[i], lab[j]) ? 1 : 0);
    if (!have || bits < best) {
      best = std::move(bits);
      have = true;
    }
  } while (std::next_permutation(lab.begin(), lab.end()));
  return best;
}

bool brute_isomorphic(const IntersectionGraph& a, const IntersectionGraph& b) {
  if (a.n != b.n) return false;
  std::vector<int> p(static_cast<std::size_t>(a.n));
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < a.n && ok; ++i)
      for (int j = i + 1; j < a.n; ++j)
        if (a.edge(i, j) != b.edge(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)])) {
          ok = false;
          break;
        }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

namespace {

using U64 = std::uint64_t;
using U128 = unsigned __int128;

U64 mul_mod(U64 a, U64 b, U64 m) { return static_cast<U64>(static_cast<U128>(a) * b % m); }

U64 pow_mod(U64 b, U64 e, U64 m) {
  U64 r = 1;
  for (b %= m; e; e >>= 1, b = mul_mod(b, b, m))
    if (e & 1) r = mul_mod(r, b, m);
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(U64 n) {
  if (n < 2) return false;
  for (U64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    if (n % p == 0) return n == p;
  U64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (U64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    U64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s && composite; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

U64 det_mod(const IntMatrix& m, U64 p) {
  const std::size_t n = m.rows();
  std::vector<U64> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Int x = m(i, j) % static_cast<Int>(p);
      a[i * n + j] = static_cast<U64>(x < 0 ? x + static_cast<Int>(p) : x);
    }
  U64 det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv * n + c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[c * n + j], a[piv * n + j]);
      det = p - det;
    }
    det = mul_mod(det, a[c * n + c], p);
    const U64 inv = pow_mod(a[c * n + c], p - 2, p);
    for (std::size_t r = c + 1; r < n; ++r) {
      const U64 f = mul_mod(a[r * n + c], inv, p);
      if (f == 0) continue;
      for (std::size_t j = c; j < n; ++j) a[r * n + j] = (a[r * n + j] + p - mul_mod(f, a[c * n + j], p)) % p;
    }
  }
  return det % p;
}

}  // namespace

bool product_equals(const IntMatrix& u, const IntMatrix& a, const IntMatrix& v, const IntMatrix& d) {
  if (u.cols() != a.rows() || a.cols() != v.rows() || d.rows() != u.rows() || d.cols() != v.cols()) return false;
  std::vector<__int128> ua(u.rows() * a.cols(), 0);
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t k = 0; k < a.rows(); ++k)
      for (std::size_t j = 0; j < a.cols(); ++j) ua[i * a.cols() + j] += static_cast<__int128>(u(i, k)) * a(k, j);
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < v.cols(); ++j) {
      __int128 total = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        __int128 term;
        if (__builtin_mul_overflow(ua[i * a.cols() + k], static_cast<__int128>(v(k, j)), &term) ||
            __builtin_add_overflow(total, term, &total))
          throw std::overflow_error("product_equals: 128-bit overflow");
      }
      if (total != d(i, j)) return false;
    }
  return true;
}

bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  // log2 of the Hadamard bound, plus one bit for the sign.
  double bits = 1.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    long double norm2 = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) norm2 += static_cast<long double>(m(i, j)) * m(i, j);
    if (norm2 == 0) return false;
    bits += 0.5 * std::log2(static_cast<double>(norm2));
  }
  // det = +1 or -1 exactly when it is congruent to the same one of them
  // modulo primes whose product exceeds twice the bound.
  int sign = 0;
  U64 candidate = (U64{1} << 62) - 1;
  for (double covered = 0; covered < bits; --candidate) {
    if (!is_prime(candidate)) continue;
    const U64 r = det_mod(m, candidate);
    const int s = r == 1 ? 1 : (r == candidate - 1 ? -1 : 0);
    if (s == 0 || (sign != 0 && s != sign)) return false;
    sign = s;
    covered += 61.9;
  }
  return true;
}

bool box_is_even(const IntMatrix& gram, int radius) {
  const std::size_t r = gram.rows();
  std::vector<Int> x(r, -radius);
  if (r == 0) return true;
  for (;;) {
    Int norm = 0;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) norm += x[i] * gram(i, j) * x[j];
    if (norm % 2 != 0) return false;
    std::size_t k = 0;
    while (k < r && x[k] == radius) x[k++] = -radius;
    if (k == r) return true;
    ++x[k];
  }
}

std::vector<std::vector<std::uint32_t>> orbits_by_union_find(const std::vector<std::uint32_t>& masks,
                                                             const std::vector<Permutation>& gens) {
  std::unordered_map<std::uint32_t, std::size_t> index;
  for (std::size_t i = 0; i < masks.size(); ++i) index.emplace(masks[i], i);
  std::vector<std::size_t> parent(masks.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (const auto& g : gens) {
      const auto it = index.find(apply_perm(Arrangement{masks[i]}, g).mask);
      if (it == index.end()) throw std::invalid_argument("mask set is not closed under the generators");
      const std::size_t a = find(i), b = find(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<std::size_t, std::vector<std::uint32_t>> groups;
  for (std::size_t i = 0; i < masks.size(); ++i) groups[find(i)].push_back(masks[i]);
  std::vector<std::vector<std::uint32_t>> out;
  for (auto& [root, g] : groups) {
    std::sort(g.begin(), g.end());
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<std::uint32_t> pairwise_disjoint_subsets(const LineSystem& lines, int k) {
  std::vector<std::uint32_t> out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(pick.size()) == k) {
      std::uint32_t m = 0;
      for (int p : pick) m |= 1u << p;
      out.push_back(m);
      return;
    }
    for (int c = start; c < static_cast<int>(kNumLines); ++c) {
      bool ok = true;
      for (int p : pick)
        if (lines.inter[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)] != 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      pick.push_back(c);
      self(self, c + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::size_t closure_order(const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation()};
  std::vector<Permutation> frontier{Permutation()};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Permutation y = x * g;
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace weyl27::oracle
