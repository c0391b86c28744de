#include "weyl27/lines.hpp"

#include <stdexcept>

namespace weyl27 {

const GramLattice& ambient_lattice() {
  static const GramLattice lattice(IntMatrix::diagonal({1, -1, -1, -1, -1, -1, -1}));
  return lattice;
}

const IntVector& anticanonical_class() {
  static const IntVector k{3, -1, -1, -1, -1, -1, -1};
  return k;
}

const std::vector<IntVector>& e6_simple_roots() {
  static const std::vector<IntVector> roots{
      {-1, 0, 0, 0, 1, 1, 1}, {0, 1, -1, 0, 0, 0, 0}, {0, 0, 1, -1, 0, 0, 0},
      {0, 0, 0, 1, -1, 0, 0}, {0, 0, 0, 0, 1, -1, 0}, {0, 0, 0, 0, 0, 1, -1},
  };
  return roots;
}

bool Isometry::preserves(const GramLattice& lattice) const {
  return matrix * lattice.gram * matrix.transpose() == lattice.gram;
}

Isometry operator*(const Isometry& a, const Isometry& b) { return Isometry{a.matrix * b.matrix}; }

std::size_t LineSystem::index_of(const IntVector& cls) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i] == cls) return i;
  return kNumLines;
}

std::string LineSystem::label(std::size_t index) {
  if (index < 6) return std::to_string(index + 1);
  if (index < 21) {
    std::size_t k = 6;
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j, ++k)
        if (k == index) return std::to_string(i) + std::to_string(j);
  }
  if (index < kNumLines) return "bar" + std::to_string(index - 20);
  throw std::out_of_range("line index out of range");
}

LineSystem build_line_system() {
  LineSystem ls;
  for (std::size_t i = 1; i <= 6; ++i) {
    IntVector e(kAmbientRank, 0);
    e[i] = 1;
    ls.classes.push_back(e);
  }
  for (std::size_t i = 1; i <= 6; ++i)
    for (std::size_t j = i + 1; j <= 6; ++j) {
      IntVector v(kAmbientRank, 0);
      v[0] = 1;
      v[i] = -1;
      v[j] = -1;
      ls.classes.push_back(v);
    }
  for (std::size_t k = 1; k <= 6; ++k) {
    IntVector v{2, -1, -1, -1, -1, -1, -1};
    v[k] = 0;
    ls.classes.push_back(v);
  }
  const GramLattice& lat = ambient_lattice();
  for (std::size_t a = 0; a < kNumLines; ++a)
    for (std::size_t b = 0; b < kNumLines; ++b)
      ls.inter[a][b] = static_cast<int>(inner_product(ls.classes[a], ls.classes[b], lat));
  return ls;
}

const LineSystem& cubic_lines() {
  static const LineSystem ls = build_line_system();
  return ls;
}

Isometry reflection(const IntVector& root) {
  const GramLattice& lat = ambient_lattice();
  if (inner_product(root, root, lat) != -2) throw std::invalid_argument("reflection: root must have norm -2");
  // x * (I + G r^T r) = x + <x, r> r
  const IntMatrix r = IntMatrix::from_rows({root}, lat.rank);
  Isometry g{IntMatrix::identity(lat.rank)};
  const IntMatrix delta = lat.gram * r.transpose() * r;
  for (std::size_t i = 0; i < lat.rank; ++i)
    for (std::size_t j = 0; j < lat.rank; ++j) g.matrix(i, j) = checked_add(g.matrix(i, j), delta(i, j));
  return g;
}

Permutation isometry_to_permutation(const Isometry& g, const LineSystem& lines) {
  std::array<std::uint8_t, kNumLines> img{};
  for (std::size_t i = 0; i < kNumLines; ++i) {
    const std::size_t j = lines.index_of(g.apply(lines.classes[i]));
    if (j == kNumLines) throw std::invalid_argument("isometry does not map line classes to line classes");
    img[i] = static_cast<std::uint8_t>(j);
  }
  return Permutation(img);
}

Isometry permutation_to_isometry(const Permutation& pi, const LineSystem& lines) {
  // Lines 1..7 are e1..e6 and h - e1 - e2, a Z-basis of the ambient lattice.
  std::vector<IntVector> src, dst;
  for (std::size_t i = 0; i < kAmbientRank; ++i) {
    src.push_back(lines.classes[i]);
    dst.push_back(lines.classes[pi(i)]);
  }
  const IntMatrix b = IntMatrix::from_rows(src, kAmbientRank);
  const IntMatrix b_img = IntMatrix::from_rows(dst, kAmbientRank);
  Isometry g{unimodular_inverse(b) * b_img};
  for (std::size_t i = 0; i < kNumLines; ++i)
    if (g.apply(lines.classes[i]) != lines.classes[pi(i)])
      throw std::invalid_argument("permutation is not induced by a lattice isometry");
  return g;
}

bool verify_dynkin(const std::vector<IntVector>& roots) {
  if (roots.size() != 6) return false;
  const GramLattice& lat = ambient_lattice();
  static constexpr std::array<std::array<int, 2>, 5> edges{{{0, 3}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}};
  for (const auto& r : roots)
    if (r.size() != lat.rank) return false;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      Int expected = 0;
      if (i == j) {
        expected = -2;
      } else {
        for (const auto& e : edges)
          if ((e[0] == static_cast<int>(i) && e[1] == static_cast<int>(j)) ||
              (e[1] == static_cast<int>(i) && e[0] == static_cast<int>(j)))
            expected = 1;
      }
      if (inner_product(roots[i], roots[j], lat) != expected) return false;
    }
  return true;
}

std::vector<Permutation> reflection_permutations(const std::vector<IntVector>& roots, const LineSystem& lines) {
  std::vector<Permutation> out;
  out.reserve(roots.size());
  for (const auto& r : roots) out.push_back(isometry_to_permutation(reflection(r), lines));
  return out;
}

const PermutationGroup& weyl_e6() {
  static const PermutationGroup g = generate_group(reflection_permutations(e6_simple_roots(), cubic_lines()));
  return g;
}

}  // namespace weyl27
