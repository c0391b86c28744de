#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "weyl27/invariants.hpp"
#include "weyl27/lattice.hpp"
#include "weyl27/lines.hpp"
#include "weyl27/oracles.hpp"

using namespace weyl27;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, Int bound) {
  std::uniform_int_distribution<Int> d(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Leibniz expansion, for small n only.
Int leibniz_det(const IntMatrix& m) {
  std::vector<std::size_t> p(m.rows());
  std::iota(p.begin(), p.end(), 0);
  Int total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) ++inversions;
    Int term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < p.size(); ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

void check_snf(const IntMatrix& a) {
  const SNFResult s = smith_normal_form(a);
  CHECK(oracle::product_equals(s.u, a, s.v, s.d));
  CHECK(oracle::is_unimodular(s.u));
  CHECK(oracle::is_unimodular(s.v));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) CHECK(s.d(i, j) == 0);
    }
  for (std::size_t i = 0; i < s.rank; ++i) CHECK(s.d(i, i) > 0);
  for (std::size_t i = s.rank; i < std::min(a.rows(), a.cols()); ++i) CHECK(s.d(i, i) == 0);
  for (std::size_t i = 0; i + 1 < s.rank; ++i) CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
}

}  // namespace

TEST_CASE("inner products in the ambient lattice") {
  const GramLattice& L = ambient_lattice();
  const IntVector h{1, 0, 0, 0, 0, 0, 0};
  const IntVector e1{0, 1, 0, 0, 0, 0, 0};
  CHECK(inner_product(anticanonical_class(), anticanonical_class(), L) == 3);
  CHECK(inner_product(e1, e1, L) == -1);
  CHECK(inner_product(h, e1, L) == 0);
  CHECK_THROWS_AS(inner_product(IntVector{1, 0}, e1, L), std::invalid_argument);
}

TEST_CASE("Gram lattices must be symmetric") {
  CHECK_THROWS_AS(GramLattice(IntMatrix{{1, 2}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(GramLattice(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("Smith normal form examples") {
  SUBCASE("identity is already reduced") {
    const auto s = smith_normal_form(IntMatrix::identity(3));
    CHECK(s.d == IntMatrix::identity(3));
    CHECK(s.rank == 3);
  }
  SUBCASE("2x2 against the gcd / determinant oracle") {
    const IntMatrix a{{2, 4}, {6, 8}};
    // d1 = gcd of entries, d1 * d2 = |det|.
    const Int d1 = std::gcd(std::gcd(a(0, 0), a(0, 1)), std::gcd(a(1, 0), a(1, 1)));
    const Int d2 = std::abs(a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) / d1;
    REQUIRE(d1 == 2);
    REQUIRE(d2 == 4);
    const auto s = smith_normal_form(a);
    CHECK(s.d == IntMatrix::diagonal({d1, d2}));
    check_snf(a);
  }
  SUBCASE("zero matrix") {
    const auto s = smith_normal_form(IntMatrix(2, 3));
    CHECK(s.d == IntMatrix(2, 3));
    CHECK(s.rank == 0);
  }
  SUBCASE("empty matrices") {
    CHECK(smith_normal_form(IntMatrix(0, 0)).rank == 0);
    CHECK(smith_normal_form(IntMatrix(0, 7)).d.rows() == 0);
    CHECK(smith_normal_form(IntMatrix(3, 0)).rank == 0);
  }
  SUBCASE("divisibility needs the row fold") {
    // diag(2, 3) is not in Smith form; its form is diag(1, 6).
    const auto s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
    CHECK(s.d == IntMatrix::diagonal({1, 6}));
  }
}

TEST_CASE("Smith normal form properties on random matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  for (int t = 0; t < 1000; ++t) check_snf(random_matrix(rng, dim(rng), dim(rng), 9));
  // Low rank inputs exercise the zero tail.
  for (int t = 0; t < 50; ++t) {
    const IntMatrix a = random_matrix(rng, dim(rng), 2, 5) * random_matrix(rng, 2, dim(rng), 5);
    check_snf(a);
    CHECK(smith_normal_form(a).rank <= 2);
  }
}

TEST_CASE("Smith normal form is reproducible") {
  std::mt19937_64 rng(11);
  const IntMatrix a = random_matrix(rng, 6, 5, 9);
  const auto s1 = smith_normal_form(a);
  const auto s2 = smith_normal_form(a);
  CHECK(s1.u == s2.u);
  CHECK(s1.v == s2.v);
}

TEST_CASE("modular unimodularity oracle") {
  CHECK(oracle::is_unimodular(IntMatrix{{2, 1}, {1, 1}}));
  CHECK(oracle::is_unimodular(IntMatrix{{0, 1}, {1, 0}}));
  CHECK_FALSE(oracle::is_unimodular(IntMatrix{{2, 0}, {0, 1}}));
  CHECK_FALSE(oracle::is_unimodular(IntMatrix{{1, 1}, {1, 1}}));
  CHECK_FALSE(oracle::is_unimodular(IntMatrix(2, 3)));
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    const IntMatrix m = random_matrix(rng, 4, 4, 3);
    CHECK(oracle::is_unimodular(m) == (std::abs(leibniz_det(m)) == 1));
  }
}

TEST_CASE("large inputs keep transforms within 64 bits") {
  // Inputs whose straightforward reduction overflows intermediate 64-bit values.
  const IntMatrix a{{-8, -7, -7, 6, -1, -4, 3, 8}, {4, 7, -2, 8, -8, -3, 8, 6},  {-5, 3, 4, 0, -9, 6, 5, -9},
                    {1, 6, 5, 4, -3, 3, 1, 8},     {1, 0, -6, 9, 0, -5, 8, 8},   {1, -4, -1, -2, 7, 7, 1, -4},
                    {-4, 4, -1, 0, 1, 0, -9, -1},  {-9, 6, 6, -4, -3, 4, 2, 2}};
  check_snf(a);
  CHECK(smith_normal_form(a).elementary_divisors().back() == std::abs(leibniz_det(a)));
}

TEST_CASE("determinant agrees with the Leibniz expansion") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 5);
    const IntMatrix m = random_matrix(rng, n, n, 6);
    CHECK(determinant(m) == leibniz_det(m));
  }
}

TEST_CASE("unimodular inverse") {
  const IntMatrix m{{2, 1}, {1, 1}};
  CHECK(m * unimodular_inverse(m) == IntMatrix::identity(2));
  CHECK_THROWS_AS(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("Hermite normal form") {
  // Row 1 = A1 - 3 A2 - A4, row 3 = A3 - 5 A4.
  const IntMatrix a{{3, 3, 1, 4}, {0, 1, 0, 0}, {0, 0, 19, 16}, {0, 0, 0, 3}};
  CHECK(hermite_normal_form(a) == IntMatrix{{3, 0, 1, 1}, {0, 1, 0, 0}, {0, 0, 19, 1}, {0, 0, 0, 3}});
  CHECK(hermite_normal_form(IntMatrix{{0, 0}, {0, 0}}).rows() == 0);
  CHECK(hermite_normal_form(IntMatrix{{0, -3}, {0, 6}}) == IntMatrix{{0, 3}});
}

TEST_CASE("Hermite normal form depends only on the row lattice") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int t = 0; t < 100; ++t) {
    const IntMatrix a = random_matrix(rng, dim(rng), dim(rng), 5);
    IntMatrix b = a;
    std::uniform_int_distribution<std::size_t> row(0, a.rows() - 1);
    std::uniform_int_distribution<Int> k(-2, 2);
    for (int op = 0; op < 10; ++op) {
      const std::size_t i = row(rng), j = row(rng);
      if (i != j) b.add_row_multiple(i, j, k(rng));
      if (op % 3 == 0) b.swap_rows(i, j);
    }
    CHECK(hermite_normal_form(a) == hermite_normal_form(b));
  }
}

TEST_CASE("orthogonal complements") {
  const GramLattice& L = ambient_lattice();
  SUBCASE("no generators gives the whole lattice") {
    const auto c = orthogonal_complement({}, L);
    CHECK(IntMatrix::from_rows(c.basis, 7) == IntMatrix::identity(7));
    CHECK(c.gram_restricted == L.gram);
  }
  SUBCASE("a spanning set gives zero") {
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < 7; ++i) gens.push_back(IntMatrix::identity(7).row(i));
    const auto c = orthogonal_complement(gens, L);
    CHECK(c.basis.empty());
    CHECK(c.gram_restricted.rows() == 0);
  }
  SUBCASE("five disjoint exceptional lines") {
    const auto c = orthogonal_complement(sublattice_hs(Arrangement::from_indices({1, 2, 3, 4, 5})), L);
    CHECK(c.basis.size() == 2);
    CHECK_FALSE(is_even(c.gram_restricted));
  }
  SUBCASE("length mismatch") { CHECK_THROWS_AS(orthogonal_complement({IntVector{1, 2}}, L), std::invalid_argument); }
}

TEST_CASE("orthogonal complements are orthogonal and primitive") {
  std::mt19937_64 rng(5);
  const GramLattice& L = ambient_lattice();
  for (int t = 0; t < 100; ++t) {
    std::uniform_int_distribution<int> count(0, 4);
    std::vector<IntVector> gens = random_matrix(rng, static_cast<std::size_t>(count(rng)), 7, 3).row_list();
    const auto c = orthogonal_complement(gens, L);
    for (const auto& x : c.basis)
      for (const auto& g : gens) CHECK(inner_product(x, g, L) == 0);
    CHECK(c.basis.size() == 7 - rank(IntMatrix::from_rows(gens, 7)));
    if (!c.basis.empty()) {
      // Primitive: all elementary divisors of the basis matrix equal 1.
      for (Int d : smith_normal_form(IntMatrix::from_rows(c.basis, 7)).elementary_divisors()) CHECK(d == 1);
    }
  }
}

TEST_CASE("parity of Gram matrices") {
  CHECK(is_even(IntMatrix::diagonal({-2, -2})));
  CHECK_FALSE(is_even(IntMatrix::diagonal({1, -1})));
  CHECK(is_even(IntMatrix(0, 0)));
  CHECK_THROWS_AS(is_even(IntMatrix{{2, 1}, {0, 2}}), std::invalid_argument);

  std::mt19937_64 rng(13);
  std::uniform_int_distribution<Int> entry(-3, 3);
  for (int t = 0; t < 100; ++t) {
    const std::size_t r = 1 + static_cast<std::size_t>(t % 4);
    IntMatrix g(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i; j < r; ++j) g(i, j) = g(j, i) = entry(rng);
    CHECK(is_even(g) == oracle::box_is_even(g));
  }
}

TEST_CASE("cokernel invariants") {
  const auto t1 = cokernel_invariants(restriction_matrix(Arrangement::from_indices({1, 2, 3, 4, 5, 27})), 6);
  CHECK(t1.torsion == IntVector{2});
  CHECK(t1.free_rank == 0);
  const auto t2 = cokernel_invariants(restriction_matrix(Arrangement::from_indices({1, 2, 3, 4, 21, 26})), 6);
  CHECK(t2.torsion.empty());
  CHECK(t2.free_rank == 0);
  const auto empty = cokernel_invariants(IntMatrix(0, 7), 0);
  CHECK(empty.torsion.empty());
  CHECK(empty.free_rank == 0);
  const auto z2 = cokernel_invariants(IntMatrix{{2, 0}, {0, 0}}, 2);
  CHECK(z2.torsion == IntVector{2});
  CHECK(z2.free_rank == 1);
  CHECK_THROWS_AS(cokernel_invariants(IntMatrix(2, 2), 3), std::invalid_argument);
}

TEST_CASE("rank identity for cokernels") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> dim(1, 7);
  for (int t = 0; t < 100; ++t) {
    const IntMatrix a = random_matrix(rng, dim(rng), dim(rng), 4);
    CHECK(rank(a) + cokernel_invariants(a, a.rows()).free_rank == a.rows());
  }
}

TEST_CASE("overflow is reported, not wrapped") {
  CHECK_THROWS_AS(checked_mul(std::numeric_limits<Int>::max(), 2), std::overflow_error);
  CHECK_THROWS_AS(checked_add(std::numeric_limits<Int>::max(), 1), std::overflow_error);
}

TEST_CASE("matrix JSON dump is row-major") {
  CHECK(to_json(IntMatrix{{1, 0}, {0, -1}}) == "[[1,0],[0,-1]]");
  CHECK(to_json(IntMatrix()) == "[]");
}
