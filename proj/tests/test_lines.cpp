#include <doctest.h>

#include <random>
#include <set>

#include "weyl27/lines.hpp"
#include "weyl27/oracles.hpp"
#include "weyl27/perm_group.hpp"

using namespace weyl27;

namespace {

const std::vector<std::string> kGeneratorCycles{
    "(4,21)(5,20)(6,19)(7,24)(8,23)(12,22)",  "(1,2)(8,12)(9,13)(10,14)(11,15)(22,23)",
    "(2,3)(7,8)(13,16)(14,17)(15,18)(23,24)", "(3,4)(8,9)(12,13)(17,19)(18,20)(24,25)",
    "(4,5)(9,10)(13,14)(16,17)(20,21)(25,26)", "(5,6)(10,11)(14,15)(17,18)(19,20)(26,27)",
};

IntVector unit(std::size_t i) {
  IntVector v(kAmbientRank, 0);
  v[i] = 1;
  return v;
}

}  // namespace

TEST_CASE("line classes") {
  const LineSystem& ls = cubic_lines();
  REQUIRE(ls.classes.size() == 27);
  CHECK(ls.classes[0] == unit(1));
  CHECK(ls.classes[6] == IntVector{1, -1, -1, 0, 0, 0, 0});
  CHECK(ls.classes[20] == IntVector{1, 0, 0, 0, 0, -1, -1});
  CHECK(ls.classes[21] == IntVector{2, 0, -1, -1, -1, -1, -1});
  CHECK(ls.classes[26] == IntVector{2, -1, -1, -1, -1, -1, 0});
  for (const auto& c : ls.classes) {
    CHECK(inner_product(c, c, ambient_lattice()) == -1);
    CHECK(inner_product(c, anticanonical_class(), ambient_lattice()) == 1);
  }
  CHECK(std::set<IntVector>(ls.classes.begin(), ls.classes.end()).size() == 27);
}

TEST_CASE("intersection matrix") {
  const LineSystem& ls = cubic_lines();
  CHECK(ls.inter[0][6] == 1);  // e1 . (h - e1 - e2)
  CHECK(ls.inter[0][1] == 0);
  CHECK(ls.inter[4][4] == -1);
  for (std::size_t i = 0; i < 27; ++i) {
    int met = 0;
    for (std::size_t j = 0; j < 27; ++j) {
      CHECK(ls.inter[i][j] == ls.inter[j][i]);
      if (i != j) {
        CHECK((ls.inter[i][j] == 0 || ls.inter[i][j] == 1));
        met += ls.inter[i][j];
      }
    }
    CHECK(met == 10);
  }
}

TEST_CASE("index_of and labels") {
  const LineSystem& ls = cubic_lines();
  CHECK(ls.index_of(ls.classes[13]) == 13);
  CHECK(ls.index_of(anticanonical_class()) == kNumLines);
  CHECK(LineSystem::label(0) == "1");
  CHECK(LineSystem::label(6) == "12");
  CHECK(LineSystem::label(20) == "56");
  CHECK(LineSystem::label(21) == "bar1");
  CHECK_THROWS_AS(LineSystem::label(27), std::out_of_range);
}

TEST_CASE("simple roots") {
  const auto& roots = e6_simple_roots();
  REQUIRE(roots.size() == 6);
  for (const auto& r : roots) {
    CHECK(inner_product(r, r, ambient_lattice()) == -2);
    CHECK(inner_product(r, anticanonical_class(), ambient_lattice()) == 0);
  }
  CHECK(verify_dynkin(roots));
}

TEST_CASE("verify_dynkin rejects bad root systems") {
  auto roots = e6_simple_roots();
  std::swap(roots[1], roots[2]);
  CHECK_FALSE(verify_dynkin(roots));
  CHECK_FALSE(verify_dynkin({}));
  auto scaled = e6_simple_roots();
  for (auto& x : scaled[0]) x *= 2;
  CHECK_FALSE(verify_dynkin(scaled));
}

TEST_CASE("reflections") {
  const auto& roots = e6_simple_roots();
  const Isometry s2 = reflection(roots[1]);
  CHECK(s2.apply(unit(1)) == unit(2));
  CHECK(s2.apply(roots[1]) == IntVector{0, -1, 1, 0, 0, 0, 0});
  for (const auto& r : roots) {
    const Isometry s = reflection(r);
    CHECK(s.preserves(ambient_lattice()));
    CHECK(s.fixes(anticanonical_class()));
    CHECK((s * s).matrix == IntMatrix::identity(7));
  }
  CHECK_THROWS_AS(reflection(unit(1)), std::invalid_argument);
  CHECK_THROWS_AS(reflection(IntVector{1, 1}), std::invalid_argument);
}

TEST_CASE("generator permutations match the reference cycles") {
  const auto perms = reflection_permutations(e6_simple_roots(), cubic_lines());
  REQUIRE(perms.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    CAPTURE(i);
    CHECK(perms[i].cycle_string() == kGeneratorCycles[i]);
  }
}

TEST_CASE("non line-preserving isometries are rejected") {
  // -I preserves the form but sends every line class to its negative.
  Isometry neg{IntMatrix::diagonal({-1, -1, -1, -1, -1, -1, -1})};
  CHECK(neg.preserves(ambient_lattice()));
  CHECK_THROWS_AS(isometry_to_permutation(neg, cubic_lines()), std::invalid_argument);
  Permutation swap_first = Permutation::from_cycles("(1,7)");
  CHECK_THROWS_AS(permutation_to_isometry(swap_first, cubic_lines()), std::invalid_argument);
}

TEST_CASE("permutation round trip through cycle notation") {
  for (const auto& c : kGeneratorCycles) CHECK(Permutation::from_cycles(c).cycle_string() == c);
  CHECK(Permutation().cycle_string() == "()");
  CHECK(Permutation::from_cycles("()").is_identity());
  CHECK(Permutation::from_cycles("(3,1,2)").cycle_string() == "(1,2,3)");
  CHECK_THROWS_AS(Permutation::from_cycles("(1,1)"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_cycles("(0,2)"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_cycles("(1,28)"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_cycles("1,2"), std::invalid_argument);
}

TEST_CASE("products use the right action") {
  const Permutation a = Permutation::from_cycles("(1,2)");
  const Permutation b = Permutation::from_cycles("(2,3)");
  // 1 -> 2 under a, then 2 -> 3 under b.
  CHECK((a * b)(0) == 2);
  CHECK((a * b).cycle_string() == "(1,3,2)");
  CHECK((a * a.inverse()).is_identity());
}

TEST_CASE("group closure sizes") {
  CHECK(generate_group({}).order() == 1);
  CHECK(generate_group({Permutation::from_cycles(kGeneratorCycles[0])}).order() == 2);
  // s1 s2 commute; s2 s3 braid.
  const auto p = reflection_permutations(e6_simple_roots(), cubic_lines());
  CHECK(generate_group({p[0], p[1]}).order() == 4);
  CHECK(generate_group({p[1], p[2]}).order() == 6);
  CHECK(generate_group({p[1], p[2]}).order() == oracle::closure_order({p[1], p[2]}));
}

TEST_CASE("W(E6) order and structure") {
  const PermutationGroup& w = weyl_e6();
  CHECK(w.order() == 51840);
  CHECK(w.elements().front().is_identity());
  CHECK(w.table().size() == 51840u * 27u);
  CHECK(w.orbit_of(0).size() == 27);
  CHECK(oracle::closure_order(w.generators()) == 51840);
  std::set<Permutation> distinct(w.elements().begin(), w.elements().end());
  CHECK(distinct.size() == 51840);
}

TEST_CASE("every group element comes from an isometry fixing -K") {
  const PermutationGroup& w = weyl_e6();
  const LineSystem& ls = cubic_lines();
  for (const auto& g : w.elements()) {
    const Isometry iso = permutation_to_isometry(g, ls);
    if (!iso.preserves(ambient_lattice()) || !iso.fixes(anticanonical_class())) {
      FAIL("element " << g.cycle_string() << " is not an isometry fixing -K");
    }
  }
  CHECK(true);
}

TEST_CASE("group elements preserve intersections") {
  const PermutationGroup& w = weyl_e6();
  const LineSystem& ls = cubic_lines();
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::size_t> pick(0, w.order() - 1);
  for (int t = 0; t < 200; ++t) {
    const Permutation& g = w.elements()[pick(rng)];
    for (std::size_t i = 0; i < 27; ++i)
      for (std::size_t j = 0; j < 27; ++j) CHECK(ls.inter[g(i)][g(j)] == ls.inter[i][j]);
  }
}

TEST_CASE("membership") {
  const PermutationGroup& w = weyl_e6();
  CHECK(w.contains(w.elements()[12345]));
  CHECK_FALSE(w.contains(Permutation::from_cycles("(1,2)")));
}
