#include <vector>

#include "doctest.h"
#include "tropirep/action.hpp"
#include "tropirep/errors.hpp"

using namespace tropirep;

namespace {

BitMultivector indicator(const SubsetCodec& c, const std::vector<std::vector<int>>& subsets) {
  BitMultivector mv = BitMultivector::zeros(c);
  for (const auto& s : subsets) mv.bits[c.rank(s)] = 1;
  return mv;
}

}  // namespace

TEST_CASE("build_action basics") {
  const FiniteGroup z4 = make_cyclic(4);
  const SubsetAction a = build_action(z4, 2);
  CHECK(a.perms[1][a.codec.rank({0, 2})] == a.codec.rank({1, 3}));
  for (std::uint64_t i = 0; i < a.codec.count(); ++i) CHECK(a.perms[0][i] == i);

  const FiniteGroup d3 = make_dihedral(3);
  const SubsetAction ad3 = build_action(d3, 2);
  // s * {1, s} = {s, 1}: fixed setwise
  const auto idx = ad3.codec.rank({0, 1});
  CHECK(ad3.perms[1][idx] == idx);

  CHECK_THROWS_AS(build_action(z4, 5), ContractError);
}

TEST_CASE("the action is a homomorphism") {
  for (const FiniteGroup& g :
       {make_cyclic(6), make_dihedral(3), make_product(make_cyclic(2), make_cyclic(2))}) {
    for (int d = 1; d <= 3; ++d) {
      const SubsetAction a = build_action(g, d);
      for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y)
          for (std::uint64_t i = 0; i < a.codec.count(); ++i)
            CHECK(a.perms[g.mul(x, y)][i] == a.perms[x][a.perms[y][i]]);
    }
  }
}

TEST_CASE("orbit decomposition of the order-four cyclic group") {
  const SubsetAction a = build_action(make_cyclic(4), 2);
  const OrbitDecomposition dec = orbit_decomposition(a);
  REQUIRE(dec.orbits.size() == 2);
  CHECK(dec.orbits[0] == indicator(a.codec, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  CHECK(dec.orbits[1] == indicator(a.codec, {{0, 2}, {1, 3}}));
}

TEST_CASE("orbit decomposition of the Klein four group") {
  const SubsetAction a = build_action(make_product(make_cyclic(2), make_cyclic(2)), 2);
  const OrbitDecomposition dec = orbit_decomposition(a);
  REQUIRE(dec.orbits.size() == 3);
  for (const auto& orbit : dec.orbits) CHECK(orbit.popcount() == 2);
  CHECK(dec.orbits[0] == indicator(a.codec, {{0, 1}, {2, 3}}));
  CHECK(dec.orbits[1] == indicator(a.codec, {{0, 2}, {1, 3}}));
  CHECK(dec.orbits[2] == indicator(a.codec, {{1, 2}, {0, 3}}));
}

TEST_CASE("left multiplication is transitive in degree one") {
  for (const FiniteGroup& g : {make_cyclic(5), make_dihedral(3), make_cyclic(1)}) {
    const OrbitDecomposition dec = orbit_decomposition(build_action(g, 1));
    CHECK(dec.orbits.size() == 1);
  }
}

TEST_CASE("orbit decomposition of the order-six cyclic group") {
  const SubsetAction a = build_action(make_cyclic(6), 2);
  const OrbitDecomposition dec = orbit_decomposition(a);
  REQUIRE(dec.orbits.size() == 3);
  CHECK(dec.orbits[0].popcount() == 6);  // difference class 1
  CHECK(dec.orbits[1].popcount() == 6);  // difference class 2
  CHECK(dec.orbits[2].popcount() == 3);  // difference class 3
  CHECK(dec.orbits[2] == indicator(a.codec, {{0, 3}, {1, 4}, {2, 5}}));
}

TEST_CASE("orbit sizes divide the group order") {
  for (const FiniteGroup& g :
       {make_cyclic(6), make_dihedral(3), make_dihedral(4), make_cyclic(7)}) {
    for (int d = 1; d <= g.order(); ++d) {
      const OrbitDecomposition dec = orbit_decomposition(build_action(g, d));
      for (const auto& orbit : dec.orbits)
        CHECK(g.order() % orbit.popcount() == 0);
    }
  }
}

TEST_CASE("is_invariant") {
  const FiniteGroup z4 = make_cyclic(4);
  const SubsetAction a = build_action(z4, 2);
  const OrbitDecomposition dec = orbit_decomposition(a);
  for (const auto& orbit : dec.orbits) CHECK(is_invariant(a, orbit));
  CHECK(is_invariant(a, BitMultivector::ones(a.codec)));
  CHECK(!is_invariant(a, indicator(a.codec, {{0, 1}})));
}

TEST_CASE("invariance means being a union of orbits") {
  for (const FiniteGroup& g :
       {make_cyclic(4), make_product(make_cyclic(2), make_cyclic(2)), make_dihedral(3)}) {
    const SubsetAction a = build_action(g, 2);
    const OrbitDecomposition dec = orbit_decomposition(a);
    const std::uint64_t count = a.codec.count();
    REQUIRE(count <= 20);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << count); ++mask) {
      BitMultivector mv = BitMultivector::zeros(a.codec);
      for (std::uint64_t i = 0; i < count; ++i) mv.bits[i] = (mask >> i) & 1;
      bool union_of_orbits = true;
      for (const auto& orbit : dec.orbits) {
        bool any = false, all = true;
        for (std::uint64_t i = 0; i < count; ++i) {
          if (!orbit.bits[i]) continue;
          any = any || mv.bits[i];
          all = all && mv.bits[i];
        }
        if (any != all) union_of_orbits = false;
      }
      CHECK(is_invariant(a, mv) == union_of_orbits);
    }
  }
}
