#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "tropirep/action.hpp"
#include "tropirep/enumeration.hpp"
#include "tropirep/errors.hpp"
#include "tropirep/realization.hpp"

using namespace tropirep;

namespace {

Matroid matroid_from(int n, int d, const std::vector<std::vector<int>>& subsets) {
  SubsetCodec c(n, d);
  BitMultivector mv = BitMultivector::zeros(c);
  for (const auto& s : subsets) mv.bits[c.rank(s)] = 1;
  return Matroid::from_multivector(mv);
}

// rank-two invariant matroids of the order-six cyclic group, by allowed
// difference classes
Matroid z6_by_difference(std::initializer_list<int> classes) {
  std::vector<std::vector<int>> subsets;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) {
      const int diff = std::min(b - a, 6 - (b - a));
      for (int want : classes)
        if (diff == want) subsets.push_back({a, b});
    }
  return matroid_from(6, 2, subsets);
}

// the four rank-two orbits of the order-six dihedral group in the basis
// order 1, s, r, sr, r^2, sr^2
Matroid d3_orbit_sum(std::initializer_list<int> which) {
  const std::vector<std::vector<std::vector<int>>> orbits = {
      {{0, 1}, {2, 5}, {3, 4}},                          // f1
      {{0, 3}, {1, 2}, {4, 5}},                          // f2
      {{0, 5}, {2, 3}, {1, 4}},                          // f3
      {{0, 2}, {2, 4}, {0, 4}, {1, 3}, {3, 5}, {1, 5}},  // f4
  };
  std::vector<std::vector<int>> subsets;
  for (int w : which)
    for (const auto& s : orbits[w - 1]) subsets.push_back(s);
  return matroid_from(6, 2, subsets);
}

CycloMatrix character_matrix(const FiniteGroup& g, const std::vector<int>& char_rows) {
  const CharacterBasis basis = character_basis(g);
  const auto ctx = make_cyclo_context(basis.exponent);
  CycloMatrix mat = make_cyclo_matrix(ctx, static_cast<int>(char_rows.size()), g.order());
  for (std::size_t i = 0; i < char_rows.size(); ++i)
    for (int j = 0; j < g.order(); ++j)
      mat.at(static_cast<int>(i), j) = zeta_pow(ctx, basis.chars[char_rows[i]][j]);
  return mat;
}

}  // namespace

TEST_CASE("character basis of cyclic groups") {
  const CharacterBasis b4 = character_basis(make_cyclic(4));
  CHECK(b4.exponent == 4);
  REQUIRE(b4.chars.size() == 4);
  for (int l = 0; l < 4; ++l)
    for (int g = 0; g < 4; ++g) CHECK(b4.chars[l][g] == (l * g) % 4);
  // character 2 takes values (1,-1,1,-1)
  CHECK(b4.chars[2] == std::vector<int>{0, 2, 0, 2});

  const CharacterBasis b1 = character_basis(make_cyclic(1));
  REQUIRE(b1.chars.size() == 1);
  CHECK(b1.chars[0] == std::vector<int>{0});
}

TEST_CASE("character basis of the Klein four group") {
  const CharacterBasis b = character_basis(make_product(make_cyclic(2), make_cyclic(2)));
  CHECK(b.exponent == 2);
  REQUIRE(b.chars.size() == 4);
  for (const auto& row : b.chars)
    for (int v : row) CHECK((v == 0 || v == 1));  // all values are +-1
}

TEST_CASE("character basis rows are homomorphisms and pairwise distinct") {
  for (const FiniteGroup& g :
       {make_cyclic(6), make_product(make_cyclic(2), make_cyclic(4)),
        make_product(make_cyclic(2), make_product(make_cyclic(2), make_cyclic(2)))}) {
    const CharacterBasis b = character_basis(g);
    REQUIRE(static_cast<int>(b.chars.size()) == g.order());
    for (const auto& row : b.chars)
      for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y)
          CHECK(row[g.mul(x, y)] == (row[x] + row[y]) % b.exponent);
    std::set<std::vector<int>> distinct(b.chars.begin(), b.chars.end());
    CHECK(distinct.size() == b.chars.size());
  }
}

TEST_CASE("non-abelian groups are rejected") {
  CHECK_THROWS_AS(character_basis(make_dihedral(3)), UnsupportedError);
  CHECK_THROWS_AS(classify_realizable(make_dihedral(3), 2), UnsupportedError);
}

TEST_CASE("tropicalize the order-four trivial-plus-sign matrix") {
  const Matroid m = tropicalize_matrix(character_matrix(make_cyclic(4), {0, 2}));
  CHECK(m == matroid_from(4, 2, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
}

TEST_CASE("tropicalize order-six character pairs") {
  CHECK(tropicalize_matrix(character_matrix(make_cyclic(6), {0, 2})) ==
        z6_by_difference({1, 2}));
  CHECK(tropicalize_matrix(character_matrix(make_cyclic(6), {0, 3})) ==
        z6_by_difference({1, 3}));
}

TEST_CASE("tropicalize the codimension-one difference matrix") {
  for (int n : {3, 4, 5, 6}) {
    const auto ctx = make_cyclo_context(1);
    CycloMatrix mat = make_cyclo_matrix(ctx, n - 1, n);
    for (int i = 0; i < n - 1; ++i) {
      mat.at(i, 0) = CycloInt::one(ctx);
      mat.at(i, i + 1) = CycloInt::integer(ctx, -1);
    }
    CHECK(tropicalize_matrix(mat) == uniform(n, n - 1));
  }
}

TEST_CASE("tropicalize the identity") {
  const auto ctx = make_cyclo_context(1);
  CycloMatrix eye = make_cyclo_matrix(ctx, 2, 2);
  eye.at(0, 0) = CycloInt::one(ctx);
  eye.at(1, 1) = CycloInt::one(ctx);
  const Matroid m = tropicalize_matrix(eye);
  CHECK(m == uniform(2, 2));
  CHECK(m.bases() == std::vector<std::vector<int>>{{0, 1}});
}

TEST_CASE("tropicalize rejects rank-deficient and malformed input") {
  const auto ctx = make_cyclo_context(4);
  CycloMatrix zero = make_cyclo_matrix(ctx, 2, 3);
  CHECK_THROWS_AS(tropicalize_matrix(zero), RankDeficientError);
  CycloMatrix tall = make_cyclo_matrix(ctx, 3, 2);
  CHECK_THROWS_AS(tropicalize_matrix(tall), ContractError);
}

TEST_CASE("classification for the order-four cyclic group") {
  const RealizabilityClassification cls = classify_realizable(make_cyclic(4), 2);
  REQUIRE(cls.entries.size() == 2);
  const auto* nonuniform =
      cls.find(matroid_from(4, 2, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  REQUIRE(nonuniform != nullptr);
  CHECK(nonuniform->size() == 2);
  const auto* unif = cls.find(uniform(4, 2));
  REQUIRE(unif != nullptr);
  CHECK(unif->size() == 4);
}

TEST_CASE("classification for the order-five cyclic group") {
  for (int d = 1; d <= 5; ++d) {
    const RealizabilityClassification cls = classify_realizable(make_cyclic(5), d);
    REQUIRE(cls.entries.size() == 1);
    CHECK(cls.entries[0].first == uniform(5, d));
    CHECK(cls.entries[0].second.size() == binomial(5, d));
  }
}

TEST_CASE("classification for the Klein four group") {
  const FiniteGroup k4 = make_product(make_cyclic(2), make_cyclic(2));
  const RealizabilityClassification cls = classify_realizable(k4, 2);
  REQUIRE(cls.entries.size() == 3);
  CHECK(cls.find(uniform(4, 2)) == nullptr);
  for (const auto& [m, witnesses] : cls.entries) {
    CHECK(m.plucker().popcount() == 4);
    CHECK(witnesses.size() == 2);
  }
}

TEST_CASE("realizable matroids are invariant and enumerated") {
  for (const FiniteGroup& g :
       {make_cyclic(4), make_cyclic(6), make_product(make_cyclic(2), make_cyclic(2))}) {
    for (int d = 1; d < g.order(); ++d) {
      const auto cls = classify_realizable(g, d);
      const auto reps = enumerate_reps(g, d);
      const SubsetAction action = build_action(g, d);
      for (const auto& [m, witnesses] : cls.entries) {
        CHECK(is_invariant(action, m.plucker()));
        bool found = false;
        for (const auto& rep : reps) found = found || rep.matroid == m;
        CHECK(found);
      }
    }
  }
}

TEST_CASE("cyclic iff rank-two uniform realizable") {
  CHECK(check_cyclic_u2(make_cyclic(6)) == std::pair{true, true});
  CHECK(check_cyclic_u2(make_product(make_cyclic(2), make_cyclic(2))) ==
        std::pair{false, false});
  CHECK(check_cyclic_u2(make_cyclic(4)) == std::pair{true, true});
}

TEST_CASE("cyclic/uniform equivalence on every abelian group of order <= 12") {
  std::vector<FiniteGroup> abelians;
  for (int n = 2; n <= 12; ++n) abelians.push_back(make_cyclic(n));
  abelians.push_back(make_product(make_cyclic(2), make_cyclic(2)));
  abelians.push_back(make_product(make_cyclic(2), make_cyclic(4)));
  abelians.push_back(
      make_product(make_cyclic(2), make_product(make_cyclic(2), make_cyclic(2))));
  abelians.push_back(make_product(make_cyclic(3), make_cyclic(3)));
  abelians.push_back(make_product(make_cyclic(2), make_cyclic(6)));
  for (const FiniteGroup& g : abelians) {
    const auto [cyclic, u2] = check_cyclic_u2(g);
    CHECK(cyclic == u2);
  }
}

TEST_CASE("all square minors of small prime DFT matrices are nonzero") {
  CHECK(check_chebotarev(3));
  CHECK(check_chebotarev(5));
  CHECK(check_chebotarev(7));
  CHECK_THROWS_AS(check_chebotarev(6), ContractError);
  CHECK_THROWS_AS(check_chebotarev(17), ContractError);
}

TEST_CASE("prime-power minor collisions") {
  CHECK(check_prime_power_minors(2, 2, 2).empty());
  CHECK(check_prime_power_minors(3, 2, 2).empty());
  CHECK(check_prime_power_minors(2, 3, 3).empty());
  // zero minors do exist, e.g. rows {0,2}, columns {0,2} at order four
  const auto ctx = make_cyclo_context(4);
  CycloMatrix sub = make_cyclo_matrix(ctx, 2, 2);
  sub.at(0, 0) = zeta_pow(ctx, 0);
  sub.at(0, 1) = zeta_pow(ctx, 0);
  sub.at(1, 0) = zeta_pow(ctx, 0);
  sub.at(1, 1) = zeta_pow(ctx, 4);
  CHECK(det(sub).is_zero());
  CHECK_THROWS_AS(check_prime_power_minors(4, 1, 2), ContractError);
  CHECK_THROWS_AS(check_prime_power_minors(2, 4, 2), ContractError);
}

TEST_CASE("standard representation samples of the order-six dihedral group") {
  const auto c6 = make_cyclo_context(6);
  const CycloInt one = CycloInt::one(c6);
  const CycloInt zero = CycloInt::zero(c6);
  const CycloInt two = CycloInt::integer(c6, 2);
  const CycloInt w = zeta_pow(c6, 2);  // primitive cube root

  CHECK(realize_d3_standard(one, zero) == d3_orbit_sum({1, 2, 3}));
  CHECK(realize_d3_standard(one, one) == d3_orbit_sum({2, 3, 4}));
  CHECK(realize_d3_standard(two, one) == uniform(6, 2));
  // z1^2 = w z2^2 with z1 = zeta_6, z2 = 1
  CHECK(realize_d3_standard(zeta_pow(c6, 1), one) == d3_orbit_sum({1, 2, 4}));
  // z1 = 1, z2^2 = w^2 (z2 = w): again z1^2 = w z2^2
  CHECK(realize_d3_standard(one, w) == d3_orbit_sum({1, 2, 4}));
  // z1^2 = w^2 z2^2 with z1 = w, z2 = 1
  CHECK(realize_d3_standard(w, one) == d3_orbit_sum({1, 3, 4}));

  CHECK_THROWS_AS(realize_d3_standard(zero, zero), ContractError);
  const auto c4 = make_cyclo_context(4);
  CHECK_THROWS_AS(realize_d3_standard(CycloInt::one(c4), CycloInt::zero(c4)),
                  ContractError);
}

TEST_CASE("reducible and irreducible realizations meet in one matroid") {
  // trivial-plus-sign character matrix for the dihedral group: signs
  // alternate along the basis order 1, s, r, sr, r^2, sr^2
  const auto ctx = make_cyclo_context(6);
  CycloMatrix mat = make_cyclo_matrix(ctx, 2, 6);
  for (int j = 0; j < 6; ++j) {
    mat.at(0, j) = CycloInt::one(ctx);
    mat.at(1, j) = CycloInt::integer(ctx, j % 2 == 0 ? 1 : -1);
  }
  const Matroid reducible = tropicalize_matrix(mat);
  CHECK(reducible == d3_orbit_sum({1, 2, 3}));
  CHECK(reducible == realize_d3_standard(CycloInt::one(ctx), CycloInt::zero(ctx)));
}

TEST_CASE("random cyclotomic matrices tropicalize to matroids") {
  std::mt19937 rng(123);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> conductor_pick(0, 3);
  const int conductors[] = {3, 4, 6, 12};
  int produced = 0;
  while (produced < 60) {
    const auto ctx = make_cyclo_context(conductors[conductor_pick(rng)]);
    std::uniform_int_distribution<int> rows_pick(1, 3);
    const int r = rows_pick(rng);
    std::uniform_int_distribution<int> cols_pick(r, 6);
    const int c = cols_pick(rng);
    CycloMatrix mat = make_cyclo_matrix(ctx, r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        std::vector<BigInt> cs(ctx->degree());
        for (auto& v : cs) v = coeff(rng);
        mat.at(i, j) = CycloInt::from_coeffs(ctx, cs);
      }
    try {
      const Matroid m = tropicalize_matrix(mat);
      CHECK(is_plucker(m.plucker()));
      ++produced;
    } catch (const RankDeficientError&) {
      // rank-deficient draws carry no information here
    }
  }
}
