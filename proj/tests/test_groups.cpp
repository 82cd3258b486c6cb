#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "tropirep/errors.hpp"
#include "tropirep/groups.hpp"

using namespace tropirep;

namespace {

// order of g by naive repeated multiplication, independent of
// FiniteGroup::element_order
int brute_force_order(const FiniteGroup& g, int x) {
  int acc = x;
  int k = 1;
  while (acc != 0) {
    acc = g.mul(acc, x);
    ++k;
  }
  return k;
}

std::multiset<std::size_t> class_size_multiset(const FiniteGroup& g) {
  std::multiset<std::size_t> sizes;
  for (const auto& cls : conjugacy_classes(g).classes) sizes.insert(cls.size());
  return sizes;
}

std::vector<FiniteGroup> sample_groups() {
  std::vector<FiniteGroup> gs;
  for (int n = 1; n <= 8; ++n) gs.push_back(make_cyclic(n));
  gs.push_back(make_product(make_cyclic(2), make_cyclic(2)));
  gs.push_back(make_product(make_cyclic(2), make_cyclic(3)));
  gs.push_back(make_dihedral(3));
  gs.push_back(make_dihedral(4));
  return gs;
}

}  // namespace

TEST_CASE("make_cyclic") {
  const FiniteGroup z4 = make_cyclic(4);
  CHECK(z4.order() == 4);
  CHECK(z4.table()[1] == std::vector<int>{1, 2, 3, 0});
  CHECK(z4.label(3) == "3");

  const FiniteGroup z1 = make_cyclic(1);
  CHECK(z1.order() == 1);

  const FiniteGroup z6 = make_cyclic(6);
  CHECK(z6.element_order(3) == 2);

  CHECK_THROWS_AS(make_cyclic(0), ContractError);
  CHECK_THROWS_AS(make_cyclic(65), CapacityError);
}

TEST_CASE("make_product") {
  const FiniteGroup k4 = make_product(make_cyclic(2), make_cyclic(2));
  CHECK(k4.order() == 4);
  for (int x = 1; x < 4; ++x) CHECK(k4.mul(x, x) == 0);
  CHECK(k4.label(2) == "(1,0)");

  const FiniteGroup g = make_cyclic(5);
  CHECK(make_product(make_cyclic(1), g) == g);

  const FiniteGroup z2xz3 = make_product(make_cyclic(2), make_cyclic(3));
  // element (1,1) has index 1*3+1 = 4; oracle is brute-force multiplication
  CHECK(brute_force_order(z2xz3, 4) == 6);
  CHECK(z2xz3.element_order(4) == 6);

  CHECK_THROWS_AS(make_product(make_cyclic(9), make_cyclic(8)), CapacityError);
}

TEST_CASE("make_dihedral") {
  const FiniteGroup d3 = make_dihedral(3);
  CHECK(d3.order() == 6);
  CHECK(!d3.is_abelian());
  CHECK(d3.labels() == std::vector<std::string>{"1", "s", "r", "sr", "r2", "sr2"});

  // relations r^3 = s^2 = (sr)^2 = 1 from the table itself
  const int r = 2, s = 1, sr = 3;
  CHECK(d3.mul(r, d3.mul(r, r)) == 0);
  CHECK(d3.mul(s, s) == 0);
  CHECK(d3.mul(sr, sr) == 0);
  // s r s = r^2, checked against the table
  CHECK(d3.mul(d3.mul(s, r), s) == 4);

  CHECK(make_dihedral(1) == make_cyclic(2));
}

TEST_CASE("conjugacy classes") {
  const ConjugacyClasses z4 = conjugacy_classes(make_cyclic(4));
  CHECK(z4.classes.size() == 4);

  const ConjugacyClasses z1 = conjugacy_classes(make_cyclic(1));
  CHECK(z1.classes.size() == 1);

  const FiniteGroup d3 = make_dihedral(3);
  const ConjugacyClasses cls = conjugacy_classes(d3);
  // oracle: brute-force conjugation over all pairs
  std::map<int, std::vector<int>> expected;
  for (int x = 0; x < 6; ++x) {
    std::vector<int> members;
    for (int y = 0; y < 6; ++y) {
      bool conj = false;
      for (int h = 0; h < 6 && !conj; ++h)
        conj = d3.mul(d3.mul(h, x), d3.inverse(h)) == y;
      if (conj) members.push_back(y);
    }
    expected[members.front()] = members;
  }
  REQUIRE(cls.classes.size() == expected.size());
  std::size_t i = 0;
  for (const auto& [rep, members] : expected) {
    CHECK(cls.representatives[i] == rep);
    CHECK(cls.classes[i] == members);
    ++i;
  }
  CHECK(cls.classes[0] == std::vector<int>{0});
  CHECK(cls.classes[1] == std::vector<int>{1, 3, 5});
  CHECK(cls.classes[2] == std::vector<int>{2, 4});
}

TEST_CASE("parse_cayley_file") {
  CHECK(parse_cayley_file("2\n0 1\n1 0") == make_cyclic(2));
  CHECK_THROWS_AS(parse_cayley_file("2\n1 0\n0 1"), ParseError);
  CHECK(parse_cayley_file("4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n") == make_cyclic(4));
  CHECK(parse_cayley_file("2\r\n0 1\r\n1 0\r\n") == make_cyclic(2));

  CHECK_THROWS_AS(parse_cayley_file(""), ParseError);
  CHECK_THROWS_AS(parse_cayley_file("2\n0 1\n1"), ParseError);
  CHECK_THROWS_AS(parse_cayley_file("2\n0 5\n1 0"), ParseError);
  CHECK_THROWS_AS(parse_cayley_file("2\n0 1\n1 0\n9"), ParseError);
  // row not a permutation
  CHECK_THROWS_AS(parse_cayley_file("2\n0 0\n1 0"), ParseError);
  // associativity failure: a Latin square with identity that is no group
  CHECK_THROWS_AS(parse_cayley_file("5\n"
                                    "0 1 2 3 4\n"
                                    "1 0 3 4 2\n"
                                    "2 4 0 1 3\n"
                                    "3 2 4 0 1\n"
                                    "4 3 1 2 0"),
                  ParseError);
}

TEST_CASE("associativity holds on all triples for every constructed group") {
  for (const FiniteGroup& g : sample_groups()) {
    const int n = g.order();
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        for (int c = 0; c < n && ok; ++c)
          ok = g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c));
    CHECK(ok);
  }
}

TEST_CASE("abelian groups have singleton classes only") {
  for (const FiniteGroup& g : sample_groups()) {
    if (!g.is_abelian()) continue;
    CHECK(conjugacy_classes(g).classes.size() == static_cast<std::size_t>(g.order()));
  }
}

TEST_CASE("product order does not change class sizes") {
  const std::vector<FiniteGroup> factors = {make_cyclic(2), make_cyclic(3),
                                            make_dihedral(3), make_cyclic(4)};
  for (const FiniteGroup& a : factors)
    for (const FiniteGroup& b : factors)
      CHECK(class_size_multiset(make_product(a, b)) ==
            class_size_multiset(make_product(b, a)));
}

TEST_CASE("group exponent") {
  CHECK(group_exponent(make_cyclic(6)) == 6);
  CHECK(group_exponent(make_product(make_cyclic(2), make_cyclic(2))) == 2);
  CHECK(group_exponent(make_product(make_cyclic(2), make_cyclic(4))) == 4);
  CHECK(group_exponent(make_dihedral(3)) == 6);
}
