#pragma once

#include <utility>
#include <vector>

#include "tropirep/cyclotomic.hpp"
#include "tropirep/groups.hpp"
#include "tropirep/matroids.hpp"

namespace tropirep {

// The irreducible characters of an abelian group, stored as exponent
// tables: character l sends element g to zeta_m^chars[l][g], where m is the
// group exponent.  Rows are sorted lexicographically, so for Z_n character
// l is g -> l*g mod n.
struct CharacterBasis {
  FiniteGroup group;
  int exponent;
  std::vector<std::vector<int>> chars;
};

CharacterBasis character_basis(const FiniteGroup& g);

// Trivial-valuation tropicalization of a full-row-rank matrix: the matroid
// on the columns whose bases are the column sets with nonvanishing maximal
// minor.  Throws RankDeficientError when every maximal minor is zero.
Matroid tropicalize_matrix(const CycloMatrix& mat);

// Which matroids arise by tropicalizing d-element character subsets, and
// from which subsets.  Entries are sorted by the matroid's indicator bits.
struct RealizabilityClassification {
  std::vector<std::pair<Matroid, std::vector<std::vector<int>>>> entries;

  const std::vector<std::vector<int>>* find(const Matroid& m) const;
};

RealizabilityClassification classify_realizable(const FiniteGroup& g, int d);

// (group is cyclic, rank-two uniform matroid is realizable); the two
// booleans coincide for every abelian group.
std::pair<bool, bool> check_cyclic_u2(const FiniteGroup& g);

// True iff every square minor of the p-th DFT matrix (zeta_p^{jk}) is
// nonzero.  Exact; p must be prime and at most 13 (cost grows as C(2p,p)).
bool check_chebotarev(int p);

struct MinorViolation {
  std::vector<int> row_set;
  std::vector<int> col_set;
};

// Scans all (I, J)-minors of size d of the matrix (zeta_{p^r}^{ij}) and
// reports those zero minors where I or J has no collision mod p.  An empty
// result confirms the collision property on that instance.
std::vector<MinorViolation> check_prime_power_minors(int p, int r, int d);

// The two-dimensional standard representation of the order-six dihedral
// group, spanned by an eigenvector pair parameterized by (z1, z2), with
// columns ordered 1, s, r, sr, r^2, sr^2.  The conductor of z1's context
// must be divisible by 3 so a primitive cube root of unity exists.
Matroid realize_d3_standard(const CycloInt& z1, const CycloInt& z2);

}  // namespace tropirep
