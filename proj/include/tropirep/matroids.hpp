#pragma once

#include <optional>
#include <vector>

#include "tropirep/subsets.hpp"

namespace tropirep {

// Boolean tropical Pluecker check.  A nonzero 0/1 multivector of degree d
// passes iff for every (d+1)-subset A and (d-1)-subset B the support set
// { i in A\B : mv[A\i] = mv[B+i] = 1 } never has size exactly one -- the
// Boolean reading of "every term of the three-term relation can be dropped
// without changing the sum".  Over the Booleans this is equivalent to the
// strong basis exchange axiom for the set system {I : mv[I] = 1}.
bool is_plucker(const BitMultivector& mv);

// Independent re-check via literal basis exchange: for all bases A, B and
// every x in A\B there is y in B\A with A-x+y again a basis.  Used to
// cross-validate is_plucker; intentionally shares no code with it.
bool is_plucker_exchange_oracle(const BitMultivector& mv);

// A matroid in Boolean Pluecker coordinates: a validated basis-indicator
// vector.  Rank 0 (single empty basis) is allowed; it arises as the dual of
// the free matroid and as the unit of the wedge product.
class Matroid {
 public:
  // Validates: nonzero and is_plucker.  Throws ContractError otherwise.
  static Matroid from_multivector(BitMultivector mv);

  int rank() const { return mv_.codec.d(); }
  int ground_size() const { return mv_.codec.n(); }
  const BitMultivector& plucker() const { return mv_; }
  bool has_basis(std::uint64_t subset_index) const { return mv_.bits[subset_index] != 0; }

  // All bases as sorted element lists, in colex index order.
  std::vector<std::vector<int>> bases() const;

  bool operator==(const Matroid& o) const { return mv_ == o.mv_; }

 private:
  explicit Matroid(BitMultivector mv) : mv_(std::move(mv)) {}
  BitMultivector mv_;
};

Matroid uniform(int n, int d);

// Bases of the dual are set complements of bases.
Matroid dual(const Matroid& m);

struct CocircuitSet {
  // Minimal dependent sets of the dual matroid, sorted by size then
  // lexicographically.
  std::vector<std::vector<int>> cocircuits;
};

CocircuitSet cocircuits(const Matroid& m);

// Wedge product of basis-indicator vectors: bit K of a^b is the OR over all
// splits K = I + J with |I| = rank(a) of a[I] & b[J].  Returns nullopt when
// the degrees exceed the ground size or the product vanishes; a nonzero
// wedge of matroids is always a matroid (the matroid union).
std::optional<Matroid> wedge(const Matroid& a, const Matroid& b);

// Hodge-star dual of the wedge of duals; nullopt when undefined.
std::optional<Matroid> stable_intersection(const Matroid& a, const Matroid& b);

}  // namespace tropirep
