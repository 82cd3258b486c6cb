#pragma once

#include <cstdint>
#include <vector>

#include "tropirep/groups.hpp"
#include "tropirep/subsets.hpp"

namespace tropirep {

// The permutation action induced on d-subsets of the group by left
// multiplication: perms[g] maps the index of S to the index of g*S.
struct SubsetAction {
  FiniteGroup group;
  SubsetCodec codec;
  std::vector<std::vector<std::uint32_t>> perms;  // [element][subset index]
};

SubsetAction build_action(const FiniteGroup& g, int d);

struct OrbitDecomposition {
  // One indicator vector per orbit, ordered by minimal subset index.
  std::vector<BitMultivector> orbits;
  // Inverse map: orbit id of each subset index.
  std::vector<int> orbit_of;
};

OrbitDecomposition orbit_decomposition(const SubsetAction& a);

// True iff every group element fixes the support of mv setwise; over the
// Booleans projective fixity on the Dressian is literal equality.
bool is_invariant(const SubsetAction& a, const BitMultivector& mv);

}  // namespace tropirep
