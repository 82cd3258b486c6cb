#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tropirep/action.hpp"
#include "tropirep/groups.hpp"
#include "tropirep/matroids.hpp"

namespace tropirep {

inline constexpr int kDefaultOrbitCap = 24;

// An invariant matroid inside the Boolean regular representation, recorded
// as the union of the orbits selected by orbit_mask.
struct TropicalRep {
  int dim;
  std::uint32_t orbit_mask;
  Matroid matroid;
  bool is_uniform;
  std::optional<bool> indecomposable;
  std::optional<bool> realizable;
  std::vector<std::vector<int>> witnesses;  // realizing character subsets
};

struct EnumerationOptions {
  int orbit_cap = kDefaultOrbitCap;
  bool parallel = true;
};

// All invariant matroids of rank d: every nonempty union of subset orbits
// that satisfies the Pluecker relations, sorted by ascending orbit_mask.
std::vector<TropicalRep> enumerate_reps(const FiniteGroup& g, int d,
                                        const EnumerationOptions& opts = {});

struct ExtremalReport {
  std::vector<TropicalRep> dim_one;
  std::vector<TropicalRep> codim_one;  // empty for the trivial group
  bool has_codim = false;
};

// Runs the enumeration at d = 1 and d = |G|-1 and asserts each yields
// exactly the uniform matroid.
ExtremalReport classify_extremal_dims(const FiniteGroup& g,
                                      const EnumerationOptions& opts = {});

// False iff rep's matroid is the wedge of two enumerated matroids of lower
// dimension.  reps_by_dim must contain entries for every dim in [1, d-1].
bool is_indecomposable(const TropicalRep& rep,
                       const std::map<int, std::vector<TropicalRep>>& reps_by_dim);

// The complementary-dimension invariant matroid: the dual, re-expressed as
// a union of rank (n-d) orbits.
TropicalRep maschke_complement(const FiniteGroup& g, const TropicalRep& rep);

}  // namespace tropirep
