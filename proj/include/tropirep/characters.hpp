#pragma once

#include <cstdint>
#include <vector>

#include "tropirep/enumeration.hpp"
#include "tropirep/groups.hpp"
#include "tropirep/matroids.hpp"

namespace tropirep {

// True iff left multiplication by elem maps some cocircuit to itself
// setwise.
bool fixes_some_cocircuit(const FiniteGroup& g, int elem, const CocircuitSet& cc);

// The Boolean character of an invariant matroid: the trace of the induced
// permutation of its cocircuits, evaluated at each conjugacy-class
// representative.
std::vector<std::uint8_t> tropical_character(const FiniteGroup& g, const Matroid& m);

struct CharacterRow {
  int dim;
  std::uint32_t orbit_mask;
  bool is_uniform;
  std::vector<std::uint8_t> values;  // one per conjugacy class
};

struct CharacterTable {
  FiniteGroup group;
  ConjugacyClasses classes;
  std::vector<CharacterRow> rows;  // ordered by (dimension, orbit_mask)
};

// Character rows for every invariant matroid of every dimension 1..max_dim;
// max_dim defaults to |G|-1, covering the whole table.
CharacterTable character_table(const FiniteGroup& g, int max_dim = -1,
                               const EnumerationOptions& opts = {});

}  // namespace tropirep
