#include "tropirep/characters.hpp"

#include <algorithm>

#include "tropirep/errors.hpp"

namespace tropirep {

bool fixes_some_cocircuit(const FiniteGroup& g, int elem, const CocircuitSet& cc) {
  std::vector<int> image;
  for (const std::vector<int>& c : cc.cocircuits) {
    image.clear();
    for (int x : c) image.push_back(g.mul(elem, x));
    std::sort(image.begin(), image.end());
    if (image == c) return true;
  }
  return false;
}

std::vector<std::uint8_t> tropical_character(const FiniteGroup& g, const Matroid& m) {
  if (m.ground_size() != g.order())
    throw ContractError("tropical_character: ground set does not match group");
  const CocircuitSet cc = cocircuits(m);
  const ConjugacyClasses classes = conjugacy_classes(g);
  std::vector<std::uint8_t> values;
  values.reserve(classes.representatives.size());
  for (int rep : classes.representatives)
    values.push_back(fixes_some_cocircuit(g, rep, cc) ? 1 : 0);
  return values;
}

CharacterTable character_table(const FiniteGroup& g, int max_dim,
                               const EnumerationOptions& opts) {
  const int n = g.order();
  if (max_dim < 0) max_dim = n - 1;
  if (max_dim > n - 1)
    throw ContractError("character_table: max dimension exceeds order minus one");

  CharacterTable table{g, conjugacy_classes(g), {}};
  for (int d = 1; d <= max_dim; ++d) {
    for (const TropicalRep& rep : enumerate_reps(g, d, opts)) {
      table.rows.push_back(CharacterRow{d, rep.orbit_mask, rep.is_uniform,
                                        tropical_character(g, rep.matroid)});
    }
  }
  return table;
}

}  // namespace tropirep
