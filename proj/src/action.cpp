#include "tropirep/action.hpp"

#include <algorithm>

#include "tropirep/errors.hpp"

namespace tropirep {

SubsetAction build_action(const FiniteGroup& g, int d) {
  const int n = g.order();
  if (d < 0 || d > n) throw ContractError("build_action: rank out of range");
  SubsetCodec codec(n, d);
  if (codec.count() > (std::uint64_t{1} << 26))
    throw CapacityError("build_action: subset table too large");

  std::vector<std::vector<std::uint32_t>> perms(
      n, std::vector<std::uint32_t>(codec.count()));
  std::vector<int> image(d);
  for (std::uint64_t idx = 0; idx < codec.count(); ++idx) {
    const std::vector<int> s = codec.unrank(idx);
    for (int h = 0; h < n; ++h) {
      for (int i = 0; i < d; ++i) image[i] = g.mul(h, s[i]);
      std::sort(image.begin(), image.end());
      perms[h][idx] = static_cast<std::uint32_t>(codec.rank(image));
    }
  }
  return SubsetAction{g, codec, std::move(perms)};
}

OrbitDecomposition orbit_decomposition(const SubsetAction& a) {
  const std::uint64_t count = a.codec.count();
  const int n = a.group.order();
  OrbitDecomposition out;
  out.orbit_of.assign(count, -1);
  for (std::uint64_t start = 0; start < count; ++start) {
    if (out.orbit_of[start] >= 0) continue;
    const int id = static_cast<int>(out.orbits.size());
    BitMultivector orbit = BitMultivector::zeros(a.codec);
    // left multiplication already reaches the whole orbit in one sweep
    for (int h = 0; h < n; ++h) {
      const std::uint32_t img = a.perms[h][start];
      orbit.bits[img] = 1;
      out.orbit_of[img] = id;
    }
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

bool is_invariant(const SubsetAction& a, const BitMultivector& mv) {
  if (!(mv.codec == a.codec)) throw ContractError("is_invariant: codec mismatch");
  for (const auto& perm : a.perms)
    for (std::uint64_t i = 0; i < mv.codec.count(); ++i)
      if (mv.bits[i] != mv.bits[perm[i]]) return false;
  return true;
}

}  // namespace tropirep
