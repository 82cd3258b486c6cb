#include "tropirep/matroids.hpp"

#include <algorithm>
#include <cstdint>

#include "tropirep/errors.hpp"

namespace tropirep {

namespace {

// Element bitmask of a subset given by its colex index.
std::uint32_t subset_mask(const SubsetCodec& c, std::uint64_t idx) {
  std::uint32_t m = 0;
  for (int e : c.unrank(idx)) m |= 1u << e;
  return m;
}

}  // namespace

bool is_plucker(const BitMultivector& mv) {
  if (!mv.any()) return false;
  const int n = mv.codec.n();
  const int d = mv.codec.d();
  if (d == 0 || d == n) return true;  // no (A,B) pairs to test

  const SubsetCodec up(n, d + 1);
  const SubsetCodec down(n, d - 1);
  const SubsetCodec& mid = mv.codec;

  // rank(B + i) for every (d-1)-subset B and i outside B; -1 where i in B
  std::vector<std::vector<std::int64_t>> b_union(down.count(),
                                                 std::vector<std::int64_t>(n, -1));
  for (std::uint64_t bi = 0; bi < down.count(); ++bi) {
    const std::vector<int> b = down.unrank(bi);
    std::vector<int> ext(d);
    for (int i = 0; i < n; ++i) {
      if (std::binary_search(b.begin(), b.end(), i)) continue;
      ext.assign(b.begin(), b.end());
      ext.insert(std::upper_bound(ext.begin(), ext.end(), i), i);
      b_union[bi][i] = static_cast<std::int64_t>(mid.rank(ext));
    }
  }

  std::vector<int> a;
  std::vector<int> drop(d);
  std::vector<std::uint64_t> a_minus(d + 1);
  for (std::uint64_t ai = 0; ai < up.count(); ++ai) {
    a = up.unrank(ai);
    for (int pos = 0; pos <= d; ++pos) {
      drop.clear();
      for (int q = 0; q <= d; ++q)
        if (q != pos) drop.push_back(a[q]);
      a_minus[pos] = mid.rank(drop);
    }
    for (std::uint64_t bi = 0; bi < down.count(); ++bi) {
      int support = 0;
      for (int pos = 0; pos <= d && support < 2; ++pos) {
        const std::int64_t bu = b_union[bi][a[pos]];
        if (bu < 0) continue;  // a[pos] lies in B
        if (mv.bits[a_minus[pos]] && mv.bits[static_cast<std::uint64_t>(bu)]) ++support;
      }
      if (support == 1) return false;
    }
  }
  return true;
}

bool is_plucker_exchange_oracle(const BitMultivector& mv) {
  if (!mv.any()) return false;
  const int n = mv.codec.n();
  if (n > 24) throw CapacityError("exchange oracle: ground size too large");

  std::vector<std::uint32_t> bases;
  for (std::uint64_t i = 0; i < mv.codec.count(); ++i)
    if (mv.bits[i]) bases.push_back(subset_mask(mv.codec, i));
  std::vector<std::uint8_t> is_basis(std::size_t{1} << n, 0);
  for (std::uint32_t b : bases) is_basis[b] = 1;

  for (std::uint32_t a : bases)
    for (std::uint32_t b : bases) {
      std::uint32_t rem = a & ~b;
      while (rem) {
        const std::uint32_t xbit = rem & (0u - rem);
        rem ^= xbit;
        bool found = false;
        std::uint32_t cand = b & ~a;
        while (cand && !found) {
          const std::uint32_t ybit = cand & (0u - cand);
          cand ^= ybit;
          found = is_basis[(a ^ xbit) | ybit] != 0;
        }
        if (!found) return false;
      }
    }
  return true;
}

Matroid Matroid::from_multivector(BitMultivector mv) {
  if (!mv.any()) throw ContractError("Matroid: zero multivector");
  if (!is_plucker(mv))
    throw ContractError("Matroid: multivector violates the Pluecker relations");
  return Matroid(std::move(mv));
}

std::vector<std::vector<int>> Matroid::bases() const {
  std::vector<std::vector<int>> out;
  for (std::uint64_t i = 0; i < mv_.codec.count(); ++i)
    if (mv_.bits[i]) out.push_back(mv_.codec.unrank(i));
  return out;
}

Matroid uniform(int n, int d) {
  if (d < 1 || d > n) throw ContractError("uniform: rank out of range");
  return Matroid::from_multivector(BitMultivector::ones(SubsetCodec(n, d)));
}

Matroid dual(const Matroid& m) {
  const int n = m.ground_size();
  const int d = m.rank();
  const SubsetCodec& src = m.plucker().codec;
  SubsetCodec dst(n, n - d);
  BitMultivector out = BitMultivector::zeros(dst);
  std::vector<int> comp;
  for (std::uint64_t i = 0; i < src.count(); ++i) {
    if (!m.plucker().bits[i]) continue;
    const std::vector<int> s = src.unrank(i);
    comp.clear();
    auto it = s.begin();
    for (int e = 0; e < n; ++e) {
      if (it != s.end() && *it == e)
        ++it;
      else
        comp.push_back(e);
    }
    out.bits[dst.rank(comp)] = 1;
  }
  return Matroid::from_multivector(std::move(out));
}

CocircuitSet cocircuits(const Matroid& m) {
  const Matroid md = dual(m);
  const int n = md.ground_size();
  if (n > 24) throw CapacityError("cocircuits: ground size too large");
  std::vector<std::uint32_t> basis_masks;
  for (std::uint64_t i = 0; i < md.plucker().codec.count(); ++i)
    if (md.plucker().bits[i]) basis_masks.push_back(subset_mask(md.plucker().codec, i));

  CocircuitSet out;
  std::vector<std::uint32_t> found;
  // increasing size, lexicographic within a size; supersets of found
  // cocircuits are skipped, so what remains is exactly the minimal
  // dependent sets of the dual
  for (int s = 1; s <= n; ++s) {
    std::vector<int> subset(s);
    for (int i = 0; i < s; ++i) subset[i] = i;
    while (true) {
      std::uint32_t mask = 0;
      for (int e : subset) mask |= 1u << e;
      bool covered = false;
      for (std::uint32_t c : found)
        if ((c & ~mask) == 0) {
          covered = true;
          break;
        }
      if (!covered) {
        bool independent = false;
        for (std::uint32_t b : basis_masks)
          if ((mask & ~b) == 0) {
            independent = true;
            break;
          }
        if (!independent) {
          found.push_back(mask);
          out.cocircuits.push_back(subset);
        }
      }
      // next s-subset in lexicographic order
      int pos = s - 1;
      while (pos >= 0 && subset[pos] == n - s + pos) --pos;
      if (pos < 0) break;
      ++subset[pos];
      for (int q = pos + 1; q < s; ++q) subset[q] = subset[q - 1] + 1;
    }
  }
  return out;
}

std::optional<Matroid> wedge(const Matroid& a, const Matroid& b) {
  const int n = a.ground_size();
  if (b.ground_size() != n) throw ContractError("wedge: ground sizes differ");
  const int da = a.rank();
  const int db = b.rank();
  if (da + db > n) return std::nullopt;

  SubsetCodec dst(n, da + db);
  const SubsetCodec& ca = a.plucker().codec;
  const SubsetCodec& cb = b.plucker().codec;
  BitMultivector out = BitMultivector::zeros(dst);
  bool nonzero = false;

  std::vector<int> left(da), right(db), pick(da);
  for (std::uint64_t k = 0; k < dst.count(); ++k) {
    const std::vector<int> ks = dst.unrank(k);
    // iterate da-subsets of ks by choosing positions
    for (int i = 0; i < da; ++i) pick[i] = i;
    bool hit = false;
    while (!hit) {
      left.clear();
      right.clear();
      int p = 0;
      for (int q = 0; q < da + db; ++q) {
        if (p < da && pick[p] == q) {
          left.push_back(ks[q]);
          ++p;
        } else {
          right.push_back(ks[q]);
        }
      }
      hit = a.plucker().bits[ca.rank(left)] && b.plucker().bits[cb.rank(right)];
      if (hit) break;
      int pos = da - 1;
      while (pos >= 0 && pick[pos] == da + db - da + pos) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int q = pos + 1; q < da; ++q) pick[q] = pick[q - 1] + 1;
    }
    if (hit) {
      out.bits[k] = 1;
      nonzero = true;
    }
  }
  if (!nonzero) return std::nullopt;
  return Matroid::from_multivector(std::move(out));
}

std::optional<Matroid> stable_intersection(const Matroid& a, const Matroid& b) {
  const std::optional<Matroid> w = wedge(dual(a), dual(b));
  if (!w) return std::nullopt;
  return dual(*w);
}

}  // namespace tropirep
