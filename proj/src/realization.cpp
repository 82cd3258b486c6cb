#include "tropirep/realization.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>

#include "tropirep/errors.hpp"
#include "tropirep/subsets.hpp"

namespace tropirep {

namespace {

// Exact minors of a matrix of roots of unity given by an exponent table,
// memoized over (row set, column set) so subsets sharing rows reuse work.
class MinorCache {
 public:
  MinorCache(CycloContextPtr ctx, std::vector<std::vector<int>> exponents)
      : ctx_(std::move(ctx)), exp_(std::move(exponents)) {}

  const CycloInt& minor(std::uint64_t row_mask, std::uint64_t col_mask) {
    const auto key = std::make_pair(row_mask, col_mask);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    CycloInt value = CycloInt::zero(ctx_);
    const int i0 = std::countr_zero(row_mask);
    const std::uint64_t rest_rows = row_mask & (row_mask - 1);
    if (rest_rows == 0) {
      value = zeta_pow(ctx_, exp_[i0][std::countr_zero(col_mask)]);
    } else {
      int t = 0;
      for (std::uint64_t cm = col_mask; cm; cm &= cm - 1, ++t) {
        const int j = std::countr_zero(cm);
        const CycloInt& sub = minor(rest_rows, col_mask & ~(std::uint64_t{1} << j));
        const CycloInt term = zeta_pow(ctx_, exp_[i0][j]) * sub;
        value = (t % 2 == 0) ? value + term : value - term;
      }
    }
    return cache_.emplace(key, std::move(value)).first->second;
  }

  bool minor_is_zero(std::uint64_t row_mask, std::uint64_t col_mask) {
    return minor(row_mask, col_mask).is_zero();
  }

 private:
  CycloContextPtr ctx_;
  std::vector<std::vector<int>> exp_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, CycloInt> cache_;
};

std::uint64_t mask_of(const std::vector<int>& s) {
  std::uint64_t m = 0;
  for (int e : s) m |= std::uint64_t{1} << e;
  return m;
}

}  // namespace

CharacterBasis character_basis(const FiniteGroup& g) {
  if (!g.is_abelian())
    throw UnsupportedError(
        "character_basis: group is not abelian; use tropicalize_matrix with an "
        "explicit monomial representation instead");
  const int n = g.order();
  const int m = group_exponent(g);

  // greedy generating set
  std::vector<int> gens;
  std::vector<char> reached(n, 0);
  reached[0] = 1;
  int covered = 1;
  while (covered < n) {
    int pick = -1;
    for (int x = 1; x < n && pick < 0; ++x)
      if (!reached[x]) pick = x;
    gens.push_back(pick);
    // close under multiplication by the new generator
    bool grew = true;
    while (grew) {
      grew = false;
      for (int x = 0; x < n; ++x) {
        if (!reached[x]) continue;
        for (int ge : gens) {
          const int y = g.mul(ge, x);
          if (!reached[y]) {
            reached[y] = 1;
            ++covered;
            grew = true;
          }
        }
      }
    }
  }

  // a character assigns each generator a multiple of m/ord(gen); keep the
  // assignments that extend to a well-defined homomorphism
  std::vector<int> gen_orders;
  gen_orders.reserve(gens.size());
  for (int ge : gens) gen_orders.push_back(g.element_order(ge));

  std::vector<std::vector<int>> rows;
  std::vector<int> choice(gens.size(), 0);
  while (true) {
    std::vector<int> chi(n, -1);
    chi[0] = 0;
    bool ok = true;
    bool grew = true;
    while (grew && ok) {
      grew = false;
      for (int x = 0; x < n && ok; ++x) {
        if (chi[x] < 0) continue;
        for (std::size_t t = 0; t < gens.size() && ok; ++t) {
          const int y = g.mul(gens[t], x);
          const int v = (chi[x] + choice[t] * (m / gen_orders[t])) % m;
          if (chi[y] < 0) {
            chi[y] = v;
            grew = true;
          } else if (chi[y] != v) {
            ok = false;
          }
        }
      }
    }
    if (ok) rows.push_back(std::move(chi));

    std::size_t pos = 0;
    while (pos < gens.size()) {
      if (++choice[pos] < gen_orders[pos]) break;
      choice[pos] = 0;
      ++pos;
    }
    if (pos == gens.size()) break;
  }

  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  if (static_cast<int>(rows.size()) != n)
    throw InternalError("character_basis: expected " + std::to_string(n) +
                        " characters, found " + std::to_string(rows.size()));
  return CharacterBasis{g, m, std::move(rows)};
}

Matroid tropicalize_matrix(const CycloMatrix& mat) {
  const int r = mat.rows;
  const int c = mat.cols;
  if (r > c) throw ContractError("tropicalize_matrix: more rows than columns");
  const SubsetCodec codec(c, r);
  BitMultivector mv = BitMultivector::zeros(codec);
  bool nonzero = false;
  CycloMatrix sub = make_cyclo_matrix(mat.ctx, r, r);
  for (std::uint64_t j = 0; j < codec.count(); ++j) {
    const std::vector<int> colset = codec.unrank(j);
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) sub.at(a, b) = mat.at(a, colset[b]);
    if (!det(sub).is_zero()) {
      mv.bits[j] = 1;
      nonzero = true;
    }
  }
  if (!nonzero)
    throw RankDeficientError("tropicalize_matrix: all maximal minors vanish");
  return Matroid::from_multivector(std::move(mv));
}

const std::vector<std::vector<int>>* RealizabilityClassification::find(
    const Matroid& m) const {
  for (const auto& [key, subsets] : entries)
    if (key == m) return &subsets;
  return nullptr;
}

RealizabilityClassification classify_realizable(const FiniteGroup& g, int d) {
  const CharacterBasis basis = character_basis(g);
  const int n = g.order();
  if (d < 1 || d > n) throw ContractError("classify_realizable: rank out of range");

  const CycloContextPtr ctx = make_cyclo_context(basis.exponent);
  MinorCache cache(ctx, basis.chars);

  const SubsetCodec chooser(n, d);
  std::map<std::vector<std::uint8_t>, std::vector<std::vector<int>>> grouped;
  for (std::uint64_t ii = 0; ii < chooser.count(); ++ii) {
    const std::vector<int> charset = chooser.unrank(ii);
    const std::uint64_t row_mask = mask_of(charset);
    BitMultivector mv = BitMultivector::zeros(chooser);
    bool nonzero = false;
    for (std::uint64_t jj = 0; jj < chooser.count(); ++jj) {
      if (!cache.minor_is_zero(row_mask, mask_of(chooser.unrank(jj)))) {
        mv.bits[jj] = 1;
        nonzero = true;
      }
    }
    if (!nonzero)
      throw InternalError("classify_realizable: character matrix lost rank");
    grouped[mv.bits].push_back(charset);
  }

  RealizabilityClassification out;
  for (auto& [bits, subsets] : grouped) {
    Matroid m = Matroid::from_multivector(BitMultivector{chooser, bits});
    out.entries.emplace_back(std::move(m), std::move(subsets));
  }
  return out;
}

std::pair<bool, bool> check_cyclic_u2(const FiniteGroup& g) {
  if (!g.is_abelian()) throw UnsupportedError("check_cyclic_u2: group is not abelian");
  const int n = g.order();
  if (n < 2) throw ContractError("check_cyclic_u2: order must be at least 2");
  bool cyclic = false;
  for (int x = 0; x < n && !cyclic; ++x) cyclic = g.element_order(x) == n;
  const RealizabilityClassification cls = classify_realizable(g, 2);
  const bool u2 = cls.find(uniform(n, 2)) != nullptr;
  return {cyclic, u2};
}

bool check_chebotarev(int p) {
  if (p < 2 || p > 13) throw ContractError("check_chebotarev: p out of range [2,13]");
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) throw ContractError("check_chebotarev: p is not prime");

  std::vector<std::vector<int>> exps(p, std::vector<int>(p));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) exps[i][j] = (i * j) % p;
  MinorCache cache(make_cyclo_context(p), std::move(exps));

  for (int d = 1; d <= p; ++d) {
    const SubsetCodec codec(p, d);
    std::vector<std::uint64_t> masks;
    masks.reserve(codec.count());
    for (std::uint64_t i = 0; i < codec.count(); ++i)
      masks.push_back(mask_of(codec.unrank(i)));
    for (std::uint64_t a : masks)
      for (std::uint64_t b : masks)
        if (cache.minor_is_zero(a, b)) return false;
  }
  return true;
}

std::vector<MinorViolation> check_prime_power_minors(int p, int r, int d) {
  long long n = 1;
  for (int i = 0; i < r; ++i) n *= p;
  if (p < 2 || r < 1 || n > 12)
    throw ContractError("check_prime_power_minors: p^r out of range [2,12]");
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) throw ContractError("check_prime_power_minors: p is not prime");
  if (d < 1 || d > n) throw ContractError("check_prime_power_minors: rank out of range");

  const int nn = static_cast<int>(n);
  std::vector<std::vector<int>> exps(nn, std::vector<int>(nn));
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nn; ++j) exps[i][j] = (i * j) % nn;
  MinorCache cache(make_cyclo_context(nn), std::move(exps));

  auto has_mod_p_collision = [p](const std::vector<int>& s) {
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b)
        if ((s[a] - s[b]) % p == 0) return true;
    return false;
  };

  std::vector<MinorViolation> violations;
  const SubsetCodec codec(nn, d);
  for (std::uint64_t a = 0; a < codec.count(); ++a) {
    const std::vector<int> rows = codec.unrank(a);
    for (std::uint64_t b = 0; b < codec.count(); ++b) {
      const std::vector<int> cols = codec.unrank(b);
      if (!cache.minor_is_zero(mask_of(rows), mask_of(cols))) continue;
      if (!has_mod_p_collision(rows) || !has_mod_p_collision(cols))
        violations.push_back(MinorViolation{rows, cols});
    }
  }
  return violations;
}

Matroid realize_d3_standard(const CycloInt& z1, const CycloInt& z2) {
  if (z1.is_zero() && z2.is_zero())
    throw ContractError("realize_d3_standard: (z1, z2) must be nonzero");
  const CycloContextPtr ctx = z1.context();
  const int m = ctx->conductor();
  if (m % 3 != 0)
    throw ContractError("realize_d3_standard: conductor must be divisible by 3");

  const CycloInt w = zeta_pow(ctx, m / 3);   // primitive cube root of unity
  const CycloInt w2 = w * w;

  // columns in basis order 1, s, r, sr, r^2, sr^2
  CycloMatrix mat = make_cyclo_matrix(ctx, 2, 6);
  const CycloInt top[6] = {z1, z2, w2 * z1, w * z2, w * z1, w2 * z2};
  const CycloInt bot[6] = {z2, z1, w * z2, w2 * z1, w2 * z2, w * z1};
  for (int j = 0; j < 6; ++j) {
    mat.at(0, j) = top[j];
    mat.at(1, j) = bot[j];
  }
  return tropicalize_matrix(mat);
}

}  // namespace tropirep
