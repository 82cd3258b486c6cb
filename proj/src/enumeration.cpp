#include "tropirep/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "tropirep/errors.hpp"

namespace tropirep {

namespace {

BitMultivector orbit_union(const OrbitDecomposition& dec, const SubsetCodec& codec,
                           std::uint32_t mask) {
  BitMultivector mv = BitMultivector::zeros(codec);
  for (std::size_t k = 0; k < dec.orbits.size(); ++k) {
    if (!(mask & (1u << k))) continue;
    for (std::uint64_t i = 0; i < codec.count(); ++i)
      if (dec.orbits[k].bits[i]) mv.bits[i] = 1;
  }
  return mv;
}

// Filters candidate masks across worker threads; chunks are emitted in
// order, so the result is independent of scheduling.
std::vector<std::uint32_t> filter_masks(std::uint32_t total,
                                        const OrbitDecomposition& dec,
                                        const SubsetCodec& codec, bool parallel) {
  const std::uint32_t kChunk = 1u << 12;
  const std::uint32_t chunks = (total + kChunk - 1) / kChunk;
  std::vector<std::vector<std::uint32_t>> hits(chunks);

  auto scan_chunk = [&](std::uint32_t c) {
    const std::uint32_t lo = c * kChunk + 1;
    const std::uint32_t hi = std::min(total, lo + kChunk - 1);
    for (std::uint32_t mask = lo; mask <= hi; ++mask) {
      if (is_plucker(orbit_union(dec, codec, mask))) hits[c].push_back(mask);
    }
  };

  unsigned workers = parallel ? std::thread::hardware_concurrency() : 1;
  if (workers <= 1 || chunks <= 1) {
    for (std::uint32_t c = 0; c < chunks; ++c) scan_chunk(c);
  } else {
    std::atomic<std::uint32_t> next{0};
    std::vector<std::thread> pool;
    workers = std::min<unsigned>(workers, chunks);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::uint32_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1))
          scan_chunk(c);
      });
    for (auto& t : pool) t.join();
  }

  std::vector<std::uint32_t> out;
  for (const auto& h : hits) out.insert(out.end(), h.begin(), h.end());
  return out;
}

}  // namespace

std::vector<TropicalRep> enumerate_reps(const FiniteGroup& g, int d,
                                        const EnumerationOptions& opts) {
  const int n = g.order();
  if (d < 1 || d > n) throw ContractError("enumerate_reps: rank out of range");
  if (opts.orbit_cap < 1 || opts.orbit_cap > 30)
    throw ContractError("enumerate_reps: orbit cap out of range [1,30]");

  // orbits have size at most |G|, so C(n,d)/|G| is a lower bound on their
  // number; reject before building any subset table
  const std::uint64_t count = binomial(n, d);
  if (count > static_cast<std::uint64_t>(opts.orbit_cap) * n)
    throw CapacityError("enumerate_reps: at least " +
                        std::to_string((count + n - 1) / n) +
                        " orbits, cap is " + std::to_string(opts.orbit_cap));

  const SubsetAction action = build_action(g, d);
  const OrbitDecomposition dec = orbit_decomposition(action);
  const int k = static_cast<int>(dec.orbits.size());
  if (k > opts.orbit_cap)
    throw CapacityError("enumerate_reps: " + std::to_string(k) +
                        " orbits, cap is " + std::to_string(opts.orbit_cap));

  const std::uint32_t total = (1u << k) - 1;
  const std::vector<std::uint32_t> masks =
      filter_masks(total, dec, action.codec, opts.parallel);

  std::vector<TropicalRep> reps;
  reps.reserve(masks.size());
  for (std::uint32_t mask : masks) {
    Matroid m = Matroid::from_multivector(orbit_union(dec, action.codec, mask));
    reps.push_back(TropicalRep{d, mask, std::move(m), mask == total, {}, {}, {}});
  }
  return reps;  // chunked scan already yields ascending masks
}

ExtremalReport classify_extremal_dims(const FiniteGroup& g,
                                      const EnumerationOptions& opts) {
  ExtremalReport report;
  report.dim_one = enumerate_reps(g, 1, opts);
  if (report.dim_one.size() != 1 || !report.dim_one[0].is_uniform)
    throw InternalError("classify_extremal_dims: dimension one is not just uniform");
  if (g.order() >= 2) {
    report.has_codim = true;
    report.codim_one = enumerate_reps(g, g.order() - 1, opts);
    if (report.codim_one.size() != 1 || !report.codim_one[0].is_uniform)
      throw InternalError("classify_extremal_dims: codimension one is not just uniform");
  }
  return report;
}

bool is_indecomposable(const TropicalRep& rep,
                       const std::map<int, std::vector<TropicalRep>>& reps_by_dim) {
  const int d = rep.dim;
  for (int d1 = 1; d1 < d; ++d1)
    if (!reps_by_dim.count(d1))
      throw ContractError("is_indecomposable: missing dimension " + std::to_string(d1));
  for (int d1 = 1; 2 * d1 <= d; ++d1) {
    const int d2 = d - d1;
    for (const TropicalRep& a : reps_by_dim.at(d1))
      for (const TropicalRep& b : reps_by_dim.at(d2)) {
        const std::optional<Matroid> w = wedge(a.matroid, b.matroid);
        if (w && *w == rep.matroid) return false;
      }
  }
  return true;
}

TropicalRep maschke_complement(const FiniteGroup& g, const TropicalRep& rep) {
  const Matroid dm = dual(rep.matroid);
  const int cd = dm.rank();
  if (cd == 0) {
    // dual of the free matroid: single empty basis, one orbit
    return TropicalRep{0, 1u, dm, true, {}, {}, {}};
  }
  const SubsetAction action = build_action(g, cd);
  const OrbitDecomposition dec = orbit_decomposition(action);
  std::uint32_t mask = 0;
  for (std::uint64_t i = 0; i < action.codec.count(); ++i)
    if (dm.plucker().bits[i]) mask |= 1u << dec.orbit_of[i];
  const std::uint32_t full = (1u << dec.orbits.size()) - 1;
  return TropicalRep{cd, mask, dm, mask == full, {}, {}, {}};
}

}  // namespace tropirep
