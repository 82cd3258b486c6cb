#pragma once

#include <cstdint>
#include <vector>

namespace tropirep {

// Exact binomial coefficient C(n, k) for 0 <= n <= 64.  All values fit in
// an unsigned 64-bit integer (max is C(64,32) ~ 1.8e18); out-of-range
// arguments throw.
std::uint64_t binomial(int n, int k);

// Canonical bijection between the d-subsets of {0,...,n-1} and the dense
// index range 0..C(n,d)-1, in colexicographic order: a subset S precedes T
// iff max(S xor T) lies in T.  Rank of {s_0 < s_1 < ... < s_{d-1}} is
// sum_i C(s_i, i+1).
class SubsetCodec {
 public:
  SubsetCodec(int n, int d);

  int n() const { return n_; }
  int d() const { return d_; }
  std::uint64_t count() const { return count_; }

  // s must be strictly increasing with elements in [0, n).
  std::uint64_t rank(const std::vector<int>& s) const;
  std::vector<int> unrank(std::uint64_t k) const;

  bool operator==(const SubsetCodec& o) const { return n_ == o.n_ && d_ == o.d_; }

 private:
  int n_;
  int d_;
  std::uint64_t count_;
};

// A 0/1 vector indexed by the d-subsets of an n-set; the Boolean coordinates
// of an element of the d-th exterior power of the free module on n basis
// vectors.
struct BitMultivector {
  SubsetCodec codec;
  std::vector<std::uint8_t> bits;  // length codec.count()

  static BitMultivector zeros(const SubsetCodec& c);
  static BitMultivector ones(const SubsetCodec& c);

  bool any() const;
  std::uint64_t popcount() const;

  bool operator==(const BitMultivector& o) const {
    return codec == o.codec && bits == o.bits;
  }
};

}  // namespace tropirep
