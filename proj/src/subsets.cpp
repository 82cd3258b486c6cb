#include "tropirep/subsets.hpp"

#include <algorithm>
#include <numeric>

#include "tropirep/errors.hpp"

namespace tropirep {

namespace {

constexpr int kMaxN = 64;

const std::vector<std::vector<std::uint64_t>>& binomial_table() {
  static const std::vector<std::vector<std::uint64_t>> table = [] {
    std::vector<std::vector<std::uint64_t>> t(kMaxN + 1);
    for (int n = 0; n <= kMaxN; ++n) {
      t[n].assign(n + 1, 1);
      for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
  }();
  return table;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (n < 0 || n > kMaxN) throw ContractError("binomial: n out of range [0,64]");
  if (k < 0 || k > n) return 0;
  return binomial_table()[n][k];
}

SubsetCodec::SubsetCodec(int n, int d) : n_(n), d_(d) {
  if (n < 0 || n > kMaxN) throw ContractError("SubsetCodec: ground size out of range");
  if (d < 0 || d > n) throw ContractError("SubsetCodec: subset size out of range");
  count_ = binomial(n, d);
}

std::uint64_t SubsetCodec::rank(const std::vector<int>& s) const {
  if (static_cast<int>(s.size()) != d_)
    throw ContractError("SubsetCodec::rank: wrong subset size");
  std::uint64_t r = 0;
  int prev = -1;
  for (int i = 0; i < d_; ++i) {
    if (s[i] <= prev || s[i] >= n_)
      throw ContractError("SubsetCodec::rank: subset not strictly increasing in range");
    prev = s[i];
    r += binomial(s[i], i + 1);
  }
  return r;
}

std::vector<int> SubsetCodec::unrank(std::uint64_t k) const {
  if (k >= count_) throw ContractError("SubsetCodec::unrank: index out of range");
  std::vector<int> s(d_);
  int bound = n_;
  for (int i = d_ - 1; i >= 0; --i) {
    int v = bound - 1;
    while (binomial(v, i + 1) > k) --v;
    s[i] = v;
    k -= binomial(v, i + 1);
    bound = v;
  }
  return s;
}

BitMultivector BitMultivector::zeros(const SubsetCodec& c) {
  return BitMultivector{c, std::vector<std::uint8_t>(c.count(), 0)};
}

BitMultivector BitMultivector::ones(const SubsetCodec& c) {
  return BitMultivector{c, std::vector<std::uint8_t>(c.count(), 1)};
}

bool BitMultivector::any() const {
  return std::any_of(bits.begin(), bits.end(), [](std::uint8_t b) { return b != 0; });
}

std::uint64_t BitMultivector::popcount() const {
  return std::accumulate(bits.begin(), bits.end(), std::uint64_t{0});
}

}  // namespace tropirep
