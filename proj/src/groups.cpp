#include "tropirep/groups.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tropirep/errors.hpp"

namespace tropirep {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> cayley,
                         std::vector<std::string> labels, int max_order)
    : cayley_(std::move(cayley)), labels_(std::move(labels)) {
  const int n = static_cast<int>(cayley_.size());
  if (n == 0) throw ContractError("FiniteGroup: order must be positive");
  if (n > max_order)
    throw CapacityError("FiniteGroup: order " + std::to_string(n) +
                        " exceeds maximum " + std::to_string(max_order));
  if (static_cast<int>(labels_.size()) != n)
    throw ContractError("FiniteGroup: label count does not match order");
  for (const auto& row : cayley_) {
    if (static_cast<int>(row.size()) != n)
      throw ContractError("FiniteGroup: Cayley table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw ContractError("FiniteGroup: entry out of range");
  }
  for (int h = 0; h < n; ++h)
    if (cayley_[0][h] != h)
      throw ContractError("FiniteGroup: element 0 is not a left identity");
  for (int g = 0; g < n; ++g)
    if (cayley_[g][0] != g)
      throw ContractError("FiniteGroup: element 0 is not a right identity");
  std::vector<char> seen(n);
  for (int g = 0; g < n; ++g) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int h = 0; h < n; ++h) seen[cayley_[g][h]] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw ContractError("FiniteGroup: row " + std::to_string(g) +
                          " is not a permutation");
  }
  for (int h = 0; h < n; ++h) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int g = 0; g < n; ++g) seen[cayley_[g][h]] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw ContractError("FiniteGroup: column " + std::to_string(h) +
                          " is not a permutation");
  }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k)
        if (cayley_[cayley_[g][h]][k] != cayley_[g][cayley_[h][k]])
          throw ContractError("FiniteGroup: associativity fails at (" +
                              std::to_string(g) + "," + std::to_string(h) + "," +
                              std::to_string(k) + ")");
}

int FiniteGroup::inverse(int g) const {
  const int n = order();
  for (int h = 0; h < n; ++h)
    if (cayley_[g][h] == 0) return h;
  throw InternalError("FiniteGroup: no inverse found");  // unreachable after validation
}

int FiniteGroup::element_order(int g) const {
  int k = 1;
  int x = g;
  while (x != 0) {
    x = cayley_[x][g];
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  const int n = order();
  for (int g = 0; g < n; ++g)
    for (int h = g + 1; h < n; ++h)
      if (cayley_[g][h] != cayley_[h][g]) return false;
  return true;
}

FiniteGroup make_cyclic(int n, int max_order) {
  if (n <= 0) throw ContractError("make_cyclic: order must be positive");
  std::vector<std::vector<int>> cayley(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = std::to_string(i);
    for (int j = 0; j < n; ++j) cayley[i][j] = (i + j) % n;
  }
  return FiniteGroup(std::move(cayley), std::move(labels), max_order);
}

FiniteGroup make_product(const FiniteGroup& a, const FiniteGroup& b, int max_order) {
  const int na = a.order();
  const int nb = b.order();
  if (static_cast<long long>(na) * nb > max_order)
    throw CapacityError("make_product: combined order " +
                        std::to_string(static_cast<long long>(na) * nb) +
                        " exceeds maximum " + std::to_string(max_order));
  const int n = na * nb;
  std::vector<std::vector<int>> cayley(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) {
      labels[x * nb + y] = "(" + a.label(x) + "," + b.label(y) + ")";
      for (int u = 0; u < na; ++u)
        for (int v = 0; v < nb; ++v)
          cayley[x * nb + y][u * nb + v] = a.mul(x, u) * nb + b.mul(y, v);
    }
  return FiniteGroup(std::move(cayley), std::move(labels), max_order);
}

FiniteGroup make_dihedral(int m, int max_order) {
  if (m <= 0) throw ContractError("make_dihedral: parameter must be positive");
  const int n = 2 * m;
  // element s^a r^j at index 2j + a; (s^a r^j)(s^b r^k) = s^(a+b) r^((-1)^b j + k)
  auto idx = [m](int a, int j) { return 2 * ((j % m + m) % m) + a; };
  std::vector<std::vector<int>> cayley(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int j = 0; j < m; ++j)
    for (int a = 0; a < 2; ++a) {
      std::string rot = j == 0 ? "" : (j == 1 ? "r" : "r" + std::to_string(j));
      std::string lbl = (a ? "s" : "") + rot;
      labels[idx(a, j)] = lbl.empty() ? "1" : lbl;
      for (int k = 0; k < m; ++k)
        for (int b = 0; b < 2; ++b)
          cayley[idx(a, j)][idx(b, k)] = idx((a + b) % 2, b ? k - j : k + j);
    }
  return FiniteGroup(std::move(cayley), std::move(labels), max_order);
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<int> cls(n, -1);
  ConjugacyClasses out;
  for (int x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    const int id = static_cast<int>(out.classes.size());
    std::vector<int> members;
    for (int h = 0; h < n; ++h) {
      const int y = g.mul(g.mul(h, x), g.inverse(h));
      if (cls[y] < 0) {
        cls[y] = id;
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    out.representatives.push_back(members.front());
    out.classes.push_back(std::move(members));
  }
  return out;
}

FiniteGroup parse_cayley_file(const std::string& text, int max_order) {
  std::string normalized = text;
  normalized.erase(std::remove(normalized.begin(), normalized.end(), '\r'),
                   normalized.end());
  std::istringstream in(normalized);
  long long n = 0;
  if (!(in >> n) || n <= 0)
    throw ParseError("Cayley file: first token must be a positive order");
  if (n > max_order)
    throw CapacityError("Cayley file: order " + std::to_string(n) +
                        " exceeds maximum " + std::to_string(max_order));
  std::vector<std::vector<int>> cayley(n, std::vector<int>(n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      long long v;
      if (!(in >> v))
        throw ParseError("Cayley file: row " + std::to_string(g) +
                         " is malformed or truncated");
      if (v < 0 || v >= n)
        throw ParseError("Cayley file: entry " + std::to_string(v) +
                         " out of range in row " + std::to_string(g));
      cayley[g][h] = static_cast<int>(v);
    }
  std::string trailing;
  if (in >> trailing) throw ParseError("Cayley file: trailing content after table");
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  try {
    return FiniteGroup(std::move(cayley), std::move(labels), max_order);
  } catch (const ContractError& e) {
    throw ParseError(std::string("Cayley file: ") + e.what());
  }
}

int group_exponent(const FiniteGroup& g) {
  int m = 1;
  for (int x = 0; x < g.order(); ++x) m = std::lcm(m, g.element_order(x));
  return m;
}

}  // namespace tropirep
