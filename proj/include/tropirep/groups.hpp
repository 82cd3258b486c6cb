#pragma once

#include <string>
#include <vector>

namespace tropirep {

// Default cap on group order.  Everything downstream is desk scale; subset
// tables grow as C(n,d), so large groups are rejected early.
inline constexpr int kMaxGroupOrder = 64;

// A finite group given by its full Cayley table.  Element 0 is always the
// identity; the constructor validates identity position, that rows and
// columns are permutations, and associativity on all triples.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::vector<int>> cayley, std::vector<std::string> labels,
              int max_order = kMaxGroupOrder);

  int order() const { return static_cast<int>(cayley_.size()); }
  int mul(int g, int h) const { return cayley_[g][h]; }
  int inverse(int g) const;
  int element_order(int g) const;
  bool is_abelian() const;
  const std::string& label(int g) const { return labels_[g]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<int>>& table() const { return cayley_; }

  // Structural equality: same order and same Cayley table (labels ignored).
  bool operator==(const FiniteGroup& o) const { return cayley_ == o.cayley_; }

 private:
  std::vector<std::vector<int>> cayley_;
  std::vector<std::string> labels_;
};

struct ConjugacyClasses {
  std::vector<std::vector<int>> classes;  // sorted members, classes sorted by representative
  std::vector<int> representatives;       // minimal element of each class
};

// Z_n with cayley[i][j] = (i+j) mod n and labels "0".."n-1".
FiniteGroup make_cyclic(int n, int max_order = kMaxGroupOrder);

// Direct product; element (x, y) gets index x*|b| + y.
FiniteGroup make_product(const FiniteGroup& a, const FiniteGroup& b,
                         int max_order = kMaxGroupOrder);

// Dihedral group of order 2m with presentation r^m = s^2 = (sr)^2 = 1.
// Element s^a r^j gets index 2j + a, so the order-6 case lists the basis as
// 1, s, r, sr, r^2, sr^2.
FiniteGroup make_dihedral(int m, int max_order = kMaxGroupOrder);

ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

// Cayley file format: line 1 holds n, the next n lines hold n integers in
// 0..n-1 each; row g column h gives g*h.  Element 0 must be the identity.
// LF or CRLF line endings.
FiniteGroup parse_cayley_file(const std::string& text, int max_order = kMaxGroupOrder);

// Least common multiple of all element orders.
int group_exponent(const FiniteGroup& g);

}  // namespace tropirep
