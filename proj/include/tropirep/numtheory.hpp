#pragma once

#include <vector>

namespace tropirep {

// Deterministic trial division; n up to 10^12.
bool is_prime(long long n);

// Order of a in the multiplicative group mod prime p.
long long multiplicative_order(long long a, long long p);

// One step of the halving permutation of {1,...,(p-1)/2}:
// n -> n/2 for even n, n -> (p-n)/2 for odd n.
long long mo_step(long long n, long long p);

struct MoReport {
  long long p;
  std::vector<long long> orbit_of_one;
  bool transitive;
  bool cond_primitive_root;    // 2 generates Z_p^*
  bool cond_7mod8_halforder;   // p = 7 mod 8 and ord(2) = (p-1)/2
};

// Iterates the halving permutation from 1 and records whether its single
// cycle covers everything; also evaluates the two number-theoretic
// conditions and asserts that transitivity matches their disjunction.
MoReport mo_report(long long p);

// The disjunction of the two conditions above; the hypothesis under which
// the rank-two enumeration of a prime-order cyclic group is provably
// uniform-only.
bool thm_prime2dim_applicable(long long p);

}  // namespace tropirep
