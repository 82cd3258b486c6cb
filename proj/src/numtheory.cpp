#include "tropirep/numtheory.hpp"

#include "tropirep/errors.hpp"

namespace tropirep {

namespace {

long long pow_mod(long long base, long long exp, long long mod) {
  long long result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = static_cast<long long>((__int128)result * base % mod);
    base = static_cast<long long>((__int128)base * base % mod);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(long long n) {
  if (n > 1000000000000LL) throw ContractError("is_prime: n out of range");
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long long q = 3; q * q <= n; q += 2)
    if (n % q == 0) return false;
  return true;
}

long long multiplicative_order(long long a, long long p) {
  if (!is_prime(p) || a % p == 0)
    throw ContractError("multiplicative_order: need prime modulus and coprime base");
  long long order = p - 1;
  long long rem = p - 1;
  for (long long q = 2; q * q <= rem; ++q) {
    if (rem % q != 0) continue;
    while (rem % q == 0) rem /= q;
    while (order % q == 0 && pow_mod(a, order / q, p) == 1) order /= q;
  }
  if (rem > 1)
    while (order % rem == 0 && pow_mod(a, order / rem, p) == 1) order /= rem;
  return order;
}

long long mo_step(long long n, long long p) {
  if (n < 1 || n > (p - 1) / 2) throw ContractError("mo_step: value out of range");
  return n % 2 == 0 ? n / 2 : (p - n) / 2;
}

MoReport mo_report(long long p) {
  if (p > 1000000 || p < 3 || !is_prime(p))
    throw ContractError("mo_report: p must be an odd prime at most 10^6");

  MoReport report;
  report.p = p;
  long long n = 1;
  do {
    report.orbit_of_one.push_back(n);
    n = mo_step(n, p);
  } while (n != 1);
  report.transitive =
      static_cast<long long>(report.orbit_of_one.size()) == (p - 1) / 2;

  const long long ord2 = multiplicative_order(2, p);
  report.cond_primitive_root = ord2 == p - 1;
  report.cond_7mod8_halforder = p % 8 == 7 && ord2 == (p - 1) / 2;

  if (report.transitive != (report.cond_primitive_root || report.cond_7mod8_halforder))
    throw TheoremFalsificationError(
        "mo_report: transitivity disagrees with the order conditions at p = " +
        std::to_string(p));
  return report;
}

bool thm_prime2dim_applicable(long long p) {
  if (p < 3 || !is_prime(p))
    throw ContractError("thm_prime2dim_applicable: p must be an odd prime");
  const long long ord2 = multiplicative_order(2, p);
  return ord2 == p - 1 || (p % 8 == 7 && ord2 == (p - 1) / 2);
}

}  // namespace tropirep
