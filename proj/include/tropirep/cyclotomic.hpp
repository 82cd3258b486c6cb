#pragma once

#include <memory>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tropirep {

using BigInt = boost::multiprecision::cpp_int;

// Coefficients of the m-th cyclotomic polynomial, constant term first,
// computed exactly by dividing x^m - 1 by Phi_e for all proper divisors e|m.
std::vector<BigInt> cyclotomic_polynomial(int m);

// Arithmetic context for Z[zeta_m] = Z[x]/(Phi_m).  Immutable and shared.
class CycloContext {
 public:
  explicit CycloContext(int m);

  int conductor() const { return m_; }
  int degree() const { return degree_; }  // Euler phi(m)
  const std::vector<BigInt>& minimal_polynomial() const { return phi_; }

 private:
  int m_;
  int degree_;
  std::vector<BigInt> phi_;
};

using CycloContextPtr = std::shared_ptr<const CycloContext>;

CycloContextPtr make_cyclo_context(int m);

// An element of Z[zeta_m] in canonical form: a coefficient vector of length
// phi(m), fully reduced modulo Phi_m.  Reduction is faithful because Phi_m
// is the minimal polynomial of zeta_m.
class CycloInt {
 public:
  static CycloInt zero(const CycloContextPtr& ctx);
  static CycloInt one(const CycloContextPtr& ctx);
  static CycloInt integer(const CycloContextPtr& ctx, const BigInt& v);
  // Reduces an arbitrary-degree coefficient vector (constant term first).
  static CycloInt from_coeffs(const CycloContextPtr& ctx, std::vector<BigInt> coeffs);

  const CycloContextPtr& context() const { return ctx_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  CycloInt operator+(const CycloInt& o) const;
  CycloInt operator-(const CycloInt& o) const;
  CycloInt operator*(const CycloInt& o) const;
  CycloInt operator-() const;
  bool operator==(const CycloInt& o) const;

  // Image under zeta -> zeta^k; requires gcd(k, m) = 1.
  CycloInt galois_conjugate(long long k) const;

  std::string to_string() const;

 private:
  CycloInt(CycloContextPtr ctx, std::vector<BigInt> coeffs)
      : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {}

  CycloContextPtr ctx_;
  std::vector<BigInt> coeffs_;  // length ctx->degree()
};

// zeta_m^k in canonical form; k is reduced mod m.
CycloInt zeta_pow(const CycloContextPtr& ctx, long long k);

// Exact division in Z[zeta_m]: returns q with q*b = a.  Computed by
// multiplying with the product of the non-trivial Galois conjugates of b
// and dividing by the rational norm.  A non-exact division is an
// InternalError, never a rounded result.
CycloInt div_exact(const CycloInt& a, const CycloInt& b);

struct CycloMatrix {
  CycloContextPtr ctx;
  int rows = 0;
  int cols = 0;
  std::vector<CycloInt> entries;  // row-major

  const CycloInt& at(int r, int c) const { return entries[r * cols + c]; }
  CycloInt& at(int r, int c) { return entries[r * cols + c]; }
};

CycloMatrix make_cyclo_matrix(const CycloContextPtr& ctx, int rows, int cols);

// Exact determinant: cofactor expansion for size <= 4, fraction-free
// elimination with exact division above.
CycloInt det(const CycloMatrix& mat);

// JSON matrix format: {"m": conductor, "rows": [[entry, ...], ...]} where
// entry is an integer, a string "z^k" (optionally "-z^k"; "z" means "z^1"),
// or an array of integer coefficients with the constant term first.
CycloMatrix parse_matrix_json(const std::string& text);

}  // namespace tropirep
