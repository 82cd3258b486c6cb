#include "tropirep/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "json.hpp"
#include "tropirep/errors.hpp"

namespace tropirep {

namespace {

using Poly = std::vector<BigInt>;  // dense, constant term first

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// quotient of a by monic b; remainder must vanish
Poly poly_divexact_monic(Poly a, const Poly& b) {
  if (b.back() != 1) throw InternalError("poly division: divisor not monic");
  const int db = static_cast<int>(b.size()) - 1;
  const int da = static_cast<int>(a.size()) - 1;
  if (da < db) throw InternalError("poly division: degree underflow");
  Poly q(da - db + 1, 0);
  for (int i = da; i >= db; --i) {
    const BigInt c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  trim(a);
  if (a.size() != 1 || a[0] != 0) throw InternalError("poly division: nonzero remainder");
  return q;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(int m) {
  if (m < 1 || m > 1000) throw ContractError("cyclotomic_polynomial: m out of range [1,1000]");
  std::map<int, Poly> memo;
  for (int k = 1; k <= m; ++k) {
    if (m % k != 0) continue;
    Poly p(k + 1, 0);  // x^k - 1
    p[0] = -1;
    p[k] = 1;
    for (const auto& [e, phi_e] : memo)
      if (k % e == 0) p = poly_divexact_monic(std::move(p), phi_e);
    memo[k] = std::move(p);
  }
  return memo[m];
}

CycloContext::CycloContext(int m) : m_(m), phi_(cyclotomic_polynomial(m)) {
  degree_ = static_cast<int>(phi_.size()) - 1;
}

CycloContextPtr make_cyclo_context(int m) {
  return std::make_shared<const CycloContext>(m);
}

namespace {

void check_ctx(const CycloContextPtr& a, const CycloContextPtr& b) {
  if (!a || !b || a->conductor() != b->conductor())
    throw ContractError("CycloInt: context mismatch");
}

// reduce in place modulo Phi_m, leaving exactly degree() coefficients
void reduce_mod_phi(const CycloContext& ctx, Poly& c) {
  const Poly& phi = ctx.minimal_polynomial();
  const int deg = ctx.degree();
  for (int i = static_cast<int>(c.size()) - 1; i >= deg; --i) {
    const BigInt lead = c[i];
    if (lead == 0) continue;
    for (int j = 0; j <= deg; ++j) c[i - deg + j] -= lead * phi[j];
  }
  c.resize(deg);
}

}  // namespace

CycloInt CycloInt::zero(const CycloContextPtr& ctx) {
  return CycloInt(ctx, Poly(ctx->degree(), 0));
}

CycloInt CycloInt::one(const CycloContextPtr& ctx) {
  return integer(ctx, 1);
}

CycloInt CycloInt::integer(const CycloContextPtr& ctx, const BigInt& v) {
  Poly c(std::max(ctx->degree(), 1), 0);
  c[0] = v;
  reduce_mod_phi(*ctx, c);
  return CycloInt(ctx, std::move(c));
}

CycloInt CycloInt::from_coeffs(const CycloContextPtr& ctx, std::vector<BigInt> coeffs) {
  if (coeffs.empty()) coeffs.assign(1, 0);
  if (static_cast<int>(coeffs.size()) < ctx->degree()) coeffs.resize(ctx->degree(), 0);
  reduce_mod_phi(*ctx, coeffs);
  return CycloInt(ctx, std::move(coeffs));
}

bool CycloInt::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const BigInt& c) { return c == 0; });
}

CycloInt CycloInt::operator+(const CycloInt& o) const {
  check_ctx(ctx_, o.ctx_);
  Poly c = coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
  return CycloInt(ctx_, std::move(c));
}

CycloInt CycloInt::operator-(const CycloInt& o) const {
  check_ctx(ctx_, o.ctx_);
  Poly c = coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs_[i];
  return CycloInt(ctx_, std::move(c));
}

CycloInt CycloInt::operator*(const CycloInt& o) const {
  check_ctx(ctx_, o.ctx_);
  const int deg = ctx_->degree();
  Poly c(2 * deg - 1 > 0 ? 2 * deg - 1 : 1, 0);
  for (int i = 0; i < deg; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; j < deg; ++j) {
      if (o.coeffs_[j] == 0) continue;
      c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  reduce_mod_phi(*ctx_, c);
  return CycloInt(ctx_, std::move(c));
}

CycloInt CycloInt::operator-() const {
  Poly c = coeffs_;
  for (auto& v : c) v = -v;
  return CycloInt(ctx_, std::move(c));
}

bool CycloInt::operator==(const CycloInt& o) const {
  check_ctx(ctx_, o.ctx_);
  return coeffs_ == o.coeffs_;
}

CycloInt CycloInt::galois_conjugate(long long k) const {
  const int m = ctx_->conductor();
  const long long kk = ((k % m) + m) % m;
  if (std::gcd(kk, static_cast<long long>(m)) != 1)
    throw ContractError("galois_conjugate: exponent not coprime to conductor");
  Poly c(m, 0);
  for (int i = 0; i < ctx_->degree(); ++i) c[(i * kk) % m] += coeffs_[i];
  reduce_mod_phi(*ctx_, c);
  return CycloInt(ctx_, std::move(c));
}

std::string CycloInt::to_string() const {
  std::string s;
  for (int i = 0; i < ctx_->degree(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += coeffs_[i].str();
    if (i >= 1) {
      s += "*z";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

CycloInt zeta_pow(const CycloContextPtr& ctx, long long k) {
  const int m = ctx->conductor();
  const long long kk = ((k % m) + m) % m;
  Poly c(m, 0);
  c[kk] = 1;
  return CycloInt::from_coeffs(ctx, std::move(c));
}

CycloInt div_exact(const CycloInt& a, const CycloInt& b) {
  check_ctx(a.context(), b.context());
  if (b.is_zero()) throw ContractError("div_exact: division by zero");
  const CycloContextPtr& ctx = a.context();
  const int m = ctx->conductor();

  CycloInt conj_prod = CycloInt::one(ctx);
  for (int k = 2; k < m; ++k)
    if (std::gcd(k, m) == 1) conj_prod = conj_prod * b.galois_conjugate(k);

  const CycloInt norm = b * conj_prod;
  for (int i = 1; i < ctx->degree(); ++i)
    if (norm.coeffs()[i] != 0) throw InternalError("div_exact: norm is not rational");
  const BigInt n0 = norm.coeffs()[0];
  if (n0 == 0) throw InternalError("div_exact: zero norm for nonzero element");

  const CycloInt num = a * conj_prod;
  Poly q(ctx->degree());
  for (int i = 0; i < ctx->degree(); ++i) {
    q[i] = num.coeffs()[i] / n0;
    if (q[i] * n0 != num.coeffs()[i])
      throw InternalError("div_exact: inexact division");
  }
  return CycloInt::from_coeffs(ctx, std::move(q));
}

CycloMatrix make_cyclo_matrix(const CycloContextPtr& ctx, int rows, int cols) {
  if (rows < 0 || cols < 0) throw ContractError("make_cyclo_matrix: negative size");
  CycloMatrix m;
  m.ctx = ctx;
  m.rows = rows;
  m.cols = cols;
  m.entries.assign(static_cast<std::size_t>(rows) * cols, CycloInt::zero(ctx));
  return m;
}

namespace {

CycloInt det_cofactor(const CycloMatrix& mat, std::vector<int> cols, int row) {
  const int size = static_cast<int>(cols.size());
  if (size == 1) return mat.at(row, cols[0]);
  CycloInt acc = CycloInt::zero(mat.ctx);
  for (int t = 0; t < size; ++t) {
    if (mat.at(row, cols[t]).is_zero()) continue;
    std::vector<int> rest;
    rest.reserve(size - 1);
    for (int q = 0; q < size; ++q)
      if (q != t) rest.push_back(cols[q]);
    const CycloInt sub = det_cofactor(mat, std::move(rest), row + 1);
    const CycloInt term = mat.at(row, cols[t]) * sub;
    acc = (t % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

CycloInt det_bareiss(CycloMatrix m) {
  const int n = m.rows;
  int sign = 1;
  CycloInt prev = CycloInt::one(m.ctx);
  for (int k = 0; k + 1 < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n && pivot < 0; ++i)
      if (!m.at(i, k).is_zero()) pivot = i;
    if (pivot < 0) return CycloInt::zero(m.ctx);
    if (pivot != k) {
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        const CycloInt num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = div_exact(num, prev);
      }
      m.at(i, k) = CycloInt::zero(m.ctx);
    }
    prev = m.at(k, k);
  }
  const CycloInt d = m.at(n - 1, n - 1);
  return sign == 1 ? d : -d;
}

}  // namespace

CycloInt det(const CycloMatrix& mat) {
  if (mat.rows != mat.cols) throw ContractError("det: matrix not square");
  if (mat.rows == 0) return CycloInt::one(mat.ctx);
  if (mat.rows <= 4) {
    std::vector<int> cols(mat.cols);
    for (int i = 0; i < mat.cols; ++i) cols[i] = i;
    return det_cofactor(mat, std::move(cols), 0);
  }
  return det_bareiss(mat);
}

namespace {

CycloInt parse_entry(const CycloContextPtr& ctx, const nlohmann::json& e) {
  if (e.is_number_integer()) return CycloInt::integer(ctx, BigInt(e.get<long long>()));
  if (e.is_string()) {
    std::string s = e.get<std::string>();
    bool neg = false;
    if (!s.empty() && s[0] == '-') {
      neg = true;
      s = s.substr(1);
    }
    long long k = 1;
    if (s == "z") {
      k = 1;
    } else if (s.rfind("z^", 0) == 0) {
      try {
        std::size_t used = 0;
        k = std::stoll(s.substr(2), &used);
        if (used != s.size() - 2) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ParseError("matrix JSON: bad power in entry '" + e.get<std::string>() + "'");
      }
    } else {
      throw ParseError("matrix JSON: bad string entry '" + e.get<std::string>() +
                       "' (expected \"z\" or \"z^k\")");
    }
    const CycloInt z = zeta_pow(ctx, k);
    return neg ? -z : z;
  }
  if (e.is_array()) {
    std::vector<BigInt> coeffs;
    for (const auto& c : e) {
      if (!c.is_number_integer())
        throw ParseError("matrix JSON: coefficient vectors must hold integers");
      coeffs.emplace_back(c.get<long long>());
    }
    return CycloInt::from_coeffs(ctx, std::move(coeffs));
  }
  throw ParseError("matrix JSON: entry must be an integer, \"z^k\", or an array");
}

}  // namespace

CycloMatrix parse_matrix_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("matrix JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("m") || !doc.contains("rows"))
    throw ParseError("matrix JSON: expected an object with \"m\" and \"rows\"");
  if (!doc["m"].is_number_integer())
    throw ParseError("matrix JSON: \"m\" must be an integer");
  const long long m = doc["m"].get<long long>();
  if (m < 1 || m > 1000) throw ParseError("matrix JSON: conductor out of range [1,1000]");
  const auto& rows = doc["rows"];
  if (!rows.is_array() || rows.empty())
    throw ParseError("matrix JSON: \"rows\" must be a nonempty array");

  const CycloContextPtr ctx = make_cyclo_context(static_cast<int>(m));
  const int r = static_cast<int>(rows.size());
  if (!rows[0].is_array() || rows[0].empty())
    throw ParseError("matrix JSON: each row must be a nonempty array");
  const int c = static_cast<int>(rows[0].size());
  CycloMatrix mat = make_cyclo_matrix(ctx, r, c);
  for (int i = 0; i < r; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != c)
      throw ParseError("matrix JSON: ragged rows");
    for (int j = 0; j < c; ++j) mat.at(i, j) = parse_entry(ctx, rows[i][j]);
  }
  return mat;
}

}  // namespace tropirep
