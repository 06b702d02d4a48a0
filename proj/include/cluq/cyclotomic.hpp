/*
 * Copyright 2026 The cluq authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cluq/errors.hpp"
#include "cluq/numeric.hpp"

namespace cluq {

namespace detail {

inline long totient(long n) {
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

// integer polynomials, coefficient i of x^i, no trailing zeros
inline std::vector<Int> zpoly_trim(std::vector<Int> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline std::vector<Int> zpoly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Int> c(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// exact division of integer polynomials (monic or not, remainder must vanish)
inline std::vector<Int> zpoly_divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
  num = zpoly_trim(num);
  if (den.empty()) throw DivisionByZeroError("polynomial division by zero");
  std::vector<Int> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Int(0));
  while (zpoly_trim(num).size() >= den.size()) {
    num = zpoly_trim(num);
    std::size_t shift = num.size() - den.size();
    if (num.back() % den.back() != 0) throw InternalError("inexact integer polynomial division");
    Int c = num.back() / den.back();
    q[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
  }
  if (!zpoly_trim(num).empty()) throw InternalError("nonzero remainder in exact polynomial division");
  return zpoly_trim(q);
}

/// Coefficients of the n-th cyclotomic polynomial, by dividing x^n - 1 by
/// the product of the lower cyclotomic polynomials of divisor orders.
inline std::vector<Int> cyclotomic_polynomial(long n) {
  std::vector<Int> num(static_cast<std::size_t>(n) + 1, Int(0));
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  std::vector<Int> den{Int(1)};
  for (long d = 1; d < n; ++d)
    if (n % d == 0) den = zpoly_mul(den, cyclotomic_polynomial(d));
  return zpoly_divide_exact(num, den);
}

}  // namespace detail

/// The field Q(zeta) with zeta a primitive ell-th root of unity, represented
/// modulo the ell-th cyclotomic polynomial (a genuine field: no zero divisors).
class CycloContext : public std::enable_shared_from_this<CycloContext> {
 public:
  static std::shared_ptr<const CycloContext> make(long ell) {
    if (ell < 1) throw DomainError("cyclotomic order must be positive");
    auto ctx = std::shared_ptr<CycloContext>(new CycloContext(ell));
    return ctx;
  }

  long ell() const { return ell_; }
  std::size_t degree() const { return phi_.size() - 1; }
  const std::vector<Int>& cyclotomic_polynomial() const { return phi_; }

 private:
  explicit CycloContext(long ell) : ell_(ell), phi_(detail::cyclotomic_polynomial(ell)) {
    if (static_cast<long>(phi_.size()) - 1 != detail::totient(ell))
      throw InternalError("cyclotomic polynomial degree disagrees with the totient");
  }

  long ell_;
  std::vector<Int> phi_;
};

using CycloCtx = std::shared_ptr<const CycloContext>;

/// Exact element of Q(zeta_ell): a rational coefficient vector of length
/// deg(Phi_ell) representing a residue mod Phi_ell.
class Cyclo {
 public:
  Cyclo() = default;  // zero with no context; usable only as a placeholder
  Cyclo(CycloCtx ctx, const Rat& constant) : ctx_(std::move(ctx)), c_(ctx_->degree(), Rat(0)) {
    if (!c_.empty()) c_[0] = constant;
    if (c_.empty() && constant != 0) throw InternalError("degree-0 cyclotomic context");
  }

  static Cyclo zero(CycloCtx ctx) { return Cyclo(std::move(ctx), Rat(0)); }
  static Cyclo one(CycloCtx ctx) { return Cyclo(std::move(ctx), Rat(1)); }

  /// Canonical representative of zeta^(k mod ell).
  static Cyclo zeta_power(CycloCtx ctx, const Int& k) {
    long ell = ctx->ell();
    long kk = to_int64(mod_nonneg(k, Int(ell)));
    std::vector<Rat> raw(static_cast<std::size_t>(kk) + 1, Rat(0));
    raw.back() = 1;
    Cyclo r;
    r.ctx_ = std::move(ctx);
    r.c_ = reduce(*r.ctx_, std::move(raw));
    return r;
  }

  const CycloCtx& context() const { return ctx_; }
  const std::vector<Rat>& coefficients() const { return c_; }

  bool is_zero() const {
    for (const Rat& x : c_)
      if (x != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  Rat rational_part() const { return c_.empty() ? Rat(0) : c_[0]; }

  /// The commutative degeneration zeta -> 1. Rational multiples of roots of
  /// unity (every scalar the quantum constructions produce) drop the root:
  /// q zeta^k -> q, for any k. Other elements fall back to the coefficient
  /// sum; no map on the whole field can be multiplicative here, since a ring
  /// homomorphism Q(zeta) -> Q would have to be injective.
  Rat specialize_to_one() const {
    if (is_zero()) return Rat(0);
    Cyclo zinv = zeta_power(ctx_, -1);
    Cyclo cur = *this;
    for (long k = 0; k < ctx_->ell(); ++k) {
      if (cur.is_rational()) return cur.rational_part();
      cur = cur * zinv;
    }
    Rat s = 0;
    for (const Rat& x : c_) s += x;
    return s;
  }

  friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    check_ctx(a, b);
    Cyclo r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
  }
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b) {
    check_ctx(a, b);
    Cyclo r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
  }
  friend Cyclo operator-(const Cyclo& a) {
    Cyclo r = a;
    for (Rat& x : r.c_) x = -x;
    return r;
  }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    check_ctx(a, b);
    std::size_t d = a.c_.size();
    if (d == 0) return a;
    std::vector<Rat> prod(2 * d - 1, Rat(0));
    for (std::size_t i = 0; i < d; ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (b.c_[j] == 0) continue;
        prod[i + j] += a.c_[i] * b.c_[j];
      }
    }
    Cyclo r;
    r.ctx_ = a.ctx_;
    r.c_ = reduce(*a.ctx_, std::move(prod));
    return r;
  }
  friend Cyclo operator*(const Cyclo& a, const Rat& s) {
    Cyclo r = a;
    for (Rat& x : r.c_) x *= s;
    return r;
  }
  friend Cyclo operator*(const Rat& s, const Cyclo& a) { return a * s; }

  Cyclo inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero cyclotomic number");
    // extended Euclid in Q[x] against Phi_ell (irreducible, so gcd = 1)
    std::vector<Rat> phi(ctx_->cyclotomic_polynomial().size());
    for (std::size_t i = 0; i < phi.size(); ++i) phi[i] = Rat(ctx_->cyclotomic_polynomial()[i]);
    std::vector<Rat> r0 = phi, r1 = trim(c_);
    std::vector<Rat> s0 = {}, s1 = {Rat(1)};  // coefficients on *this
    while (!r1.empty()) {
      auto [q, rem] = qpoly_divmod(r0, r1);
      std::vector<Rat> s2 = qpoly_sub(s0, qpoly_mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    if (r0.size() != 1) throw InternalError("cyclotomic gcd is not a unit");
    Rat lead = r0[0];
    for (Rat& x : s0) x /= lead;
    Cyclo inv;
    inv.ctx_ = ctx_;
    inv.c_ = reduce(*ctx_, std::move(s0));
    return inv;
  }

  friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

  friend bool operator==(const Cyclo& a, const Cyclo& b) {
    check_ctx(a, b);
    return a.c_ == b.c_;
  }
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  /// Canonical rendering as a coefficient tuple "[c0,c1,...]".
  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ",";
      s += to_string(c_[i]);
    }
    s += "]";
    return s;
  }

 private:
  static void check_ctx(const Cyclo& a, const Cyclo& b) {
    if (a.ctx_ == b.ctx_) return;
    if (!a.ctx_ || !b.ctx_ || a.ctx_->ell() != b.ctx_->ell() ||
        a.ctx_->cyclotomic_polynomial() != b.ctx_->cyclotomic_polynomial())
      throw ContextMismatchError("cyclotomic numbers from different contexts");
  }

  static std::vector<Rat> trim(std::vector<Rat> p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
  }

  static std::vector<Rat> qpoly_sub(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return trim(r);
  }

  static std::vector<Rat> qpoly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return trim(r);
  }

  static std::pair<std::vector<Rat>, std::vector<Rat>> qpoly_divmod(std::vector<Rat> num,
                                                                    const std::vector<Rat>& den) {
    std::vector<Rat> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rat(0));
    while (num.size() >= den.size() && !num.empty()) {
      Rat c = num.back() / den.back();
      std::size_t shift = num.size() - den.size();
      q[shift] = c;
      for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
      num = trim(std::move(num));
    }
    return {trim(std::move(q)), std::move(num)};
  }

  // reduce a raw coefficient vector mod Phi_ell to length deg(Phi_ell)
  static std::vector<Rat> reduce(const CycloContext& ctx, std::vector<Rat> raw) {
    const std::vector<Int>& phi = ctx.cyclotomic_polynomial();
    std::size_t d = ctx.degree();
    while (raw.size() > d) {
      if (raw.back() != 0) {
        Rat c = raw.back();  // phi is monic
        std::size_t shift = raw.size() - phi.size();
        for (std::size_t i = 0; i + 1 < phi.size(); ++i) raw[shift + i] -= c * Rat(phi[i]);
      }
      raw.pop_back();
    }
    raw.resize(d, Rat(0));
    return raw;
  }

  CycloCtx ctx_;
  std::vector<Rat> c_;
};

enum class CycloOp { add, sub, mul, div };

/// Four-function façade used by the CLI layer; throws on context mismatch
/// and on division by zero.
inline Cyclo cyclo_arith(const Cyclo& a, const Cyclo& b, CycloOp op) {
  switch (op) {
    case CycloOp::add: return a + b;
    case CycloOp::sub: return a - b;
    case CycloOp::mul: return a * b;
    case CycloOp::div: return a / b;
  }
  throw InternalError("unreachable");
}

}  // namespace cluq
