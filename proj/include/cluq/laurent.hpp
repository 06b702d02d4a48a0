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

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cluq/cyclotomic.hpp"
#include "cluq/errors.hpp"
#include "cluq/intmat.hpp"
#include "cluq/numeric.hpp"

namespace cluq {

using ExpVec = std::vector<Int>;

inline ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline ExpVec unit_exp(std::size_t n, std::size_t i, const Int& c = Int(1)) {
  ExpVec e(n, Int(0));
  e[i] = c;
  return e;
}

/// The division term order: lexicographic on exponent vectors with the last
/// coordinate most significant. Translation invariant, so leading monomials
/// multiply to leading monomials in a twisted group algebra.
struct TermOrder {
  bool operator()(const ExpVec& a, const ExpVec& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

/// Skew-symmetric twist mod ell; the zero twist (ell == 0) is classical mode.
class Twist {
 public:
  static Twist classical(std::size_t n) {
    Twist t;
    t.n_ = n;
    t.ell_ = 0;
    return t;
  }

  /// Reduces an integer lift mod ell; requires skew-symmetry mod ell.
  static Twist quantum(const IntMatrix& omega_lift, long ell) {
    if (ell < 1) throw DomainError("twist modulus must be positive");
    if (omega_lift.rows() != omega_lift.cols())
      throw DimensionError("twist matrix must be square");
    Twist t;
    t.n_ = omega_lift.rows();
    t.ell_ = ell;
    t.w_.resize(t.n_ * t.n_);
    for (std::size_t i = 0; i < t.n_; ++i)
      for (std::size_t j = 0; j < t.n_; ++j)
        t.w_[i * t.n_ + j] = to_int64(mod_nonneg(omega_lift(i, j), Int(ell)));
    for (std::size_t i = 0; i < t.n_; ++i) {
      if (t.w_[i * t.n_ + i] != 0) throw DomainError("twist matrix has nonzero diagonal");
      for (std::size_t j = 0; j < i; ++j)
        if ((t.w_[i * t.n_ + j] + t.w_[j * t.n_ + i]) % ell != 0)
          throw DomainError("twist matrix is not skew-symmetric mod ell");
    }
    return t;
  }

  std::size_t n() const { return n_; }
  long ell() const { return ell_; }
  bool is_classical() const { return ell_ == 0; }

  long entry(std::size_t i, std::size_t j) const {
    return is_classical() ? 0 : w_[i * n_ + j];
  }

  /// Residue matrix with entries in [0, ell).
  IntMatrix matrix() const {
    IntMatrix m(n_, n_);
    if (!is_classical())
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m(i, j) = w_[i * n_ + j];
    return m;
  }

  /// Omega(f, g) reduced into [0, ell); 0 in classical mode.
  long exponent(const ExpVec& f, const ExpVec& g) const {
    if (is_classical()) return 0;
    Int acc = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (f[i] == 0) continue;
      Int row = 0;
      for (std::size_t j = 0; j < n_; ++j) {
        if (g[j] == 0) continue;
        row += Int(w_[i * n_ + j]) * g[j];
      }
      acc += f[i] * row;
    }
    return to_int64(mod_nonneg(acc, Int(ell_)));
  }

  bool operator==(const Twist& o) const {
    return n_ == o.n_ && ell_ == o.ell_ && w_ == o.w_;
  }
  bool operator!=(const Twist& o) const { return !(*this == o); }

 private:
  std::size_t n_ = 0;
  long ell_ = 0;
  std::vector<long> w_;
};

namespace detail {

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rat> {
  static bool is_zero(const Rat& c) { return c == 0; }
  static Rat one_like(const Rat&) { return Rat(1); }
  static Rat div(const Rat& a, const Rat& b) { return a / b; }
  static Rat twist_scaled(const Rat& c, const Twist&, long e) {
    if (e != 0) throw TwistMismatchError("rational coefficients need the zero twist");
    return c;
  }
  static std::string render(const Rat& c) { return to_string(c); }
};

template <>
struct ScalarOps<Cyclo> {
  static bool is_zero(const Cyclo& c) { return c.is_zero(); }
  static Cyclo one_like(const Cyclo& c) { return Cyclo::one(c.context()); }
  static Cyclo div(const Cyclo& a, const Cyclo& b) { return a / b; }
  static Cyclo twist_scaled(const Cyclo& c, const Twist&, long e) {
    if (e == 0) return c;
    return c * Cyclo::zeta_power(c.context(), Int(e));
  }
  static std::string render(const Cyclo& c) { return c.str(); }
};

}  // namespace detail

/// Finitely supported map Z^n -> scalars with multiplication twisted by a
/// skew form: x^f x^g = zeta^{Omega(f,g)} x^{f+g}, zeta = eps^{1/2}.
/// Classical mode is the zero twist with rational scalars.
template <class S>
class TPoly {
 public:
  using Terms = std::map<ExpVec, S, TermOrder>;

  TPoly() : twist_(Twist::classical(0)) {}
  explicit TPoly(Twist twist) : twist_(std::move(twist)) {}

  static TPoly zero(const Twist& t) { return TPoly(t); }

  static TPoly monomial(const Twist& t, const ExpVec& f, const S& c) {
    if (f.size() != t.n()) throw DimensionError("exponent vector length mismatch");
    TPoly p(t);
    p.add_term(f, c);
    return p;
  }

  const Twist& twist() const { return twist_; }
  const Terms& terms() const { return terms_; }
  std::size_t n() const { return twist_.n(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const ExpVec& f, const S& c) {
    if (detail::ScalarOps<S>::is_zero(c)) return;
    auto it = terms_.find(f);
    if (it == terms_.end()) {
      terms_.emplace(f, c);
    } else {
      it->second = it->second + c;
      if (detail::ScalarOps<S>::is_zero(it->second)) terms_.erase(it);
    }
  }

  friend TPoly operator+(const TPoly& a, const TPoly& b) {
    check_twist(a, b);
    TPoly r = a;
    for (const auto& [f, c] : b.terms_) r.add_term(f, c);
    return r;
  }

  friend TPoly operator-(const TPoly& a, const TPoly& b) {
    check_twist(a, b);
    TPoly r = a;
    for (const auto& [f, c] : b.terms_) r.add_term(f, negate(c));
    return r;
  }

  friend TPoly operator-(const TPoly& a) {
    TPoly r(a.twist_);
    for (const auto& [f, c] : a.terms_) r.terms_.emplace(f, negate(c));
    return r;
  }

  friend TPoly operator*(const TPoly& a, const TPoly& b) {
    check_twist(a, b);
    TPoly r(a.twist_);
    for (const auto& [f, ca] : a.terms_)
      for (const auto& [g, cb] : b.terms_) {
        S c = ca * cb;
        long e = a.twist_.exponent(f, g);
        c = detail::ScalarOps<S>::twist_scaled(c, a.twist_, e);
        r.add_term(exp_add(f, g), c);
      }
    return r;
  }

  TPoly scaled(const S& s) const {
    TPoly r(twist_);
    for (const auto& [f, c] : terms_) r.add_term(f, c * s);
    return r;
  }

  /// a^k for k >= 0 (k = 0 needs a nonzero operand to supply the unit).
  TPoly pow(unsigned long k) const {
    if (k == 0) {
      if (terms_.empty()) throw DomainError("0^0 in the twisted ring");
      return monomial(twist_, ExpVec(n(), Int(0)),
                      detail::ScalarOps<S>::one_like(terms_.begin()->second));
    }
    TPoly base = *this;
    std::optional<TPoly> acc;
    while (k > 0) {
      if (k & 1ul) acc = acc ? (*acc) * base : base;
      k >>= 1;
      if (k > 0) base = base * base;
    }
    return *acc;
  }

  /// Central ell-th power: the generators of the central subalgebra.
  TPoly ell_power(long ell) const {
    if (ell < 0) throw DomainError("ell must be nonnegative");
    return pow(static_cast<unsigned long>(ell));
  }

  std::pair<ExpVec, S> leading_term() const {
    if (terms_.empty()) throw DomainError("leading term of zero");
    auto it = terms_.rbegin();
    return {it->first, it->second};
  }

  /// Coordinatewise minimum over the support.
  ExpVec min_exponents() const {
    if (terms_.empty()) throw DomainError("support of zero");
    ExpVec lo = terms_.begin()->first;
    for (const auto& [f, c] : terms_)
      for (std::size_t i = 0; i < lo.size(); ++i)
        if (f[i] < lo[i]) lo[i] = f[i];
    return lo;
  }

  ExpVec max_exponents() const {
    if (terms_.empty()) throw DomainError("support of zero");
    ExpVec hi = terms_.begin()->first;
    for (const auto& [f, c] : terms_)
      for (std::size_t i = 0; i < hi.size(); ++i)
        if (f[i] > hi[i]) hi[i] = f[i];
    return hi;
  }

  friend bool operator==(const TPoly& a, const TPoly& b) {
    return a.twist_ == b.twist_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

  /// Canonical text rendering: terms sorted by the division term order,
  /// exponents as integer tuples, scalars in their canonical form.
  std::string render() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [f, c] : terms_) {
      if (!first) s += " + ";
      first = false;
      s += detail::ScalarOps<S>::render(c);
      s += "*x^(";
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ",";
        s += f[i].str();
      }
      s += ")";
    }
    return s;
  }

 private:
  static void check_twist(const TPoly& a, const TPoly& b) {
    if (a.twist_ != b.twist_) throw TwistMismatchError("operands live in different twisted rings");
  }

  static S negate(const S& c) { return c * Rat(-1); }

  Twist twist_;
  Terms terms_;
};

/// Right division: returns q with a = q * b when it exists in the twisted
/// Laurent ring; otherwise throws NoExactQuotient. Works by cancelling
/// leading terms; candidate quotient exponents are confined to the
/// coordinatewise box forced by the domain property of twisted group algebras.
template <class S>
TPoly<S> exact_divide_right(const TPoly<S>& a, const TPoly<S>& b) {
  if (b.is_zero()) throw DivisionByZeroError("division by the zero element");
  TPoly<S> q(a.twist());
  if (a.is_zero()) return q;
  if (a.twist() != b.twist())
    throw TwistMismatchError("operands live in different twisted rings");

  const ExpVec lo = exp_sub(a.min_exponents(), b.min_exponents());
  const ExpVec hi = exp_sub(a.max_exponents(), b.max_exponents());
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) throw NoExactQuotientError("no exact right quotient (support obstruction)");

  const auto [g, d] = b.leading_term();
  TPoly<S> rem = a;
  while (!rem.is_zero()) {
    const auto [f, c] = rem.leading_term();
    ExpVec h = exp_sub(f, g);
    for (std::size_t i = 0; i < h.size(); ++i)
      if (h[i] < lo[i] || h[i] > hi[i])
        throw NoExactQuotientError("no exact right quotient");
    // choose u so that (u x^h)(d x^g) has leading coefficient c
    S denom = detail::ScalarOps<S>::twist_scaled(d, a.twist(), a.twist().exponent(h, g));
    S u = detail::ScalarOps<S>::div(c, denom);
    TPoly<S> m = TPoly<S>::monomial(a.twist(), h, u);
    q = q + m;
    rem = rem - m * b;
  }
  return q;
}

/// zeta -> 1, twist -> 0 degeneration.
inline TPoly<Rat> specialize_commutative(const TPoly<Cyclo>& a) {
  TPoly<Rat> r(Twist::classical(a.n()));
  for (const auto& [f, c] : a.terms()) r.add_term(f, c.specialize_to_one());
  return r;
}

inline TPoly<Rat> specialize_commutative(const TPoly<Rat>& a) {
  if (!a.twist().is_classical()) throw TwistMismatchError("rational ring is already classical");
  return a;
}

/// Exact partial derivative with respect to variable i (classical mode).
inline TPoly<Rat> partial_derivative(const TPoly<Rat>& p, std::size_t i) {
  TPoly<Rat> r(p.twist());
  for (const auto& [f, c] : p.terms()) {
    if (f[i] == 0) continue;
    ExpVec g = f;
    g[i] -= 1;
    r.add_term(g, c * Rat(f[i]));
  }
  return r;
}

/// Evaluate a classical element at a cyclotomic point (negative exponents
/// require invertible coordinates).
inline Cyclo evaluate(const TPoly<Rat>& p, const std::vector<Cyclo>& point, const CycloCtx& ctx) {
  if (point.size() != p.n()) throw DimensionError("evaluation point has wrong length");
  Cyclo total = Cyclo::zero(ctx);
  for (const auto& [f, c] : p.terms()) {
    Cyclo term(ctx, c);
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] == 0) continue;
      Cyclo base = point[i];
      Int e = f[i];
      if (e < 0) {
        base = base.inverse();
        e = -e;
      }
      for (Int k = 0; k < e; ++k) term = term * base;
    }
    total = total + term;
  }
  return total;
}

}  // namespace cluq
