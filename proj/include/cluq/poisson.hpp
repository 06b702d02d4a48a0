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

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cluq/compat.hpp"
#include "cluq/errors.hpp"
#include "cluq/exchange.hpp"
#include "cluq/intmat.hpp"
#include "cluq/laurent.hpp"
#include "cluq/seed.hpp"

namespace cluq {

/// Log-canonical GSV bracket data for one seed. The pairing is evaluated with
/// the transpose of the stored compatible-pair matrix; with the bundled sign
/// fixtures this reproduces the classical bracket table {x1,x2} = x1 x2 of
/// the rank-2 example.
class GSVContext {
 public:
  explicit GSVContext(CompatiblePair pair)
      : pair_(std::move(pair)),
        bracket_(pair_.Lambda.transpose()),
        rank2r_(skew_rank(pair_.Lambda)) {}

  const CompatiblePair& pair() const { return pair_; }
  const IntMatrix& bracket_matrix() const { return bracket_; }
  std::size_t rank2r() const { return rank2r_; }

  Int pairing(const ExpVec& f, const ExpVec& g) const {
    Int acc = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] == 0) continue;
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (g[j] == 0) continue;
        acc += f[i] * bracket_(i, j) * g[j];
      }
    }
    return acc;
  }

 private:
  CompatiblePair pair_;
  IntMatrix bracket_;
  std::size_t rank2r_;
};

/// {x^f, x^g} = <f,g> x^{f+g}, extended bilinearly; exact, antisymmetric,
/// Leibniz in each argument.
inline TPoly<Rat> gsv_bracket(const TPoly<Rat>& a, const TPoly<Rat>& b, const GSVContext& ctx) {
  if (!a.twist().is_classical() || !b.twist().is_classical())
    throw TwistMismatchError("the GSV bracket acts on classical elements");
  if (a.n() != ctx.pair().Lambda.rows() || b.n() != a.n())
    throw DimensionError("bracket operands have the wrong rank");
  TPoly<Rat> r(a.twist());
  for (const auto& [f, ca] : a.terms())
    for (const auto& [g, cb] : b.terms()) {
      Int coeff = ctx.pairing(f, g);
      if (coeff == 0) continue;
      r.add_term(exp_add(f, g), ca * cb * Rat(coeff));
    }
  return r;
}

using WeightVector = std::vector<Int>;

inline bool in_kernel_of_bt(const WeightVector& nu, const ExchangeData& ex) {
  std::vector<Int> img = ex.B().transpose().apply(nu);
  for (const Int& x : img)
    if (x != 0) return false;
  return true;
}

/// Canonical basis of Ker(B^T): the one-parameter torus action weights.
inline std::vector<WeightVector> torus_weights(const ExchangeData& ex) {
  return kernel_basis(ex.B().transpose());
}

/// Weight mutation nu'_k = nu . [b^k]_+ - nu_k; kernel membership of the
/// result against the mutated matrix is verified before returning.
inline WeightVector mutate_weight(const WeightVector& nu, const ExchangeData& ex, std::size_t k) {
  if (nu.size() != ex.n()) throw DimensionError("weight vector has wrong length");
  if (!ex.is_mutable(k)) throw DomainError("mutation direction is not mutable");
  if (!in_kernel_of_bt(nu, ex)) throw DomainError("weight vector is not in Ker(B^T)");
  std::size_t ck = ex.col_of(k);
  Int dot = 0;
  for (std::size_t i = 0; i < ex.n(); ++i) {
    const Int& b = ex.B()(i, ck);
    if (b > 0) dot += nu[i] * b;
  }
  WeightVector out = nu;
  out[k] = dot - nu[k];
  if (!in_kernel_of_bt(out, mutate_exchange(ex, k)))
    throw InternalError("mutated weight left the kernel of the mutated matrix");
  return out;
}

struct HomogeneityReport {
  struct Entry {
    std::size_t var;
    bool homogeneous;
    std::optional<Int> degree;  // nu . f, when well defined
  };
  std::vector<Entry> entries;
  bool all_homogeneous = true;
};

/// Checks that every cluster variable of the seed is nu-homogeneous and
/// reports the degree per variable.
template <class S>
HomogeneityReport weight_homogeneity_check(const Seed<S>& s, const WeightVector& nu) {
  if (nu.size() != s.exchange.n()) throw DimensionError("weight vector has wrong length");
  HomogeneityReport report;
  for (std::size_t v = 0; v < s.vars.size(); ++v) {
    HomogeneityReport::Entry e{v, true, std::nullopt};
    for (const auto& [f, c] : s.vars[v].terms()) {
      Int deg = 0;
      for (std::size_t i = 0; i < nu.size(); ++i) deg += nu[i] * f[i];
      if (!e.degree) {
        e.degree = deg;
      } else if (*e.degree != deg) {
        e.homogeneous = false;
        e.degree = std::nullopt;
        break;
      }
    }
    report.all_homogeneous = report.all_homogeneous && e.homogeneous;
    report.entries.push_back(std::move(e));
  }
  return report;
}

namespace detail {

/// Multivector in the constant exterior algebra on Q^N, keyed by index mask.
using Multivector = std::map<std::uint64_t, Rat>;

inline int wedge_sign(std::uint64_t a, std::uint64_t b) {
  // parity of the number of transpositions to interleave b past a
  int inversions = 0;
  for (std::uint64_t bb = b; bb; bb &= bb - 1) {
    std::uint64_t bit = bb & ~(bb - 1);
    std::uint64_t higher = a & ~(bit | (bit - 1));
    inversions += __builtin_popcountll(higher);
  }
  return inversions % 2 == 0 ? 1 : -1;
}

inline Multivector wedge(const Multivector& x, const Multivector& y) {
  Multivector r;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      if (a & b) continue;
      Rat c = ca * cb * Rat(wedge_sign(a, b));
      auto [it, fresh] = r.emplace(a | b, c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) r.erase(it);
      }
    }
  return r;
}

}  // namespace detail

/// Coefficient of e_1 ^ ... ^ e_N in v_1 ^ ... ^ v_{N-2r} ^ beta^r, where the
/// v_j are the given torus weights and beta is the bivector of the bracket
/// pairing. Requires |theta| = N - skew_rank(Lambda); throws on cardinality
/// or parity mismatch.
inline Rat anticanonical_coefficient(const IntMatrix& Lambda,
                                     const std::vector<WeightVector>& theta) {
  if (Lambda.rows() != Lambda.cols()) throw DimensionError("Lambda must be square");
  if (!Lambda.is_skew_symmetric()) throw DomainError("Lambda must be skew-symmetric");
  std::size_t N = Lambda.rows();
  if (N > 60) throw DomainError("anticanonical coefficient limited to N <= 60");
  std::size_t r2 = skew_rank(Lambda);
  if (theta.size() != N - r2)
    throw DomainError("theta must contain exactly N - rank(Lambda) weights");
  if ((N - theta.size()) % 2 != 0) throw DomainError("parity mismatch");
  std::size_t r = (N - theta.size()) / 2;

  detail::Multivector acc{{0u, Rat(1)}};
  for (const WeightVector& v : theta) {
    if (v.size() != N) throw DimensionError("weight vector has wrong length");
    detail::Multivector one;
    for (std::size_t i = 0; i < N; ++i)
      if (v[i] != 0) one.emplace(std::uint64_t(1) << i, Rat(v[i]));
    acc = detail::wedge(acc, one);
    if (acc.empty()) return Rat(0);
  }
  // beta = sum_{i<k} pairing(e_i, e_k) e_i ^ e_k, with the bracket pairing
  detail::Multivector beta;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = i + 1; k < N; ++k) {
      const Int& c = Lambda(k, i);  // transpose pairing, see GSVContext
      if (c != 0) beta.emplace((std::uint64_t(1) << i) | (std::uint64_t(1) << k), Rat(c));
    }
  for (std::size_t j = 0; j < r; ++j) {
    acc = detail::wedge(acc, beta);
    if (acc.empty()) return Rat(0);
  }
  std::uint64_t full = N == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << N) - 1);
  auto it = acc.find(full);
  return it == acc.end() ? Rat(0) : it->second;
}

/// Divisibility of the bracket by a non-inverted frozen variable:
/// returns {x_i, b} / x_i, which is always exact for log-canonical brackets,
/// and asserts ninv-nonnegativity is preserved when b has that property.
inline TPoly<Rat> frozen_poisson_divisibility(std::size_t i, const TPoly<Rat>& b,
                                              const GSVContext& ctx) {
  const ExchangeData& ex = ctx.pair().B;
  bool is_ninv = false;
  for (std::size_t j : ex.ninv()) is_ninv = is_ninv || j == i;
  if (!is_ninv) throw DomainError("index is not a non-inverted frozen index");

  ExpVec ei = unit_exp(ex.n(), i);
  TPoly<Rat> r(b.twist());
  bool b_nonneg = true;
  for (const auto& [g, c] : b.terms()) {
    for (std::size_t j : ex.ninv()) b_nonneg = b_nonneg && g[j] >= 0;
    Int coeff = ctx.pairing(ei, g);
    if (coeff != 0) r.add_term(g, c * Rat(coeff));
  }
  if (b_nonneg) {
    for (const auto& [g, c] : r.terms())
      for (std::size_t j : ex.ninv())
        if (g[j] < 0) throw InternalError("Poisson-prime divisibility produced a negative exponent");
  }
  return r;
}

}  // namespace cluq
