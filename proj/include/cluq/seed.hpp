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

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cluq/compat.hpp"
#include "cluq/cyclotomic.hpp"
#include "cluq/errors.hpp"
#include "cluq/exchange.hpp"
#include "cluq/laurent.hpp"

namespace cluq {

/// A classical or quantum seed. Every cluster variable is stored as an
/// explicit element of the INITIAL (twisted) Laurent ring; mutated frames are
/// never represented abstractly.
template <class S>
struct Seed {
  ExchangeData exchange;
  Twist form;                    // zero twist in classical mode
  std::vector<TPoly<S>> vars;    // length N, in initial-ring coordinates
  std::vector<std::size_t> history;

  bool is_quantum() const { return !form.is_classical(); }
};

/// Initial classical seed: vars[k] = x^{e_k}.
inline Seed<Rat> classical_seed(const ExchangeData& ex) {
  Seed<Rat> s{ex, Twist::classical(ex.n()), {}, {}};
  for (std::size_t k = 0; k < ex.n(); ++k)
    s.vars.push_back(TPoly<Rat>::monomial(s.form, unit_exp(ex.n(), k), Rat(1)));
  return s;
}

/// Initial root-of-unity quantum seed from an ell-compatible pair; the twist
/// is the reduction of omega_lift mod ell.
inline Seed<Cyclo> quantum_seed(const ExchangeData& ex, const IntMatrix& omega_lift, long ell,
                                CycloCtx ctx = nullptr) {
  EllCompatiblePair p = check_ell_compatible(omega_lift, ex, ell);
  if (!ctx) ctx = CycloContext::make(ell);
  if (ctx->ell() != ell) throw ContextMismatchError("cyclotomic context order differs from ell");
  Seed<Cyclo> s{ex, Twist::quantum(p.omega, ell), {}, {}};
  for (std::size_t k = 0; k < ex.n(); ++k)
    s.vars.push_back(TPoly<Cyclo>::monomial(s.form, unit_exp(ex.n(), k), Cyclo::one(ctx)));
  return s;
}

namespace detail {

template <class S>
struct FrameScale;

template <>
struct FrameScale<Rat> {
  static TPoly<Rat> apply(const TPoly<Rat>& p, long) { return p; }
};

template <>
struct FrameScale<Cyclo> {
  static TPoly<Cyclo> apply(const TPoly<Cyclo>& p, long e) {
    if (e == 0 || p.is_zero()) return p;
    CycloCtx ctx = p.terms().begin()->second.context();
    return p.scaled(Cyclo::zeta_power(ctx, Int(e)));
  }
};

/// Ordered product of the current frame generators with nonnegative
/// multiplicities g, normalized to the frame monomial M'(g): the accumulated
/// twist of the increasing-index product is divided back out.
template <class S>
TPoly<S> frame_monomial(const Seed<S>& s, const ExpVec& g) {
  const Twist& t = s.form;
  TPoly<S> prod;
  bool have = false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    TPoly<S> p = s.vars[i].pow(static_cast<unsigned long>(to_int64(g[i])));
    prod = have ? prod * p : p;
    have = true;
  }
  if (!have) {
    // empty product: the unit; realized via vars[0]^0 when possible
    if (s.vars.empty()) throw DomainError("empty seed");
    return s.vars[0].pow(0);
  }
  if (!t.is_classical()) {
    // ordered-product twist accumulation sum_{i<j} g_i g_j Omega_ij
    Int acc = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] == 0) continue;
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        if (g[j] == 0) continue;
        acc += g[i] * g[j] * Int(t.entry(i, j));
      }
    }
    long corr = to_int64(mod_nonneg(-acc, Int(t.ell())));
    prod = FrameScale<S>::apply(prod, corr);
  }
  return prod;
}

}  // namespace detail

/// Seed mutation in direction k. The new variable is the frame element
/// M'(-e_k + [b^k]_+) + M'(-e_k - [b^k]_-) realized inside the initial ring:
/// both exchange monomials are built from the current vars and the sum is
/// divided on the right by the current vars[k]. A NoExactQuotient here would
/// be a genuine Laurent-phenomenon violation and is surfaced verbatim.
template <class S>
Seed<S> mutate_seed(const Seed<S>& s, std::size_t k) {
  if (!s.exchange.is_mutable(k)) throw DomainError("mutation direction is not mutable");
  std::size_t n = s.exchange.n();
  std::size_t ck = s.exchange.col_of(k);

  ExpVec gplus(n, Int(0)), gminus(n, Int(0));
  for (std::size_t i = 0; i < n; ++i) {
    const Int& b = s.exchange.B()(i, ck);
    if (b > 0) gplus[i] = b;
    if (b < 0) gminus[i] = -b;
  }

  TPoly<S> mplus = detail::frame_monomial(s, gplus);
  TPoly<S> mminus = detail::frame_monomial(s, gminus);
  if (!s.form.is_classical()) {
    // frame identity: M'(-e_k + g) * M'(e_k) = zeta^{Omega'(g, e_k)} M'(g)
    ExpVec ek = unit_exp(n, k);
    mplus = detail::FrameScale<S>::apply(mplus, s.form.exponent(gplus, ek));
    mminus = detail::FrameScale<S>::apply(mminus, s.form.exponent(gminus, ek));
  }
  TPoly<S> new_var = exact_divide_right(mplus + mminus, s.vars[k]);

  Seed<S> out = s;
  out.exchange = mutate_exchange(s.exchange, k);
  if (!s.form.is_classical()) {
    auto [Ep, Fp] = build_es_fs(s.exchange, k, 1);
    auto [Em, Fm] = build_es_fs(s.exchange, k, -1);
    Twist tp = Twist::quantum(Ep.transpose() * s.form.matrix() * Ep, s.form.ell());
    Twist tm = Twist::quantum(Em.transpose() * s.form.matrix() * Em, s.form.ell());
    if (tp != tm) throw InternalError("twist mutation depends on the sign choice");
    out.form = tp;
  }
  out.vars[k] = std::move(new_var);
  out.history.push_back(k);
  return out;
}

template <class S>
Seed<S> mutate_seed(const Seed<S>& s, const std::vector<std::size_t>& sequence) {
  Seed<S> cur = s;
  for (std::size_t k : sequence) cur = mutate_seed(cur, k);
  return cur;
}

/// Canonical node key for exchange-graph deduplication: exact equality of
/// (B, canonical rendering of vars).
template <class S>
std::string seed_key(const Seed<S>& s) {
  std::string key = s.exchange.B().str();
  for (const auto& v : s.vars) {
    key += "|";
    key += v.render();
  }
  return key;
}

struct ExchangeGraph {
  struct Node {
    std::string key;
    std::vector<std::size_t> history;  // mutation path from the initial seed
    std::size_t depth = 0;
  };
  std::vector<Node> nodes;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> edges;  // (a, b, k), a <= b
  bool truncated = false;
};

/// Breadth-first exploration mutating in every direction of ex up to the
/// given depth. Deterministic: directions are scanned in increasing order and
/// nodes are numbered in discovery order.
template <class S>
ExchangeGraph explore(const Seed<S>& start, std::size_t depth) {
  ExchangeGraph g;
  std::map<std::string, std::size_t> index;
  std::vector<Seed<S>> store;

  auto intern = [&](const Seed<S>& s, std::size_t d) -> std::pair<std::size_t, bool> {
    std::string key = seed_key(s);
    auto it = index.find(key);
    if (it != index.end()) return {it->second, false};
    std::size_t id = g.nodes.size();
    index.emplace(key, id);
    g.nodes.push_back({key, s.history, d});
    store.push_back(s);
    return {id, true};
  };

  intern(start, 0);
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::size_t u = frontier.front();
    frontier.pop_front();
    std::size_t d = g.nodes[u].depth;
    if (d >= depth) {
      if (!store[u].exchange.ex().empty()) g.truncated = true;
      continue;
    }
    for (std::size_t k : store[u].exchange.ex()) {
      Seed<S> next = mutate_seed(store[u], k);
      auto [v, fresh] = intern(next, d + 1);
      g.edges.insert({std::min(u, v), std::max(u, v), k});
      if (fresh) frontier.push_back(v);
    }
  }
  return g;
}

/// Mixed-Laurent membership report: each cluster variable, expressed in the
/// initial ring, must have nonnegative exponents at every ninv index.
struct MixedLaurentReport {
  struct Entry {
    std::size_t var;
    bool pass;
    std::optional<ExpVec> witness;  // an offending exponent vector
  };
  std::vector<Entry> entries;
  bool all_pass = true;
};

template <class S>
MixedLaurentReport check_mixed_laurent(const Seed<S>& s) {
  MixedLaurentReport report;
  for (std::size_t v = 0; v < s.vars.size(); ++v) {
    MixedLaurentReport::Entry e{v, true, std::nullopt};
    for (const auto& [f, c] : s.vars[v].terms()) {
      for (std::size_t i : s.exchange.ninv()) {
        if (f[i] < 0) {
          e.pass = false;
          e.witness = f;
          break;
        }
      }
      if (!e.pass) break;
    }
    report.all_pass = report.all_pass && e.pass;
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace cluq
