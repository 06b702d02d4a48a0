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

#include <random>
#include <vector>

#include "cluq/compat.hpp"
#include "cluq/exchange.hpp"
#include "cluq/intmat.hpp"
#include "cluq/kronecker.hpp"
#include "cluq/laurent.hpp"
#include "cluq/poisson.hpp"

namespace cluq::testing {

using Rng = std::mt19937_64;

inline long pick(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// A2 with its compatible matrix: B^T Lambda = I.
inline ExchangeData a2_exchange() {
  return ExchangeData(2, {0, 1}, {}, {}, IntMatrix::of({{0, 1}, {-1, 0}}));
}
inline IntMatrix a2_lambda() { return IntMatrix::of({{0, 1}, {-1, 0}}); }

/// One mutable and one frozen direction; Ker(B^T) is spanned by (1,0).
inline ExchangeData weight_fixture_exchange() {
  return ExchangeData(2, {0}, {}, {1}, IntMatrix::of({{0}, {1}}));
}
inline IntMatrix weight_fixture_lambda() { return IntMatrix::of({{0, -1}, {1, 0}}); }

/// 3x1 fixture exhibiting both sides of the stratum-degree dichotomy:
/// index 2 (0-based 1) is central, index 3 (0-based 2) is not.
inline ExchangeData dichotomy_exchange() {
  return ExchangeData(3, {0}, {}, {1, 2}, IntMatrix::of({{0}, {0}, {1}}));
}
inline IntMatrix dichotomy_lambda() {
  return IntMatrix::of({{0, 0, -1}, {0, 0, 0}, {1, 0, 0}});
}

/// 3x2 acyclic fixture with one frozen row; D = diag(1,1).
inline ExchangeData acyclic32_exchange() {
  return ExchangeData(3, {0, 1}, {}, {2}, IntMatrix::of({{0, 1}, {-1, 0}, {1, 0}}));
}
inline IntMatrix acyclic32_lambda() {
  return IntMatrix::of({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}});
}

inline std::vector<CompatiblePair> base_pairs() {
  return {
      check_compatible(kronecker_lambda(), kronecker_exchange()),
      check_compatible(a2_lambda(), a2_exchange()),
      check_compatible(weight_fixture_lambda(), weight_fixture_exchange()),
      check_compatible(dichotomy_lambda(), dichotomy_exchange()),
      check_compatible(acyclic32_lambda(), acyclic32_exchange()),
  };
}

/// Random compatible pair: a random mutation walk from one of the base
/// fixtures (pair mutation preserves compatibility).
inline CompatiblePair random_pair(Rng& rng, std::size_t max_walk = 4) {
  std::vector<CompatiblePair> bases = base_pairs();
  CompatiblePair p = bases[static_cast<std::size_t>(pick(rng, 0, static_cast<long>(bases.size()) - 1))];
  long steps = pick(rng, 0, static_cast<long>(max_walk));
  for (long s = 0; s < steps; ++s) {
    const auto& ex = p.B.ex();
    std::size_t k = ex[static_cast<std::size_t>(pick(rng, 0, static_cast<long>(ex.size()) - 1))];
    p = mutate_pair(p, k, pick(rng, 0, 1) ? 1 : -1);
  }
  return p;
}

/// Random exchange data with skew-symmetric principal part (d = 1) and
/// random frozen rows; not necessarily compatible with anything.
inline ExchangeData random_exchange(Rng& rng, std::size_t max_n = 4) {
  std::size_t n = static_cast<std::size_t>(pick(rng, 2, static_cast<long>(max_n)));
  std::size_t m = static_cast<std::size_t>(pick(rng, 1, static_cast<long>(n)));
  IntMatrix B(n, m);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = p + 1; q < m; ++q) {
      long v = pick(rng, -2, 2);
      B(p, q) = v;
      B(q, p) = -v;
    }
  for (std::size_t i = m; i < n; ++i)
    for (std::size_t q = 0; q < m; ++q) B(i, q) = pick(rng, -2, 2);
  std::vector<std::size_t> ex, inv, ninv;
  for (std::size_t i = 0; i < m; ++i) ex.push_back(i);
  for (std::size_t i = m; i < n; ++i) (pick(rng, 0, 1) ? inv : ninv).push_back(i);
  return ExchangeData(n, ex, inv, ninv, B);
}

inline IntMatrix random_skew(Rng& rng, std::size_t n, long lo = -3, long hi = 3) {
  IntMatrix S(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      long v = pick(rng, lo, hi);
      S(i, j) = v;
      S(j, i) = -v;
    }
  return S;
}

inline IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo = -4,
                               long hi = 4) {
  IntMatrix A(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) A(i, j) = pick(rng, lo, hi);
  return A;
}

inline ExpVec random_exponent(Rng& rng, std::size_t n, long lo = -3, long hi = 3) {
  ExpVec e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = pick(rng, lo, hi);
  return e;
}

inline TPoly<Rat> random_classical_poly(Rng& rng, std::size_t n, std::size_t max_terms = 4) {
  Twist t = Twist::classical(n);
  TPoly<Rat> p(t);
  do {
    long terms = pick(rng, 1, static_cast<long>(max_terms));
    for (long i = 0; i < terms; ++i) {
      long num = pick(rng, -5, 5);
      if (num == 0) num = 1;
      p.add_term(random_exponent(rng, n), Rat(num, pick(rng, 1, 3)));
    }
  } while (p.is_zero());
  return p;
}

inline TPoly<Cyclo> random_quantum_poly(Rng& rng, const Twist& t, const CycloCtx& ctx,
                                        std::size_t max_terms = 4) {
  TPoly<Cyclo> p(t);
  do {
    long terms = pick(rng, 1, static_cast<long>(max_terms));
    for (long i = 0; i < terms; ++i) {
      Cyclo c = Cyclo::zeta_power(ctx, Int(pick(rng, 0, ctx->ell() - 1))) * Rat(pick(rng, 1, 3));
      if (pick(rng, 0, 1)) c = c + Cyclo(ctx, Rat(pick(rng, -2, 2)));
      p.add_term(random_exponent(rng, t.n()), c);
    }
  } while (p.is_zero());
  return p;
}

/// Brute-force kernel cardinality of (A mod ell) acting on (Z/ell)^N;
/// the enumeration oracle behind lattice_index_mod and pi_degree.
inline long long kernel_count_bruteforce(const IntMatrix& A, long ell) {
  std::size_t n = A.rows();
  std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = static_cast<long long>(to_int64(mod_nonneg(A(i, j), Int(ell))));
  long long total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= ell;
  long long count = 0;
  std::vector<long long> f(n, 0);
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (std::size_t i = 0; i < n; ++i) {
      f[i] = c % ell;
      c /= ell;
    }
    bool in_kernel = true;
    for (std::size_t i = 0; i < n && in_kernel; ++i) {
      long long acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += a[i][j] * f[j];
      in_kernel = acc % ell == 0;
    }
    if (in_kernel) ++count;
  }
  return count;
}

/// Independent full-multivector expansion of the anticanonical coefficient:
/// sums over explicit index assignments for every wedge factor, computing
/// permutation signs by inversion counting. Shares no code with the bitmask
/// wedge implementation.
inline Rat anticanonical_oracle(const IntMatrix& Lambda, const std::vector<WeightVector>& theta) {
  std::size_t N = Lambda.rows();
  std::size_t m = theta.size();
  if ((N - m) % 2 != 0) throw DomainError("parity mismatch");
  std::size_t r = (N - m) / 2;

  Rat total = 0;
  std::vector<std::size_t> order;
  std::vector<char> used(N, 0);

  auto sign_of = [](const std::vector<std::size_t>& seq) {
    int inv = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
      for (std::size_t j = i + 1; j < seq.size(); ++j)
        if (seq[i] > seq[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
  };

  auto rec = [&](auto&& self, std::size_t factor, Rat coeff) -> void {
    if (coeff == 0) return;
    if (factor == m + r) {
      if (order.size() == N) total += coeff * Rat(sign_of(order));
      return;
    }
    if (factor < m) {
      for (std::size_t i = 0; i < N; ++i) {
        if (used[i] || theta[factor][i] == 0) continue;
        used[i] = 1;
        order.push_back(i);
        self(self, factor + 1, coeff * Rat(theta[factor][i]));
        order.pop_back();
        used[i] = 0;
      }
    } else {
      for (std::size_t p = 0; p < N; ++p) {
        if (used[p]) continue;
        for (std::size_t q = p + 1; q < N; ++q) {
          if (used[q]) continue;
          const Int& beta_pq = Lambda(q, p);  // the transpose pairing
          if (beta_pq == 0) continue;
          used[p] = used[q] = 1;
          order.push_back(p);
          order.push_back(q);
          self(self, factor + 1, coeff * Rat(beta_pq));
          order.pop_back();
          order.pop_back();
          used[p] = used[q] = 0;
        }
      }
    }
  };
  rec(rec, 0, Rat(1));
  return total;
}

}  // namespace cluq::testing
