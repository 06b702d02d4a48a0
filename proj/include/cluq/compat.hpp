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

#include <utility>
#include <vector>

#include "cluq/errors.hpp"
#include "cluq/exchange.hpp"
#include "cluq/intmat.hpp"
#include "cluq/laurent.hpp"
#include "cluq/numeric.hpp"

namespace cluq {

/// A compatible pair over Z: skew-symmetric Lambda with B^T Lambda = [D 0],
/// D positive diagonal (indexed by ex position).
struct CompatiblePair {
  IntMatrix Lambda;
  ExchangeData B;
  std::vector<Int> d;
};

/// Verifies the compatibility identity and extracts D. The nonpositive-d
/// failure suggests testing -Lambda, surfacing the sign question instead of
/// guessing.
inline CompatiblePair check_compatible(const IntMatrix& Lambda, const ExchangeData& ex) {
  if (Lambda.rows() != ex.n() || Lambda.cols() != ex.n())
    throw DimensionError("Lambda must be N x N");
  if (!Lambda.is_skew_symmetric()) throw DomainError("Lambda must be skew-symmetric");

  IntMatrix P = ex.B().transpose() * Lambda;  // |ex| x N
  std::size_t m = ex.ex().size();
  std::vector<Int> d(m);
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t i = 0; i < ex.n(); ++i) {
      bool diag = i == ex.ex()[p];
      if (diag) {
        d[p] = P(p, i);
      } else if (P(p, i) != 0) {
        if (ex.is_mutable(i))
          throw NotCompatibleError("off-diagonal",
                                   "B^T Lambda has a nonzero off-diagonal mutable entry");
        throw NotCompatibleError("frozen-block-nonzero",
                                 "B^T Lambda does not vanish on the frozen block");
      }
    }
  }
  for (const Int& x : d)
    if (x <= 0)
      throw NotCompatibleError(
          "nonpositive-d",
          "B^T Lambda = [D 0] holds but D is not positive; -Lambda may be the intended matrix");
  // compatibility forces full rank of B
  if (rank_rational(ex.B()) != m) throw InternalError("compatible pair with rank-deficient B");
  return CompatiblePair{Lambda, ex, std::move(d)};
}

/// Mutation of a compatible pair: Lambda' = E_s^T Lambda E_s, B' = E_s B F_s.
/// The result is compatible with the same D and independent of the sign.
inline CompatiblePair mutate_pair(const CompatiblePair& p, std::size_t k, int s = 1) {
  auto [E, F] = build_es_fs(p.B, k, s);
  IntMatrix LambdaPrime = E.transpose() * p.Lambda * E;
  ExchangeData BPrime = p.B.with_matrix(E * p.B.B() * F);
  CompatiblePair out = [&] {
    try {
      return check_compatible(LambdaPrime, BPrime);
    } catch (const NotCompatibleError& e) {
      // mutation of a compatible pair is compatible; reaching this is a bug
      throw InternalError(std::string("pair mutation lost compatibility: ") + e.what());
    }
  }();
  if (out.d != p.d) throw InternalError("pair mutation changed the diagonal matrix D");
  return out;
}

/// An ell-compatible pair over Z/ell. `omega` holds least nonnegative
/// residues; `d` the chosen positive diagonal residues.
struct EllCompatiblePair {
  IntMatrix omega;
  ExchangeData B;
  std::vector<Int> d;
  long ell;
};

/// Verifies B^T Omega = [D 0] mod ell. When a strict lift supplies D, pass
/// it through `strict_d`; otherwise the smallest positive residues solving
/// the congruence are chosen (zero residues are rejected).
inline EllCompatiblePair check_ell_compatible(const IntMatrix& Omega, const ExchangeData& ex,
                                              long ell,
                                              const std::vector<Int>* strict_d = nullptr) {
  if (ell < 1) throw DomainError("ell must be positive");
  if (Omega.rows() != ex.n() || Omega.cols() != ex.n())
    throw DimensionError("Omega must be N x N");
  Int L(ell);
  IntMatrix W = Omega.mod(L);
  for (std::size_t i = 0; i < W.rows(); ++i) {
    if (W(i, i) != 0) throw DomainError("Omega has nonzero diagonal mod ell");
    for (std::size_t j = 0; j < i; ++j)
      if (mod_nonneg(W(i, j) + W(j, i), L) != 0)
        throw DomainError("Omega is not skew-symmetric mod ell");
  }

  IntMatrix P = (ex.B().transpose() * W).mod(L);
  std::size_t m = ex.ex().size();
  std::vector<Int> d(m);
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t i = 0; i < ex.n(); ++i) {
      if (i == ex.ex()[p]) continue;
      if (P(p, i) != 0)
        throw NotEllCompatibleError("B^T Omega mod ell is not of the form [D 0]");
    }
    Int r = P(p, ex.ex()[p]);
    if (strict_d) {
      if (mod_nonneg((*strict_d)[p], L) != r)
        throw NotEllCompatibleError("strict lift diagonal disagrees with the congruence");
      d[p] = (*strict_d)[p];
    } else {
      if (r == 0)
        throw NotEllCompatibleError("diagonal residue vanishes mod ell");
      d[p] = r;  // smallest positive residue
    }
  }
  // D must skew-symmetrize the principal part mod ell
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      if (mod_nonneg(d[p] * ex.B()(ex.ex()[p], q) + d[q] * ex.B()(ex.ex()[q], p), L) != 0)
        throw NotEllCompatibleError("D does not skew-symmetrize the principal part mod ell");
  return EllCompatiblePair{W, ex, std::move(d), ell};
}

/// Mutation of an ell-compatible pair; independent of the sign choice.
inline EllCompatiblePair mutate_ell_pair(const EllCompatiblePair& p, std::size_t k, int s = 1) {
  auto [E, F] = build_es_fs(p.B, k, s);
  IntMatrix OmegaPrime = (E.transpose() * p.omega * E).mod(Int(p.ell));
  ExchangeData BPrime = p.B.with_matrix(E * p.B.B() * F);
  return check_ell_compatible(OmegaPrime, BPrime, p.ell, &p.d);
}

/// Applies mutate_pair along a history and returns the terminal Lambda.
inline IntMatrix track_strict_lift(const CompatiblePair& p, const std::vector<std::size_t>& history) {
  CompatiblePair cur = p;
  for (std::size_t k : history) cur = mutate_pair(cur, k);
  return cur.Lambda;
}

/// As above, but additionally verifies that the terminal Lambda reduces mod
/// ell to the given seed twist (the strictness identity of mutated seeds).
inline IntMatrix track_strict_lift(const CompatiblePair& p, const std::vector<std::size_t>& history,
                                   const Twist& seed_twist) {
  IntMatrix Lambda = track_strict_lift(p, history);
  if (seed_twist.is_classical()) throw DomainError("seed twist is classical");
  if (Lambda.mod(Int(seed_twist.ell())) != seed_twist.matrix())
    throw InternalError("strict lift does not reduce to the seed twist");
  return Lambda;
}

}  // namespace cluq
