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

#include <string>
#include <vector>

#include "cluq/compat.hpp"
#include "cluq/errors.hpp"
#include "cluq/exchange.hpp"
#include "cluq/intmat.hpp"
#include "cluq/numeric.hpp"

namespace cluq {

/// PI degree of the root-of-unity quantum torus of Omega:
/// sqrt([Z^N : Ker(Omega mod ell)]). The index of a skew form's kernel is
/// always a perfect square; a failure signals corrupted input.
inline Int pi_degree(const IntMatrix& omega, long ell) {
  if (ell < 1) throw DomainError("ell must be positive");
  IntMatrix W = omega.mod(Int(ell));
  // skewness mod ell
  if (W.rows() != W.cols()) throw DimensionError("Omega must be square");
  for (std::size_t i = 0; i < W.rows(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (mod_nonneg(W(i, j) + W(j, i), Int(ell)) != 0)
        throw DomainError("Omega is not skew-symmetric mod ell");
  Int index = lattice_index_mod(W, Int(ell));
  return isqrt_exact(index, "lattice index of a skew form");
}

/// The non-central frozen set: indices i in ninv with Omega e_i != 0 mod ell.
inline std::vector<std::size_t> noncentral_frozen(const IntMatrix& omega,
                                                  const std::vector<std::size_t>& ninv, long ell) {
  IntMatrix W = omega.mod(Int(ell));
  std::vector<std::size_t> nc;
  for (std::size_t i : ninv) {
    bool central = true;
    for (std::size_t r = 0; r < W.rows() && central; ++r) central = W(r, i) == 0;
    if (!central) nc.push_back(i);
  }
  return nc;
}

/// PI degree of the frozen stratum at j: the deletion submatrix's degree.
inline Int frozen_stratum_pi_degree(const IntMatrix& omega, std::size_t j, long ell) {
  return pi_degree(omega.delete_row_col(j), ell);
}

/// Symbolic Azumaya-locus report: PI degree, the non-central frozen set,
/// per-index stratum degrees with their </= classification, and the two
/// bounds rendered as loci descriptions keyed by frozen indices.
struct AzumayaReport {
  Int pi_deg;
  std::vector<std::size_t> nc;  // 0-based
  struct Stratum {
    std::size_t j;  // 0-based
    Int degree;
    std::string relation;  // "<" or "="
  };
  std::vector<Stratum> strata;
  std::string lower_bound;
  std::string upper_bound;
};

inline AzumayaReport azumaya_bound_report(const ExchangeData& ex, const IntMatrix& lambda,
                                          long ell) {
  if (ell < 1 || ell % 2 == 0) throw HypothesisViolatedError("ell must be odd and positive");
  CompatiblePair pair = check_compatible(lambda, ex);
  for (const Int& dj : pair.d)
    if (gcd_int(Int(ell), dj) != 1)
      throw HypothesisViolatedError("ell must be coprime to the skew-symmetrizer entries");

  AzumayaReport rep;
  rep.pi_deg = pi_degree(lambda, ell);
  rep.nc = noncentral_frozen(lambda, ex.ninv(), ell);
  for (std::size_t j : ex.ninv()) {
    Int dj = frozen_stratum_pi_degree(lambda, j, ell);
    std::string rel = dj < rep.pi_deg ? "<" : "=";
    if (dj > rep.pi_deg) throw InternalError("stratum degree exceeds the PI degree");
    rep.strata.push_back({j, dj, rel});
  }

  auto render_set = [](const std::vector<std::size_t>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(s[i] + 1);  // 1-based in reports
    }
    out += "}";
    return out;
  };
  if (ex.ninv().empty()) {
    rep.lower_bound = "Y_reg";
    rep.upper_bound = "Y";
  } else {
    rep.lower_bound = "Y_reg minus V(x_i) for i in " + render_set(ex.ninv());
    rep.upper_bound =
        rep.nc.empty() ? "Y" : "Y minus V(x_i) for i in " + render_set(rep.nc);
  }
  return rep;
}

}  // namespace cluq
