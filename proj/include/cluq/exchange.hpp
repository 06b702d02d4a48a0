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

#include <algorithm>
#include <utility>
#include <vector>

#include "cluq/errors.hpp"
#include "cluq/intmat.hpp"
#include "cluq/numeric.hpp"

namespace cluq {

/// Exchange matrix data: the N x |ex| matrix B together with the partition
/// [0,N) = ex ⊔ inv ⊔ ninv (inverted / non-inverted frozen indices).
/// All indices are 0-based internally; the JSON layer is 1-based.
class ExchangeData {
 public:
  ExchangeData(std::size_t n, std::vector<std::size_t> ex, std::vector<std::size_t> inv,
               std::vector<std::size_t> ninv, IntMatrix B)
      : n_(n), ex_(std::move(ex)), inv_(std::move(inv)), ninv_(std::move(ninv)), B_(std::move(B)) {
    std::sort(ex_.begin(), ex_.end());
    std::sort(inv_.begin(), inv_.end());
    std::sort(ninv_.begin(), ninv_.end());
    std::vector<char> seen(n_, 0);
    auto mark = [&](const std::vector<std::size_t>& s) {
      for (std::size_t i : s) {
        if (i >= n_ || seen[i]) throw DomainError("ex/inv/ninv is not a partition of [1,N]");
        seen[i] = 1;
      }
    };
    mark(ex_);
    mark(inv_);
    mark(ninv_);
    for (std::size_t i = 0; i < n_; ++i)
      if (!seen[i]) throw DomainError("ex/inv/ninv is not a partition of [1,N]");
    if (B_.rows() != n_ || B_.cols() != ex_.size())
      throw DimensionError("exchange matrix must be N x |ex|");
    d_ = find_symmetrizer();
  }

  std::size_t n() const { return n_; }
  const std::vector<std::size_t>& ex() const { return ex_; }
  const std::vector<std::size_t>& inv() const { return inv_; }
  const std::vector<std::size_t>& ninv() const { return ninv_; }
  const IntMatrix& B() const { return B_; }

  bool is_mutable(std::size_t k) const {
    return std::binary_search(ex_.begin(), ex_.end(), k);
  }

  /// Column position of the mutable index k.
  std::size_t col_of(std::size_t k) const {
    auto it = std::lower_bound(ex_.begin(), ex_.end(), k);
    if (it == ex_.end() || *it != k) throw DomainError("index is not mutable");
    return static_cast<std::size_t>(it - ex_.begin());
  }

  /// Entry b_{ik} of the exchange matrix (row i, mutable index k).
  const Int& b(std::size_t i, std::size_t k) const { return B_(i, col_of(k)); }

  /// Principal part: the ex x ex submatrix.
  IntMatrix principal() const {
    IntMatrix P(ex_.size(), ex_.size());
    for (std::size_t p = 0; p < ex_.size(); ++p)
      for (std::size_t q = 0; q < ex_.size(); ++q) P(p, q) = B_(ex_[p], q);
    return P;
  }

  /// The minimal positive diagonal skew-symmetrizer found at construction,
  /// indexed by ex position.
  const std::vector<Int>& symmetrizer() const { return d_; }

  ExchangeData with_matrix(IntMatrix B) const {
    return ExchangeData(n_, ex_, inv_, ninv_, std::move(B));
  }

  bool operator==(const ExchangeData& o) const {
    return n_ == o.n_ && ex_ == o.ex_ && inv_ == o.inv_ && ninv_ == o.ninv_ && B_ == o.B_;
  }

 private:
  // positive diagonal D with D * principal skew-symmetric; throws if none
  std::vector<Int> find_symmetrizer() const {
    IntMatrix P = principal();
    std::size_t m = P.rows();
    for (std::size_t i = 0; i < m; ++i) {
      if (P(i, i) != 0) throw DomainError("principal part has nonzero diagonal");
      for (std::size_t j = 0; j < m; ++j) {
        bool zi = P(i, j) == 0, zj = P(j, i) == 0;
        if (zi != zj || (!zi && (P(i, j) > 0) == (P(j, i) > 0)))
          throw DomainError("principal part is not skew-symmetrizable");
      }
    }
    // propagate the ratio d_j / d_i = -b_ij / b_ji over each component
    std::vector<Rat> w(m, Rat(0));
    for (std::size_t root = 0; root < m; ++root) {
      if (w[root] != 0) continue;
      w[root] = 1;
      std::vector<std::size_t> stack{root};
      while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < m; ++j) {
          if (P(i, j) == 0) continue;
          Rat ratio = Rat(-P(i, j)) / Rat(P(j, i));
          if (w[j] == 0) {
            w[j] = w[i] * ratio;
            stack.push_back(j);
          } else if (w[j] != w[i] * ratio) {
            throw DomainError("principal part is not skew-symmetrizable");
          }
        }
      }
    }
    Int l = 1;
    for (const Rat& x : w) l = l / gcd_int(l, Int(denominator(x))) * Int(denominator(x));
    std::vector<Int> d(m);
    Int g = 0;
    for (std::size_t i = 0; i < m; ++i) {
      d[i] = Int(numerator(w[i])) * (l / Int(denominator(w[i])));
      g = gcd_int(g, d[i]);
    }
    for (Int& x : d)
      if (g != 0) x /= g;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (d[i] * P(i, j) != -d[j] * P(j, i))
          throw DomainError("principal part is not skew-symmetrizable");
    return d;
  }

  std::size_t n_;
  std::vector<std::size_t> ex_, inv_, ninv_;
  IntMatrix B_;
  std::vector<Int> d_;
};

/// The sign-choice matrices of matrix mutation: E_s in M_N(Z), F_s in M_ex(Z),
/// with E_s^2 = I, F_s^2 = I and mu_k(B) = E_s B F_s for both signs.
inline std::pair<IntMatrix, IntMatrix> build_es_fs(const ExchangeData& ex, std::size_t k, int s) {
  if (s != 1 && s != -1) throw DomainError("sign must be +1 or -1");
  std::size_t n = ex.n();
  std::size_t ck = ex.col_of(k);
  IntMatrix E = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k) {
      E(i, k) = -1;
    } else {
      Int v = -s * ex.B()(i, ck);
      E(i, k) = v > 0 ? v : Int(0);
    }
  }
  std::size_t m = ex.ex().size();
  IntMatrix F = IntMatrix::identity(m);
  for (std::size_t j = 0; j < m; ++j) {
    if (j == ck) {
      F(ck, j) = -1;
    } else {
      Int v = s * ex.B()(k, j);
      F(ck, j) = v > 0 ? v : Int(0);
    }
  }
  return {E, F};
}

/// Matrix mutation in direction k, cross-checked internally against
/// E_s * B * F_s for both signs.
inline IntMatrix mutate_matrix(const ExchangeData& ex, std::size_t k) {
  if (!ex.is_mutable(k)) throw DomainError("mutation direction is not mutable");
  const IntMatrix& B = ex.B();
  std::size_t ck = ex.col_of(k);
  IntMatrix M(B.rows(), B.cols());
  for (std::size_t i = 0; i < B.rows(); ++i)
    for (std::size_t j = 0; j < B.cols(); ++j) {
      if (i == k || j == ck) {
        M(i, j) = -B(i, j);
      } else {
        const Int& bik = B(i, ck);
        const Int& bkj = B(k, j);
        M(i, j) = B(i, j) + (abs_int(bik) * bkj + bik * abs_int(bkj)) / 2;
      }
    }
  for (int s : {1, -1}) {
    auto [E, F] = build_es_fs(ex, k, s);
    if (E * B * F != M) throw InternalError("E_s B F_s disagrees with direct matrix mutation");
  }
  return M;
}

inline ExchangeData mutate_exchange(const ExchangeData& ex, std::size_t k) {
  return ex.with_matrix(mutate_matrix(ex, k));
}

}  // namespace cluq
