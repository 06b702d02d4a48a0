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
#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cluq/errors.hpp"
#include "cluq/numeric.hpp"

namespace cluq {

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_)
      throw DimensionError("entry count does not match matrix dimensions");
  }
  /// Row-major initializer, e.g. IntMatrix::of({{0,-2},{2,0}}).
  static IntMatrix of(const std::vector<std::vector<long long>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw DimensionError("ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    IntMatrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& aik = (*this)(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += aik * o(k, j);
      }
    return p;
  }

  IntMatrix operator-() const {
    IntMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
    return m;
  }

  bool is_zero() const {
    for (const Int& x : a_)
      if (x != 0) return false;
    return true;
  }

  bool is_skew_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j <= i; ++j)
        if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
  }

  /// Entrywise reduction to least nonnegative residues.
  IntMatrix mod(const Int& m) const {
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = mod_nonneg(a_[i], m);
    return r;
  }

  /// Copy with row and column `k` removed (square matrices).
  IntMatrix delete_row_col(std::size_t k) const {
    if (rows_ != cols_) throw DimensionError("delete_row_col needs a square matrix");
    if (k >= rows_) throw DimensionError("index out of range");
    IntMatrix m(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, ii = 0; i < rows_; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0, jj = 0; j < cols_; ++j) {
        if (j == k) continue;
        m(ii, jj) = (*this)(i, j);
        ++jj;
      }
      ++ii;
    }
    return m;
  }

  std::vector<Int> apply(const std::vector<Int>& v) const {
    if (v.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
    std::vector<Int> r(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ";[" : "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ",";
        s += (*this)(i, j).str();
      }
      s += "]";
    }
    s += "]";
    return s;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

namespace detail {

/// g = gcd(a,b) >= 0 together with x*a + y*b = g.
inline void egcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
  Int old_r = a, r = b;
  Int old_x = 1, xx = 0;
  Int old_y = 0, yy = 1;
  while (r != 0) {
    Int q = old_r / r;  // truncated division is fine for the gcd loop
    Int t;
    t = old_r - q * r; old_r = r; r = t;
    t = old_x - q * xx; old_x = xx; xx = t;
    t = old_y - q * yy; old_y = yy; yy = t;
  }
  g = old_r; x = old_x; y = old_y;
  if (g < 0) { g = -g; x = -x; y = -y; }
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

}  // namespace detail

struct SmithResult {
  IntMatrix U, S, V;  // U*A*V == S
};

/// Smith normal form with unimodular transforms: U*A*V = S, S diagonal with
/// nonnegative entries and a divisibility chain d1 | d2 | ...
inline SmithResult smith_normal_form(const IntMatrix& A) {
  std::size_t m = A.rows(), n = A.cols();
  IntMatrix S = A;
  IntMatrix U = IntMatrix::identity(m);
  IntMatrix V = IntMatrix::identity(n);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(S(i, c), S(j, c));
    for (std::size_t c = 0; c < m; ++c) std::swap(U(i, c), U(j, c));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m; ++r) std::swap(S(r, i), S(r, j));
    for (std::size_t r = 0; r < n; ++r) std::swap(V(r, i), V(r, j));
  };
  // row_i -= q * row_j, and the matching update of U
  auto row_op = [&](std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < n; ++c) S(i, c) -= q * S(j, c);
    for (std::size_t c = 0; c < m; ++c) U(i, c) -= q * U(j, c);
  };
  auto col_op = [&](std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < m; ++r) S(r, i) -= q * S(r, j);
    for (std::size_t r = 0; r < n; ++r) V(r, i) -= q * V(r, j);
  };

  std::size_t t = 0;
  while (t < m && t < n) {
    // pick the nonzero entry of minimal absolute value in the trailing block
    std::size_t pi = t, pj = t;
    Int best = 0;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        const Int& v = S(i, j);
        if (v == 0) continue;
        Int av = abs_int(v);
        if (best == 0 || av < best) { best = av; pi = i; pj = j; }
      }
    if (best == 0) break;  // trailing block is zero
    swap_rows(t, pi);
    swap_cols(t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        Int q = detail::floor_div(S(i, t), S(t, t));
        row_op(i, t, q);
        if (S(i, t) != 0) { swap_rows(t, i); clean = false; }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        Int q = detail::floor_div(S(t, j), S(t, t));
        col_op(j, t, q);
        if (S(t, j) != 0) { swap_cols(t, j); clean = false; }
      }
    }

    // enforce the divisibility chain: pivot must divide the whole block
    bool redo = false;
    for (std::size_t i = t + 1; i < m && !redo; ++i)
      for (std::size_t j = t + 1; j < n && !redo; ++j)
        if (S(i, j) % S(t, t) != 0) {
          row_op(t, i, Int(-1));  // adds row i into row t
          redo = true;
        }
    if (redo) continue;

    if (S(t, t) < 0) {
      for (std::size_t c = 0; c < n; ++c) S(t, c) = -S(t, c);
      for (std::size_t c = 0; c < m; ++c) U(t, c) = -U(t, c);
    }
    ++t;
  }
  return {U, S, V};
}

struct ColumnHermiteResult {
  IntMatrix H, V;  // A*V == H, V unimodular, H in canonical column echelon form
};

/// Canonical column Hermite form. Pivot rows strictly increase, pivots are
/// positive, and in each pivot row the entries of earlier columns are reduced
/// into [0, pivot).
inline ColumnHermiteResult column_hermite_form(const IntMatrix& A) {
  std::size_t m = A.rows(), n = A.cols();
  IntMatrix H = A;
  IntMatrix V = IntMatrix::identity(n);

  auto combine = [&](std::size_t c, std::size_t j, std::size_t r) {
    // unimodular 2x2 on columns (c, j) making H(r,j) = 0, H(r,c) = gcd
    Int a = H(r, c), b = H(r, j), g, x, y;
    detail::egcd(a, b, g, x, y);
    Int ag = a / g, bg = b / g;
    for (std::size_t i = 0; i < m; ++i) {
      Int hc = H(i, c), hj = H(i, j);
      H(i, c) = x * hc + y * hj;
      H(i, j) = ag * hj - bg * hc;
    }
    for (std::size_t i = 0; i < n; ++i) {
      Int vc = V(i, c), vj = V(i, j);
      V(i, c) = x * vc + y * vj;
      V(i, j) = ag * vj - bg * vc;
    }
  };

  std::size_t c = 0;
  for (std::size_t r = 0; r < m && c < n; ++r) {
    std::size_t piv = c;
    while (piv < n && H(r, piv) == 0) ++piv;
    if (piv == n) continue;
    if (piv != c) {
      for (std::size_t i = 0; i < m; ++i) std::swap(H(i, c), H(i, piv));
      for (std::size_t i = 0; i < n; ++i) std::swap(V(i, c), V(i, piv));
    }
    for (std::size_t j = c + 1; j < n; ++j)
      if (H(r, j) != 0) combine(c, j, r);
    if (H(r, c) < 0) {
      for (std::size_t i = 0; i < m; ++i) H(i, c) = -H(i, c);
      for (std::size_t i = 0; i < n; ++i) V(i, c) = -V(i, c);
    }
    for (std::size_t j = 0; j < c; ++j) {
      Int q = detail::floor_div(H(r, j), H(r, c));
      if (q == 0) continue;
      for (std::size_t i = 0; i < m; ++i) H(i, j) -= q * H(i, c);
      for (std::size_t i = 0; i < n; ++i) V(i, j) -= q * V(i, c);
    }
    ++c;
  }
  return {H, V};
}

/// Basis of the integer null space {v : Av = 0}, canonicalized by column
/// Hermite form so downstream torus constructions are reproducible.
inline std::vector<std::vector<Int>> kernel_basis(const IntMatrix& A) {
  std::size_t m = A.rows(), n = A.cols();
  ColumnHermiteResult ch = column_hermite_form(A);
  std::vector<std::size_t> zero_cols;
  for (std::size_t j = 0; j < n; ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < m && zero; ++i) zero = ch.H(i, j) == 0;
    if (zero) zero_cols.push_back(j);
  }
  if (zero_cols.empty()) return {};
  IntMatrix K(n, zero_cols.size());
  for (std::size_t jj = 0; jj < zero_cols.size(); ++jj)
    for (std::size_t i = 0; i < n; ++i) K(i, jj) = ch.V(i, zero_cols[jj]);
  IntMatrix KH = column_hermite_form(K).H;
  std::vector<std::vector<Int>> basis;
  for (std::size_t j = 0; j < KH.cols(); ++j) {
    std::vector<Int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = KH(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Rank over the rationals via fraction-free Gaussian elimination.
inline std::size_t rank_rational(IntMatrix A) {
  std::size_t m = A.rows(), n = A.cols();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < m; ++c) {
    std::size_t piv = rank;
    while (piv < m && A(piv, c) == 0) ++piv;
    if (piv == m) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < n; ++j) std::swap(A(rank, j), A(piv, j));
    for (std::size_t i = rank + 1; i < m; ++i) {
      if (A(i, c) == 0) continue;
      Int p = A(rank, c), q = A(i, c);
      for (std::size_t j = 0; j < n; ++j) A(i, j) = A(i, j) * p - A(rank, j) * q;
    }
    ++rank;
  }
  return rank;
}

/// Exact determinant (Bareiss).
inline Int determinant(IntMatrix A) {
  if (A.rows() != A.cols()) throw DimensionError("determinant needs a square matrix");
  std::size_t n = A.rows();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && A(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(A(k, j), A(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev;
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

/// Rank of a skew-symmetric matrix over the rationals (always even).
inline std::size_t skew_rank(const IntMatrix& S) {
  if (!S.is_skew_symmetric()) throw DomainError("skew_rank needs a skew-symmetric matrix");
  std::size_t r = rank_rational(S);
  if (r % 2 != 0) throw InternalError("skew-symmetric matrix with odd rank");
  return r;
}

/// Exact Pfaffian of a skew-symmetric matrix, Pf(S)^2 = det(S).
inline Int pfaffian(const IntMatrix& S) {
  if (!S.is_skew_symmetric()) throw DomainError("pfaffian needs a skew-symmetric matrix");
  std::size_t n = S.rows();
  if (n % 2 != 0) throw DomainError("pfaffian needs even dimension");
  if (n == 0) return 1;
  if (n > 24) throw DomainError("pfaffian limited to dimension 24");

  std::unordered_map<std::uint32_t, Int> memo;
  // sum over perfect matchings; pair the lowest live index with each partner
  auto rec = [&](auto&& self, std::uint32_t mask) -> Int {
    if (mask == 0) return 1;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    std::size_t i = 0;
    while (!(mask >> i & 1u)) ++i;
    Int total = 0;
    int between = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(mask >> j & 1u)) continue;
      const Int& sij = S(i, j);
      if (sij != 0) {
        Int sub = self(self, mask & ~(1u << i) & ~(1u << j));
        if (between % 2 == 0)
          total += sij * sub;
        else
          total -= sij * sub;
      }
      ++between;
    }
    memo.emplace(mask, total);
    return total;
  };
  std::uint32_t full = n == 32 ? 0xffffffffu : ((1u << n) - 1u);
  return rec(rec, full);
}

/// [Z^N : Ker(A mod ell)], computed from the elementary divisors of the
/// stacked matrix [A ; ell*I] rather than by enumeration.
inline Int lattice_index_mod(const IntMatrix& A, const Int& ell) {
  if (A.rows() != A.cols()) throw DimensionError("lattice_index_mod needs a square matrix");
  if (ell < 1) throw DomainError("lattice_index_mod needs ell >= 1");
  std::size_t n = A.rows();
  IntMatrix stacked(2 * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) stacked(i, j) = A(i, j);
  for (std::size_t i = 0; i < n; ++i) stacked(n + i, i) = ell;
  IntMatrix S = smith_normal_form(stacked).S;
  Int index = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Int d = S(i, i);
    index *= ell / gcd_int(d, ell);
  }
  return index;
}

}  // namespace cluq
