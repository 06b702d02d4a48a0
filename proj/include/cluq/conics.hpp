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

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "cluq/errors.hpp"

namespace cluq {

/// One sampled point of the pencil of conics V(x1^2 - z x1 x2 + x2^2 + 1).
struct ConicRow {
  double z;
  std::string branch;
  double t;
  std::complex<double> x1, x2;
};

namespace detail {

inline double conic_residual(double z, std::complex<double> x1, std::complex<double> x2) {
  return std::abs(x1 * x1 - z * x1 * x2 + x2 * x2 + 1.0);
}

}  // namespace detail

/// Samples the real branches (x1, x2 real) and the imaginary branches
/// (x1, x2 purely imaginary) of the curve for each z, plus the four base
/// points (0, ±i), (±i, 0) which lie on every member of the pencil. Every
/// emitted point satisfies the conic equation to 1e-9.
inline std::vector<ConicRow> conic_samples(const std::vector<double>& zvalues, int samples) {
  if (samples < 2) throw DomainError("need at least 2 samples");
  std::vector<ConicRow> rows;
  const double s2 = std::sqrt(2.0);

  auto emit = [&](double z, const std::string& branch, double t, double p, double q, bool imag) {
    double u = (p + q) / s2, v = (p - q) / s2;
    std::complex<double> x1 = imag ? std::complex<double>(0.0, u) : std::complex<double>(u, 0.0);
    std::complex<double> x2 = imag ? std::complex<double>(0.0, v) : std::complex<double>(v, 0.0);
    if (detail::conic_residual(z, x1, x2) >= 1e-9)
      throw InternalError("conic sample missed the curve");
    rows.push_back({z, branch, t, x1, x2});
  };

  for (double z : zvalues) {
    // diagonalized form: u^2 - z u v + v^2 = alpha p^2 + beta q^2 with
    // u = (p+q)/sqrt(2), v = (p-q)/sqrt(2)
    double alpha = 1.0 - z / 2.0, beta = 1.0 + z / 2.0;
    for (bool imag : {true, false}) {
      double c = imag ? 1.0 : -1.0;  // imaginary branch solves alpha p^2 + beta q^2 = +1
      std::string prefix = imag ? "im" : "re";
      if (alpha == 0.0 || beta == 0.0) {
        // z = ±2: a pair of parallel lines when c = 1
        if (c < 0) continue;
        bool alpha_zero = alpha == 0.0;
        double coef = alpha_zero ? beta : alpha;
        double fixed = 1.0 / std::sqrt(coef);
        for (int sgn : {1, -1}) {
          for (int j = 0; j < samples; ++j) {
            double t = -3.0 + 6.0 * j / (samples - 1);
            double p = alpha_zero ? t : sgn * fixed;
            double q = alpha_zero ? sgn * fixed : t;
            emit(z, prefix + (sgn > 0 ? "+" : "-"), t, p, q, imag);
          }
        }
      } else if (alpha > 0.0 && beta > 0.0) {
        if (c < 0) continue;  // definite form never equals -1
        for (int j = 0; j < samples; ++j) {
          double t = 2.0 * M_PI * j / samples;
          emit(z, prefix, t, std::cos(t) / std::sqrt(alpha), std::sin(t) / std::sqrt(beta), imag);
        }
      } else {
        // indefinite: two hyperbola branches for either sign of c
        double apos = std::abs(alpha), bpos = std::abs(beta);
        bool beta_pos = beta > 0.0;
        // c = +1: the positive-coefficient coordinate carries cosh
        bool cosh_on_q = (c > 0.0) == beta_pos;
        for (int sgn : {1, -1}) {
          for (int j = 0; j < samples; ++j) {
            double t = -2.5 + 5.0 * j / (samples - 1);
            double ch = sgn * std::cosh(t), sh = std::sinh(t);
            double p = cosh_on_q ? sh / std::sqrt(apos) : ch / std::sqrt(apos);
            double q = cosh_on_q ? ch / std::sqrt(bpos) : sh / std::sqrt(bpos);
            emit(z, prefix + (sgn > 0 ? "+" : "-"), t, p, q, imag);
          }
        }
      }
    }
    // the four base points lie on every curve of the pencil
    const std::complex<double> i01(0.0, 1.0);
    for (auto [x1, x2] : {std::pair<std::complex<double>, std::complex<double>>{0.0, i01},
                          {0.0, -i01},
                          {i01, 0.0},
                          {-i01, 0.0}}) {
      if (detail::conic_residual(z, x1, x2) >= 1e-9)
        throw InternalError("base point missed the curve");
      rows.push_back({z, "base", 0.0, x1, x2});
    }
  }
  return rows;
}

/// CSV rendering with 12 significant digits.
inline std::string conics_csv(const std::vector<ConicRow>& rows) {
  std::string out = "z,branch,t,re_x1,im_x1,re_x2,im_x2\n";
  char buf[64];
  auto num = [&](double x) {
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::string(buf);
  };
  for (const ConicRow& r : rows) {
    out += num(r.z);
    out += ",";
    out += r.branch;
    out += ",";
    out += num(r.t);
    out += ",";
    out += num(r.x1.real());
    out += ",";
    out += num(r.x1.imag());
    out += ",";
    out += num(r.x2.real());
    out += ",";
    out += num(r.x2.imag());
    out += "\n";
  }
  return out;
}

}  // namespace cluq
