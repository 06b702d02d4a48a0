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

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <string>

#include "cluq/errors.hpp"

namespace cluq {

/// Exact arbitrary-precision integer. Mutation sequences grow matrix and
/// exponent entries superpolynomially, so there is no machine-word path.
using Int = boost::multiprecision::cpp_int;

/// Exact rational, always kept in lowest terms by the backend.
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

/// Least nonnegative residue of a modulo m (m > 0).
inline Int mod_nonneg(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

/// Exact integer square root; throws if n is not a perfect square.
inline Int isqrt_exact(const Int& n, const char* what = "integer") {
  if (n < 0) throw NotPerfectSquareError(what);
  Int r = boost::multiprecision::sqrt(n);
  if (r * r != n) throw NotPerfectSquareError(what);
  return r;
}

inline std::int64_t to_int64(const Int& a) {
  if (a > std::numeric_limits<std::int64_t>::max() ||
      a < std::numeric_limits<std::int64_t>::min())
    throw InternalError("integer exceeds 64-bit range");
  return static_cast<std::int64_t>(a);
}

inline std::string to_string(const Int& a) { return a.str(); }

inline std::string to_string(const Rat& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

inline Rat rat_of(const Int& a) { return Rat(a); }

/// Parse "p" or "p/q" into an exact rational.
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator: " + s);
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw ParseError("bad rational: " + s);
  }
}

}  // namespace cluq
