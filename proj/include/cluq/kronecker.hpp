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

#include "cluq/acyclic.hpp"
#include "cluq/azumaya.hpp"
#include "cluq/compat.hpp"
#include "cluq/poisson.hpp"
#include "cluq/poisson_order.hpp"
#include "cluq/seed.hpp"

namespace cluq {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The rank-2 example with B = [[0,-2],[2,0]], all variables mutable.
inline ExchangeData kronecker_exchange() {
  return ExchangeData(2, {0, 1}, {}, {}, IntMatrix::of({{0, -2}, {2, 0}}));
}

/// The bundled sign fixture: B^T Lambda = diag(2,2).
inline IntMatrix kronecker_lambda() { return IntMatrix::of({{0, -1}, {1, 0}}); }

/// The matrix as printed in the source example; B^T Lambda = -2I, so
/// check_compatible rejects it with the nonpositive-d hint.
inline IntMatrix kronecker_lambda_printed() { return IntMatrix::of({{0, 1}, {-1, 0}}); }

namespace detail {

struct SubChecks {
  std::vector<std::string> failures;
  std::size_t total = 0;

  void expect(bool ok, const std::string& what) {
    ++total;
    if (!ok) failures.push_back(what);
  }

  CheckResult result(const std::string& name) const {
    CheckResult r;
    r.name = name;
    r.passed = failures.empty();
    if (r.passed) {
      r.detail = "ok: " + std::to_string(total) + " sub-checks";
    } else {
      r.detail = "failed:";
      for (const std::string& f : failures) r.detail += " [" + f + "]";
    }
    return r;
  }
};

}  // namespace detail

/// z := x1' x2' - x1 x2 and its three displayed identities, realized exactly
/// in the initial Laurent ring.
inline CheckResult verify_z_identities(const ExchangeData& ex = kronecker_exchange()) {
  detail::SubChecks c;
  Seed<Rat> seed = classical_seed(ex);
  Twist t = seed.form;
  auto mono = [&](long long a, long long b) {
    return TPoly<Rat>::monomial(t, ExpVec{Int(a), Int(b)}, Rat(1));
  };
  TPoly<Rat> x1 = seed.vars[0], x2 = seed.vars[1];
  TPoly<Rat> x1p = mutate_seed(seed, 0).vars[0];
  TPoly<Rat> x2p = mutate_seed(seed, 1).vars[1];

  c.expect(x1p == mono(-1, 2) + mono(-1, 0), "x1' = (x2^2+1)/x1");
  c.expect(x2p == mono(2, -1) + mono(0, -1), "x2' = (x1^2+1)/x2");

  TPoly<Rat> z = x1p * x2p - x1 * x2;
  c.expect(z == mono(1, -1) + mono(-1, 1) + mono(-1, -1), "z = (x1^2+x2^2+1)/(x1 x2)");
  c.expect(x1 * x2 * z == mono(2, 0) + mono(0, 2) + mono(0, 0), "x1 x2 z = x1^2+x2^2+1");
  c.expect(x1 * z == x2 + x2p, "x1 z = x2 + x2'");
  c.expect(x2 * z == x1 + x1p, "x2 z = x1 + x1'");
  return c.result("z-identities");
}

/// The potential-bracket table of f = x1 x2 z - x1^2 - x2^2 - 1, the exact
/// identity 2 x1 x2 z - 2 x1^2 - 2 x2^2 - 2 = 2 f, the match of the GSV
/// bracket with f_z, and nonvanishing of df at the four base points.
inline CheckResult verify_casimir_and_potential(const ExchangeData& ex = kronecker_exchange(),
                                                const IntMatrix& lambda = kronecker_lambda()) {
  detail::SubChecks c;
  Twist t3 = Twist::classical(3);  // variables x1, x2, z
  auto mono3 = [&](long long a, long long b, long long d, long long coeff) {
    return TPoly<Rat>::monomial(t3, ExpVec{Int(a), Int(b), Int(d)}, Rat(coeff));
  };
  TPoly<Rat> f = mono3(1, 1, 1, 1) + mono3(2, 0, 0, -1) + mono3(0, 2, 0, -1) + mono3(0, 0, 0, -1);
  TPoly<Rat> fx1 = partial_derivative(f, 0);
  TPoly<Rat> fx2 = partial_derivative(f, 1);
  TPoly<Rat> fz = partial_derivative(f, 2);

  c.expect(fz == mono3(1, 1, 0, 1), "f_z = x1 x2");
  c.expect(-fx2 == mono3(0, 1, 0, 2) + mono3(1, 0, 1, -1), "{x1,z} = -f_x2 = 2 x2 - x1 z");
  c.expect(fx1 == mono3(0, 1, 1, 1) + mono3(1, 0, 0, -2), "{x2,z} = f_x1 = x2 z - 2 x1");
  c.expect(f.scaled(Rat(2)) ==
               mono3(1, 1, 1, 2) + mono3(2, 0, 0, -2) + mono3(0, 2, 0, -2) + mono3(0, 0, 0, -2),
           "2 x1 x2 z - 2 x1^2 - 2 x2^2 - 2 = 2 f");

  // GSV bracket of the rank-2 seed matches the potential bracket f_z
  GSVContext ctx(check_compatible(lambda, ex));
  Twist t2 = Twist::classical(2);
  TPoly<Rat> x1 = TPoly<Rat>::monomial(t2, ExpVec{Int(1), Int(0)}, Rat(1));
  TPoly<Rat> x2 = TPoly<Rat>::monomial(t2, ExpVec{Int(0), Int(1)}, Rat(1));
  c.expect(gsv_bracket(x1, x2, ctx) == x1 * x2, "{x1,x2} = f_z = x1 x2");

  // df does not vanish at (±i,0,0), (0,±i,0)
  CycloCtx gauss = CycloContext::make(4);
  Cyclo zero = Cyclo::zero(gauss);
  Cyclo iu = Cyclo::zeta_power(gauss, 1);
  std::vector<std::vector<Cyclo>> points = {
      {iu, zero, zero}, {-iu, zero, zero}, {zero, iu, zero}, {zero, -iu, zero}};
  for (std::size_t p = 0; p < points.size(); ++p) {
    bool nonzero = !evaluate(fx1, points[p], gauss).is_zero() ||
                   !evaluate(fx2, points[p], gauss).is_zero() ||
                   !evaluate(fz, points[p], gauss).is_zero();
    c.expect(nonzero, "df nonzero at base point " + std::to_string(p + 1));
    c.expect(evaluate(f, points[p], gauss).is_zero(),
             "base point " + std::to_string(p + 1) + " lies on V(f)");
  }
  return c.result("casimir-potential");
}

/// Generates x3..x8 by alternating mutations, checks the recursion
/// x_{n-1} x_{n+1} = x_n^2 + 1 exactly, monomial denominators, and the
/// periodic (0, i, 0, -i) value assignment over Q(i).
inline CheckResult verify_recursion_and_exceptional_points(
    const ExchangeData& ex = kronecker_exchange()) {
  detail::SubChecks c;
  Seed<Rat> seed = classical_seed(ex);
  std::vector<TPoly<Rat>> x = {seed.vars[0], seed.vars[1]};  // x1, x2
  Seed<Rat> cur = seed;
  for (std::size_t step = 0; step < 6; ++step) {
    std::size_t k = step % 2;  // alternate directions 1,2,1,2,...
    cur = mutate_seed(cur, k);
    x.push_back(cur.vars[k]);
  }
  TPoly<Rat> one = TPoly<Rat>::monomial(seed.form, ExpVec{Int(0), Int(0)}, Rat(1));
  for (std::size_t n = 1; n + 1 < x.size(); ++n)
    c.expect(x[n - 1] * x[n + 1] == x[n] * x[n] + one,
             "x" + std::to_string(n) + " x" + std::to_string(n + 2) + " = x" +
                 std::to_string(n + 1) + "^2 + 1");

  // monomial denominator: the coordinatewise minimum of the support is
  // itself attained by a term, so x_n = (polynomial with nonzero constant
  // term) / x^(-min)
  for (std::size_t n = 2; n < x.size(); ++n) {
    ExpVec lo = x[n].min_exponents();
    c.expect(x[n].terms().count(lo) == 1,
             "monomial denominator for x" + std::to_string(n + 1));
  }

  // the exceptional-point value cycle 0, i, 0, -i satisfies every instance
  CycloCtx gauss = CycloContext::make(4);
  Cyclo iu = Cyclo::zeta_power(gauss, 1);
  std::vector<Cyclo> cycle = {Cyclo::zero(gauss), iu, Cyclo::zero(gauss), -iu};
  Cyclo cone = Cyclo::one(gauss);
  for (std::size_t n = 0; n < 4; ++n) {
    Cyclo lhs = cycle[n % 4] * cycle[(n + 2) % 4];
    Cyclo rhs = cycle[(n + 1) % 4] * cycle[(n + 1) % 4] + cone;
    c.expect(lhs == rhs, "periodic assignment at phase " + std::to_string(n));
  }
  return c.result("recursion-exceptional-points");
}

/// The quantum presentation relations realized by expansion, the central
/// ell-th-power mutation identity for both directions, and PI degree = ell.
/// The two exchange relations hold exactly as displayed in the source
/// example; the commutation relation holds with eps^{-1} (the displayed eps
/// is inconsistent with the example's own exchange relations for every
/// frame convention), and the detail string records the verified scalar.
inline CheckResult verify_quantum_kronecker(long ell,
                                            const ExchangeData& ex = kronecker_exchange(),
                                            const IntMatrix& lambda = kronecker_lambda()) {
  if (ell % 2 == 0) throw HypothesisViolatedError("ell must be odd");
  detail::SubChecks c;
  CompatiblePair strict = check_compatible(lambda, ex);
  Seed<Cyclo> seed = quantum_seed(ex, lambda, ell);
  CycloCtx ctx = seed.vars[0].terms().begin()->second.context();
  const Twist& t = seed.form;
  auto zeta = [&](long long e) { return Cyclo::zeta_power(ctx, Int(e)); };
  auto mono = [&](long long a, long long b, const Cyclo& coeff) {
    return TPoly<Cyclo>::monomial(t, ExpVec{Int(a), Int(b)}, coeff);
  };

  TPoly<Cyclo> x1 = seed.vars[0], x2 = seed.vars[1];
  TPoly<Cyclo> x1p = mutate_seed(seed, 0).vars[0];
  TPoly<Cyclo> x2p = mutate_seed(seed, 1).vars[1];
  Cyclo one = Cyclo::one(ctx);

  c.expect(x1 * x2 == (x2 * x1).scaled(zeta(-2)), "x1 x2 = eps^{-1} x2 x1");
  c.expect(x1 * x1p == mono(0, 2, zeta(-2)) + mono(0, 0, one), "x1 x1' = eps^{-1} x2^2 + 1");
  c.expect(x2 * x2p == mono(2, 0, zeta(2)) + mono(0, 0, one), "x2 x2' = eps x1^2 + 1");

  for (std::size_t k : {std::size_t(0), std::size_t(1)}) {
    CentralMutationReport rep = central_ell_power_mutation_check(seed, k, strict);
    c.expect(rep.ok, "central ell-th power mutation identity, k = " + std::to_string(k + 1));
  }

  c.expect(pi_degree(lambda, ell) == ell, "PI degree equals ell");
  CheckResult r = c.result("quantum-kronecker-ell-" + std::to_string(ell));
  if (r.passed)
    r.detail += "; commutation scalar verified as eps^{-1} = zeta^{" +
                std::to_string((2 * (ell - 1)) % ell) + "}";
  return r;
}

/// Validates that the supplied pair is the expected compatible fixture;
/// catches corrupted seed files in the verification CLI.
inline CheckResult verify_fixture_compat(const ExchangeData& ex, const IntMatrix& lambda) {
  detail::SubChecks c;
  try {
    CompatiblePair p = check_compatible(lambda, ex);
    c.expect(p.d == std::vector<Int>{Int(2), Int(2)}, "D = diag(2,2)");
  } catch (const Error& e) {
    c.expect(false, std::string("compatibility: ") + e.what());
  }
  c.expect(ex.B() == IntMatrix::of({{0, -2}, {2, 0}}), "B is the rank-2 fixture");
  return c.result("fixture-compat");
}

/// The full verification suite; `ells` defaults to {3, 5, 7}.
inline std::vector<CheckResult> run_kronecker_suite(const ExchangeData& ex,
                                                    const IntMatrix& lambda,
                                                    const std::vector<long>& ells = {3, 5, 7}) {
  std::vector<CheckResult> out;
  out.push_back(verify_fixture_compat(ex, lambda));
  auto guarded = [&](auto&& fn, const std::string& name) {
    try {
      out.push_back(fn());
    } catch (const Error& e) {
      out.push_back({name, false, std::string("error: ") + e.what()});
    }
  };
  guarded([&] { return verify_z_identities(ex); }, "z-identities");
  guarded([&] { return verify_casimir_and_potential(ex, lambda); }, "casimir-potential");
  guarded([&] { return verify_recursion_and_exceptional_points(ex); },
          "recursion-exceptional-points");
  for (long ell : ells)
    guarded([&] { return verify_quantum_kronecker(ell, ex, lambda); },
            "quantum-kronecker-ell-" + std::to_string(ell));
  return out;
}

}  // namespace cluq
