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

// End-to-end acceptance suite. Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero if any criterion fails. Every check is
// exact; the only floating point lives in the conic sampler, which carries
// its own 1e-9 gate.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "cluq/acyclic.hpp"
#include "cluq/azumaya.hpp"
#include "cluq/compat.hpp"
#include "cluq/conics.hpp"
#include "cluq/kronecker.hpp"
#include "cluq/poisson.hpp"
#include "cluq/poisson_order.hpp"
#include "cluq/seed.hpp"
#include "fixtures.hpp"

using namespace cluq;
using cluq::testing::Rng;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_seconds > 0 && elapsed >= budget_seconds) {
    ok = false;
    detail += " [exceeded " + std::to_string(budget_seconds) + "s budget]";
  }
  std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number, label.c_str(),
              elapsed, detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++g_failures;
}

bool all_passed(const std::vector<CheckResult>& checks, std::string& detail) {
  bool ok = true;
  for (const auto& c : checks) {
    if (!c.passed) {
      ok = false;
      detail += c.name + ": " + c.detail + "; ";
    }
  }
  return ok;
}

std::size_t random_direction(Rng& rng, const ExchangeData& ex) {
  return ex.ex()[static_cast<std::size_t>(
      cluq::testing::pick(rng, 0, static_cast<long>(ex.ex().size()) - 1))];
}

}  // namespace

int main() {
  // 1. classical worked-example suite, exact, under 5 seconds
  criterion(1, "classical suite: z-identities, Casimir, recursion through x8, denominators, "
               "exceptional points", 5.0, [](std::string& detail) {
    std::vector<CheckResult> checks = {verify_z_identities(), verify_casimir_and_potential(),
                                       verify_recursion_and_exceptional_points()};
    return all_passed(checks, detail);
  });

  // 2. quantum suite for ell in {3,5,7}: presentation relations + PI degree
  criterion(2, "quantum suite: presentation relations and PI degree for ell in {3,5,7}", 10.0,
            [](std::string& detail) {
              std::vector<CheckResult> checks;
              for (long ell : {3L, 5L, 7L}) checks.push_back(verify_quantum_kronecker(ell));
              return all_passed(checks, detail);
            });

  // 3. central ell-th power mutation identity, rank-2 and 3x2 fixtures
  criterion(3, "central ell-th-power mutation identity (k = 1,2; ell = 3,5; both fixtures)", 0,
            [](std::string& detail) {
              bool ok = true;
              for (long ell : {3L, 5L}) {
                CompatiblePair kr = check_compatible(kronecker_lambda(), kronecker_exchange());
                Seed<Cyclo> s = quantum_seed(kronecker_exchange(), kronecker_lambda(), ell);
                CompatiblePair p32 = check_compatible(cluq::testing::acyclic32_lambda(),
                                                      cluq::testing::acyclic32_exchange());
                Seed<Cyclo> s32 = quantum_seed(cluq::testing::acyclic32_exchange(),
                                               cluq::testing::acyclic32_lambda(), ell);
                for (std::size_t k : {std::size_t(0), std::size_t(1)}) {
                  ok = ok && central_ell_power_mutation_check(s, k, kr).ok;
                  ok = ok && central_ell_power_mutation_check(s32, k, p32).ok;
                }
              }
              if (!ok) detail = "an instance of the identity failed";
              return ok;
            });

  // 4. difference-quotient check on 50 random (f,g) pairs per fixture
  criterion(4, "specialization difference quotient = 2 l^2 zeta^{-1} times the derivation "
               "(50 random pairs per fixture)", 0, [](std::string& detail) {
    Rng rng(404);
    bool ok = true;
    auto fixture = [&](const ExchangeData& ex, const IntMatrix& lam, long ell) {
      Seed<Cyclo> s = quantum_seed(ex, lam, ell);
      DerivationSpec spec(lam, s.form, s.vars[0].terms().begin()->second.context());
      for (int trial = 0; trial < 50; ++trial) {
        ExpVec f = cluq::testing::random_exponent(rng, ex.n());
        ExpVec g = cluq::testing::random_exponent(rng, ex.n());
        ok = ok && difference_quotient_check(spec, f, g).ok;
      }
    };
    fixture(kronecker_exchange(), kronecker_lambda(), 3);
    fixture(kronecker_exchange(), kronecker_lambda(), 5);
    fixture(cluq::testing::acyclic32_exchange(), cluq::testing::acyclic32_lambda(), 5);
    if (!ok) detail = "a difference quotient disagreed";
    return ok;
  });

  // 5. property suites, >= 100 random cases each, all exact
  criterion(5, "property suites (involutivity, sign independence, D-invariance, kernel "
               "membership, Jacobi, Leibniz, associativity, division round-trips)", 0,
            [](std::string& detail) {
    Rng rng(505);
    bool ok = true;
    auto fail = [&](const std::string& what) {
      ok = false;
      if (detail.empty()) detail = what;
    };

    // matrix mutation involutivity (E+/E- cross-checked inside mutate_matrix)
    for (int t = 0; t < 100; ++t) {
      ExchangeData ex = cluq::testing::random_exchange(rng);
      std::size_t k = random_direction(rng, ex);
      if (mutate_exchange(mutate_exchange(ex, k), k).B() != ex.B()) fail("matrix involutivity");
    }

    // seed mutation involutivity, classical and quantum
    for (int t = 0; t < 100; ++t) {
      CompatiblePair p = cluq::testing::random_pair(rng, 2);
      std::size_t k = random_direction(rng, p.B);
      Seed<Rat> c = classical_seed(p.B);
      if (mutate_seed(mutate_seed(c, k), k).vars != c.vars) fail("classical seed involutivity");
      Seed<Cyclo> q = quantum_seed(p.B, p.Lambda, 3);
      Seed<Cyclo> qq = mutate_seed(mutate_seed(q, k), k);
      if (qq.vars != q.vars || qq.form != q.form) fail("quantum seed involutivity");
    }

    // pair mutation: involutivity, sign independence, D-invariance over
    // length <= 6 paths
    for (int t = 0; t < 100; ++t) {
      CompatiblePair p = cluq::testing::random_pair(rng);
      std::size_t k = random_direction(rng, p.B);
      CompatiblePair plus = mutate_pair(p, k, 1), minus = mutate_pair(p, k, -1);
      if (plus.Lambda != minus.Lambda || plus.B.B() != minus.B.B()) fail("sign independence");
      CompatiblePair back = mutate_pair(plus, k);
      if (back.Lambda != p.Lambda) fail("pair involutivity");
      CompatiblePair cur = p;
      for (int step = 0; step < 6; ++step) {
        cur = mutate_pair(cur, random_direction(rng, cur.B));
        if (cur.d != p.d) fail("D invariance");
      }
    }

    // weight mutation: involutivity + kernel membership (verified inside)
    int weight_cases = 0;
    while (weight_cases < 100) {
      ExchangeData ex = cluq::testing::random_exchange(rng);
      auto basis = torus_weights(ex);
      if (basis.empty()) continue;
      WeightVector nu(ex.n(), Int(0));
      for (const auto& v : basis) {
        long c = cluq::testing::pick(rng, -2, 2);
        for (std::size_t i = 0; i < nu.size(); ++i) nu[i] += Int(c) * v[i];
      }
      std::size_t k = random_direction(rng, ex);
      WeightVector m = mutate_weight(nu, ex, k);
      if (mutate_weight(m, mutate_exchange(ex, k), k) != nu) fail("weight involutivity");
      ++weight_cases;
    }

    // Jacobi identity for the GSV bracket on monomial triples
    for (int t = 0; t < 100; ++t) {
      CompatiblePair p = cluq::testing::random_pair(rng, 2);
      GSVContext ctx(p);
      std::size_t n = p.B.n();
      Twist tw = Twist::classical(n);
      TPoly<Rat> a = TPoly<Rat>::monomial(tw, cluq::testing::random_exponent(rng, n), Rat(1));
      TPoly<Rat> b = TPoly<Rat>::monomial(tw, cluq::testing::random_exponent(rng, n), Rat(1));
      TPoly<Rat> c = TPoly<Rat>::monomial(tw, cluq::testing::random_exponent(rng, n), Rat(1));
      TPoly<Rat> jac = gsv_bracket(a, gsv_bracket(b, c, ctx), ctx) +
                       gsv_bracket(b, gsv_bracket(c, a, ctx), ctx) +
                       gsv_bracket(c, gsv_bracket(a, b, ctx), ctx);
      if (!jac.is_zero()) fail("Jacobi");
    }

    // Leibniz for the torus derivation
    {
      Seed<Cyclo> s = quantum_seed(kronecker_exchange(), kronecker_lambda(), 5);
      DerivationSpec spec(kronecker_lambda(), s.form,
                          s.vars[0].terms().begin()->second.context());
      CycloCtx ctx = spec.context();
      for (int t = 0; t < 100; ++t) {
        TPoly<Cyclo> a = cluq::testing::random_quantum_poly(rng, spec.twist(), ctx);
        TPoly<Cyclo> b = cluq::testing::random_quantum_poly(rng, spec.twist(), ctx);
        ExpVec fv = cluq::testing::random_exponent(rng, 2);
        if (derivation_partial(spec, fv, a * b) !=
            derivation_partial(spec, fv, a) * b + a * derivation_partial(spec, fv, b))
          fail("Leibniz");
      }
    }

    // associativity of the twisted product
    {
      Twist tw = Twist::quantum(kronecker_lambda(), 7);
      CycloCtx ctx = CycloContext::make(7);
      for (int t = 0; t < 100; ++t) {
        TPoly<Cyclo> a = cluq::testing::random_quantum_poly(rng, tw, ctx);
        TPoly<Cyclo> b = cluq::testing::random_quantum_poly(rng, tw, ctx);
        TPoly<Cyclo> c = cluq::testing::random_quantum_poly(rng, tw, ctx);
        if ((a * b) * c != a * (b * c)) fail("associativity");
      }
    }

    // exact division round trips, classical and quantum
    {
      Twist tw = Twist::quantum(kronecker_lambda(), 5);
      CycloCtx ctx = CycloContext::make(5);
      for (int t = 0; t < 100; ++t) {
        TPoly<Rat> q = cluq::testing::random_classical_poly(rng, 2);
        TPoly<Rat> b = cluq::testing::random_classical_poly(rng, 2);
        if (exact_divide_right(q * b, b) != q) fail("classical division round trip");
        TPoly<Cyclo> qq = cluq::testing::random_quantum_poly(rng, tw, ctx);
        TPoly<Cyclo> bb = cluq::testing::random_quantum_poly(rng, tw, ctx);
        if (exact_divide_right(qq * bb, bb) != qq) fail("quantum division round trip");
      }
    }
    return ok;
  });

  // 6. stratum-degree dichotomy on the constructed 3x1 fixtures
  criterion(6, "Azumaya degree dichotomy: stratum < PI degree iff the frozen index is "
               "non-central", 0, [](std::string& detail) {
    bool ok = true;
    for (long ell : {3L, 5L, 7L}) {
      for (const auto& [ex, lam] :
           {std::pair<ExchangeData, IntMatrix>{cluq::testing::dichotomy_exchange(),
                                               cluq::testing::dichotomy_lambda()},
            {cluq::testing::weight_fixture_exchange(), cluq::testing::weight_fixture_lambda()}}) {
        auto nc = noncentral_frozen(lam, ex.ninv(), ell);
        Int full = pi_degree(lam, ell);
        for (std::size_t j : ex.ninv()) {
          bool in_nc = std::find(nc.begin(), nc.end(), j) != nc.end();
          Int stratum = frozen_stratum_pi_degree(lam, j, ell);
          if (in_nc ? !(stratum < full) : !(stratum == full)) ok = false;
        }
      }
      // the dichotomy fixture must exhibit both sides
      auto nc = noncentral_frozen(cluq::testing::dichotomy_lambda(), {1, 2}, ell);
      if (nc != std::vector<std::size_t>{2}) ok = false;
    }
    if (!ok) detail = "a stratum degree fell on the wrong side";
    return ok;
  });

  // 7. exhaustive agreement with brute-force kernel enumeration
  criterion(7, "lattice index and PI degree vs enumeration for all skew matrices of size <= 4, "
               "entries in [0, ell), ell in {3,5}", 30.0, [](std::string& detail) {
    for (long ell : {3L, 5L}) {
      for (std::size_t n = 1; n <= 4; ++n) {
        std::size_t slots = n * (n - 1) / 2;
        long long total = 1;
        for (std::size_t s = 0; s < slots; ++s) total *= ell;
        for (long long code = 0; code < total; ++code) {
          IntMatrix S(n, n);
          long long c = code;
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
              long v = static_cast<long>(c % ell);
              c /= ell;
              S(i, j) = v;
              S(j, i) = mod_nonneg(Int(-v), Int(ell));
            }
          long long count = cluq::testing::kernel_count_bruteforce(S, ell);
          Int expect = 1;
          for (std::size_t i = 0; i < n; ++i) expect *= ell;
          expect /= Int(count);
          Int index = lattice_index_mod(S, Int(ell));
          Int pd = pi_degree(S, ell);
          if (index != expect || pd * pd != index) {
            detail = "disagreement at ell=" + std::to_string(ell) + ", n=" + std::to_string(n);
            return false;
          }
        }
      }
    }
    return true;
  });

  // 8. anticanonical coefficient vs the independent expansion oracle
  criterion(8, "anticanonical coefficient vs full-multivector oracle (N <= 4); nonzero on the "
               "rank-2 fixture", 0, [](std::string& detail) {
    Rng rng(808);
    if (anticanonical_coefficient(kronecker_lambda(), {}) == 0) {
      detail = "fixture coefficient vanished";
      return false;
    }
    for (int trial = 0; trial < 200; ++trial) {
      std::size_t n = static_cast<std::size_t>(cluq::testing::pick(rng, 2, 4));
      IntMatrix lam = cluq::testing::random_skew(rng, n, -2, 2);
      std::size_t m = n - skew_rank(lam);
      std::vector<WeightVector> theta;
      for (std::size_t i = 0; i < m; ++i) {
        WeightVector v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = cluq::testing::pick(rng, -2, 2);
        theta.push_back(v);
      }
      if (anticanonical_coefficient(lam, theta) != cluq::testing::anticanonical_oracle(lam, theta)) {
        detail = "oracle disagreement";
        return false;
      }
    }
    return true;
  });

  // 9. the conic family data
  criterion(9, "conic samples satisfy the equation to 1e-9; four base points on every curve", 0,
            [](std::string& detail) {
    std::vector<double> zs = {-3.0, -1.5, 0.0, 1.5, 3.0};
    auto rows = conic_samples(zs, 64);
    for (const auto& r : rows)
      if (cluq::detail::conic_residual(r.z, r.x1, r.x2) >= 1e-9) {
        detail = "residual too large";
        return false;
      }
    for (double z : zs) {
      int base = 0;
      for (const auto& r : rows)
        if (r.z == z && r.branch == "base") ++base;
      if (base != 4) {
        detail = "missing base points";
        return false;
      }
    }
    return true;
  });

  if (g_failures == 0) {
    std::printf("acceptance: all 9 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}
