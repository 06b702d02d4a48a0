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

#include <catch2/catch_amalgamated.hpp>

#include "cluq/poisson.hpp"
#include "cluq/poisson_order.hpp"
#include "fixtures.hpp"

using namespace cluq;
using cluq::testing::Rng;

namespace {

DerivationSpec kron_spec(long ell) {
  Seed<Cyclo> s = quantum_seed(kronecker_exchange(), kronecker_lambda(), ell);
  return DerivationSpec(kronecker_lambda(), s.form, s.vars[0].terms().begin()->second.context());
}

}  // namespace

TEST_CASE("derivation formula examples") {
  long ell = 5;
  DerivationSpec spec = kron_spec(ell);
  const Twist& t = spec.twist();
  Cyclo one = Cyclo::one(spec.context());

  // f = g kills the monomial
  TPoly<Cyclo> m1 = TPoly<Cyclo>::monomial(t, ExpVec{1, 0}, one);
  CHECK(derivation_partial(spec, ExpVec{1, 0}, m1).is_zero());

  // the unit is killed
  TPoly<Cyclo> u = TPoly<Cyclo>::monomial(t, ExpVec{0, 0}, one);
  CHECK(derivation_partial(spec, ExpVec{1, 0}, u).is_zero());

  // f = e1, a = M(e2): (1/ell) Lambda'(e1,e2) M(ell e1 + e2)
  TPoly<Cyclo> m2 = TPoly<Cyclo>::monomial(t, ExpVec{0, 1}, one);
  TPoly<Cyclo> got = derivation_partial(spec, ExpVec{1, 0}, m2);
  TPoly<Cyclo> expect =
      TPoly<Cyclo>::monomial(t, ExpVec{Int(ell), Int(1)}, one * Rat(-1, ell));
  CHECK(got == expect);
}

TEST_CASE("the derivation satisfies Leibniz") {
  Rng rng(41);
  for (long ell : {3L, 5L}) {
    DerivationSpec spec = kron_spec(ell);
    CycloCtx ctx = spec.context();
    for (int trial = 0; trial < 60; ++trial) {
      TPoly<Cyclo> a = cluq::testing::random_quantum_poly(rng, spec.twist(), ctx);
      TPoly<Cyclo> b = cluq::testing::random_quantum_poly(rng, spec.twist(), ctx);
      ExpVec f = cluq::testing::random_exponent(rng, 2);
      TPoly<Cyclo> lhs = derivation_partial(spec, f, a * b);
      TPoly<Cyclo> rhs = derivation_partial(spec, f, a) * b + a * derivation_partial(spec, f, b);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("central bracket") {
  long ell = 3;
  DerivationSpec spec = kron_spec(ell);
  CHECK(central_bracket(spec, 0, 0).is_zero());
  TPoly<Cyclo> b01 = central_bracket(spec, 0, 1);
  TPoly<Cyclo> b10 = central_bracket(spec, 1, 0);
  CHECK(b01 + b10 == TPoly<Cyclo>(spec.twist()));  // antisymmetry
  // the value is Lambda'(e1,e2) M(3 e1) M(3 e2) (verified internally too)
  TPoly<Cyclo> expect = TPoly<Cyclo>::monomial(spec.twist(), ExpVec{3, 3},
                                               Cyclo(spec.context(), Rat(-1)));
  CHECK(b01 == expect);
}

TEST_CASE("central bracket specializes to the gsv bracket with swapped slots") {
  // the derivation keeps the displayed (f,g) orientation, the classical
  // bracket the transposed one, so the specialization matches index-swapped
  long ell = 5;
  DerivationSpec spec = kron_spec(ell);
  GSVContext gsv(check_compatible(kronecker_lambda(), kronecker_exchange()));
  Twist t2 = Twist::classical(2);
  for (std::size_t k : {0, 1})
    for (std::size_t i : {0, 1}) {
      TPoly<Rat> specialized = specialize_commutative(central_bracket(spec, k, i));
      // substitute y'_j = x_j^ell -> x_j (degree division by ell)
      TPoly<Rat> renamed(t2);
      for (const auto& [e, c] : specialized.terms())
        renamed.add_term(ExpVec{e[0] / ell, e[1] / ell}, c);
      TPoly<Rat> xk = TPoly<Rat>::monomial(t2, unit_exp(2, k), Rat(1));
      TPoly<Rat> xi = TPoly<Rat>::monomial(t2, unit_exp(2, i), Rat(1));
      CHECK(renamed == gsv_bracket(xi, xk, gsv));
    }
}

TEST_CASE("difference quotient examples") {
  // Lambda'(f,f) = 0: both sides vanish
  DerivationSpec s3 = kron_spec(3);
  DiffQuotientReport z = difference_quotient_check(s3, ExpVec{1, 0}, ExpVec{2, 0});
  CHECK(z.ok);

  DiffQuotientReport r3 = difference_quotient_check(s3, ExpVec{1, 0}, ExpVec{0, 1});
  CHECK(r3.ok);

  Rng rng(42);
  DerivationSpec s5 = kron_spec(5);
  for (int trial = 0; trial < 60; ++trial) {
    ExpVec f = cluq::testing::random_exponent(rng, 2), g = cluq::testing::random_exponent(rng, 2);
    CHECK(difference_quotient_check(s5, f, g).ok);
  }
}

TEST_CASE("central ell-th power mutation identity") {
  CompatiblePair strict = check_compatible(kronecker_lambda(), kronecker_exchange());
  for (long ell : {3L, 5L}) {
    Seed<Cyclo> s = quantum_seed(kronecker_exchange(), kronecker_lambda(), ell);
    for (std::size_t k : {0, 1}) {
      CentralMutationReport rep = central_ell_power_mutation_check(s, k, strict);
      CHECK(rep.ok);
    }
  }

  // 3x2 acyclic fixture
  CompatiblePair strict32 =
      check_compatible(cluq::testing::acyclic32_lambda(), cluq::testing::acyclic32_exchange());
  for (long ell : {3L, 5L}) {
    Seed<Cyclo> s =
        quantum_seed(cluq::testing::acyclic32_exchange(), cluq::testing::acyclic32_lambda(), ell);
    for (std::size_t k : {0, 1}) {
      CentralMutationReport rep = central_ell_power_mutation_check(s, k, strict32);
      CHECK(rep.ok);
    }
  }

  // parity precondition
  CHECK_THROWS_AS(
      [&] {
        Seed<Cyclo> even = quantum_seed(kronecker_exchange(), kronecker_lambda(), 4);
        return central_ell_power_mutation_check(even, 0, strict);
      }(),
      HypothesisViolatedError);
}

TEST_CASE("derivation spec validates its inputs") {
  long ell = 3;
  Seed<Cyclo> s = quantum_seed(kronecker_exchange(), kronecker_lambda(), ell);
  CycloCtx ctx = s.vars[0].terms().begin()->second.context();
  // a lift that does not reduce to the twist is rejected
  CHECK_THROWS_AS(DerivationSpec(kronecker_lambda_printed(), s.form, ctx), DomainError);
}
