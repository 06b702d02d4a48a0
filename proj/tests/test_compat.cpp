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
#include <string>

#include "cluq/compat.hpp"
#include "fixtures.hpp"

using namespace cluq;
using cluq::testing::Rng;

TEST_CASE("compatibility examples") {
  // B = (0,1)^T with one mutable direction: D = (1)
  CompatiblePair p = check_compatible(cluq::testing::weight_fixture_lambda(),
                                      cluq::testing::weight_fixture_exchange());
  CHECK(p.d == std::vector<Int>{1});

  // the printed rank-2 matrix gives B^T Lambda = -2I: rejected with a hint
  try {
    check_compatible(kronecker_lambda_printed(), kronecker_exchange());
    FAIL("expected NotCompatibleError");
  } catch (const NotCompatibleError& e) {
    CHECK(e.reason == "nonpositive-d");
    CHECK(std::string(e.what()).find("-Lambda") != std::string::npos);
  }

  // the sign fixture passes with D = diag(2,2)
  CompatiblePair kr = check_compatible(kronecker_lambda(), kronecker_exchange());
  CHECK(kr.d == std::vector<Int>{2, 2});
}

TEST_CASE("pair mutation: involution, sign independence, D invariance") {
  Rng rng(21);
  for (int trial = 0; trial < 120; ++trial) {
    CompatiblePair p = cluq::testing::random_pair(rng);
    std::size_t k = p.B.ex()[static_cast<std::size_t>(
        cluq::testing::pick(rng, 0, static_cast<long>(p.B.ex().size()) - 1))];

    CompatiblePair plus = mutate_pair(p, k, 1);
    CompatiblePair minus = mutate_pair(p, k, -1);
    CHECK(plus.Lambda == minus.Lambda);
    CHECK(plus.B.B() == minus.B.B());

    CompatiblePair back = mutate_pair(plus, k, 1);
    CHECK(back.Lambda == p.Lambda);
    CHECK(back.B.B() == p.B.B());

    // D stays fixed along random length <= 6 paths
    CompatiblePair cur = p;
    for (int step = 0; step < 6; ++step) {
      std::size_t kk = cur.B.ex()[static_cast<std::size_t>(
          cluq::testing::pick(rng, 0, static_cast<long>(cur.B.ex().size()) - 1))];
      cur = mutate_pair(cur, kk, cluq::testing::pick(rng, 0, 1) ? 1 : -1);
      CHECK(cur.d == p.d);
    }
  }
}

TEST_CASE("full rank consequence") {
  Rng rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    CompatiblePair p = cluq::testing::random_pair(rng);
    CHECK(rank_rational(p.B.B()) == p.B.ex().size());
  }
}

TEST_CASE("ell-compatibility examples") {
  // reduction of an exact compatible pair always passes
  for (const CompatiblePair& p : cluq::testing::base_pairs())
    for (long ell : {3L, 5L}) {
      EllCompatiblePair q = check_ell_compatible(p.Lambda, p.B, ell, &p.d);
      CHECK(q.ell == ell);
      CHECK(q.d == p.d);
    }

  // the sign fixture mod 5 has D = diag(2,2)
  EllCompatiblePair kr = check_ell_compatible(kronecker_lambda(), kronecker_exchange(), 5);
  CHECK(kr.d == std::vector<Int>{2, 2});

  // Omega = 0 with nonzero B: zero diagonal residues are rejected
  CHECK_THROWS_AS(check_ell_compatible(IntMatrix(2, 2), kronecker_exchange(), 5),
                  NotEllCompatibleError);
}

TEST_CASE("mod-ell reduction commutes with pair mutation") {
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    CompatiblePair p = cluq::testing::random_pair(rng);
    long ell = cluq::testing::pick(rng, 0, 1) ? 3 : 7;
    std::size_t k = p.B.ex()[static_cast<std::size_t>(
        cluq::testing::pick(rng, 0, static_cast<long>(p.B.ex().size()) - 1))];
    EllCompatiblePair reduced = check_ell_compatible(p.Lambda, p.B, ell, &p.d);
    EllCompatiblePair route1 = mutate_ell_pair(reduced, k);
    CompatiblePair route2 = mutate_pair(p, k);
    CHECK(route1.omega == route2.Lambda.mod(Int(ell)));
    CHECK(route1.B.B() == route2.B.B());
  }
}

TEST_CASE("strict lift tracking") {
  CompatiblePair kr = check_compatible(kronecker_lambda(), kronecker_exchange());
  CHECK(track_strict_lift(kr, {}) == kr.Lambda);
  CHECK(track_strict_lift(kr, {0, 0}) == kr.Lambda);

  // one step: the tracked lift reduces to the mutated seed twist
  long ell = 5;
  Seed<Cyclo> s = quantum_seed(kronecker_exchange(), kronecker_lambda(), ell);
  Seed<Cyclo> m = mutate_seed(s, 0);
  IntMatrix lifted = track_strict_lift(kr, {0}, m.form);
  CHECK(lifted == IntMatrix::of({{0, 1}, {-1, 0}}));
  CHECK(lifted.mod(Int(ell)) == m.form.matrix());
}

TEST_CASE("strict lift matches seed twists along random histories") {
  Rng rng(24);
  for (int trial = 0; trial < 40; ++trial) {
    CompatiblePair p = cluq::testing::random_pair(rng, 0);
    long ell = 3;
    Seed<Cyclo> s = quantum_seed(p.B, p.Lambda, ell);
    std::vector<std::size_t> history;
    for (int step = 0; step < 4; ++step) {
      std::size_t k = s.exchange.ex()[static_cast<std::size_t>(
          cluq::testing::pick(rng, 0, static_cast<long>(s.exchange.ex().size()) - 1))];
      s = mutate_seed(s, k);
      history.push_back(k);
    }
    CHECK_NOTHROW(track_strict_lift(p, history, s.form));
  }
}
