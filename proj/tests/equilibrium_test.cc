// Copyright 2026 The Wronggame Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <random>
#include <vector>

#include "doctest.h"
#include "wronggame/equilibrium.h"
#include "wronggame/ordinal_catalog.h"

namespace wronggame {
namespace {

PayoffMatrix M(std::string_view literal) { return ParseMatrixLiteral(literal); }

Equilibrium Eq(int row, int col, Rational p1, EquilibriumKind kind) {
  return {MixedStrategy::Pure(2, row), MixedStrategy::Pure(2, col), p1, 0,
          kind};
}

// Pure-deviation check written against Payoff() only.
bool NoProfitableDeviation(const PayoffMatrix& a, const PayoffMatrix& b,
                           const MixedStrategy& x, const MixedStrategy& y) {
  const Rational p1 = Payoff(x, a, y);
  const Rational p2 = Payoff(x, b, y);
  for (int i = 0; i < 2; ++i) {
    if (Payoff(MixedStrategy::Pure(2, i), a, y) > p1) return false;
    if (Payoff(x, b, MixedStrategy::Pure(2, i)) > p2) return false;
  }
  return true;
}

TEST_SUITE("equilibrium") {

TEST_CASE("bilinear coefficients") {
  CHECK(BilinearForm(M("[[4,1],[2,3]]")) == BilinearPayoff{3, -2, -1, 4});
  // x^T B y for B = [[1,3],[4,2]] is (2 - 4a) b + (2 + a).
  const BilinearPayoff p2 = BilinearForm(M("[[1,3],[4,2]]"));
  CHECK(p2.c0 == 2);
  CHECK(p2.ca == 1);
  CHECK(p2.cb == 2);
  CHECK(p2.cab == -4);
  CHECK(BilinearForm(M("[[0,0],[0,0]]")) == BilinearPayoff{0, 0, 0, 0});
  CHECK_THROWS_AS(BilinearForm(M("[[1,2,3],[4,5,6]]")), ContractViolation);
}

TEST_CASE("bilinear form agrees with the matrix product") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(0, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const PayoffMatrix m = PayoffMatrix::Square2(num(rng), num(rng), num(rng),
                                                 num(rng));
    const Rational a(num(rng), 9), b(num(rng), 9);
    CHECK(BilinearForm(m)(a, b) ==
          Payoff(MixedStrategy::FromParam(a), m, MixedStrategy::FromParam(b)));
  }
}

TEST_CASE("breakpoints of the example family") {
  const Breakpoint b = BreakpointOf(M("[[1,3],[4,2]]"));
  CHECK(b.a_star == Rational(1, 2));
  CHECK(b.below == 1);
  CHECK(b.above == 0);
  CHECK(BreakpointOf(M("[[2,3],[4,1]]")).a_star == Rational(3, 4));
  CHECK(BreakpointOf(M("[[1,2],[4,3]]")).a_star == Rational(1, 2));
  CHECK(BreakpointOf(M("[[1,4],[3,2]]")).a_star == Rational(1, 4));
  CHECK(BreakpointOf(M("[[1,2],[3,4]]")).below == 0);
  CHECK_FALSE(BreakpointOf(M("[[1,2],[3,4]]")).a_star.has_value());
  CHECK(BreakpointOf(M("[[2,2],[5,5]]")).indifferent_everywhere());
}

TEST_CASE("breakpoint sides agree with a sign scan") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> num(1, 9999);
  for (const StrictOrdinalMatrix& s : AllStrictOrdinalMatrices()) {
    const PayoffMatrix r = s.payoff();
    const Breakpoint bp = BreakpointOf(r);
    REQUIRE_FALSE(bp.indifferent_everywhere());
    for (int i = 0; i < 1000; ++i) {
      const Rational a(num(rng), 10000);
      const Rational gain =
          Payoff(MixedStrategy::FromParam(a), r, MixedStrategy::Pure(2, 0)) -
          Payoff(MixedStrategy::FromParam(a), r, MixedStrategy::Pure(2, 1));
      if (bp.a_star && a == *bp.a_star) continue;
      const bool below = !bp.a_star || a < *bp.a_star;
      const int expected = below ? *bp.below : *bp.above;
      CHECK(gain != 0);
      CHECK((gain > 0 ? 1 : 0) == expected);
    }
  }
}

TEST_CASE("best responses") {
  const PayoffMatrix a = M("[[4,1],[2,3]]");
  const PayoffMatrix b = M("[[1,3],[4,2]]");
  const auto pess = TieBreakRule::kPessimistic;
  CHECK(BestResponseB(b, SidedParam::Exact(Rational(1, 4)), pess, a).b == 1);
  CHECK(BestResponseB(M("[[1,4],[3,2]]"), SidedParam::Exact(Rational(1, 2)),
                      pess, a)
            .b == 0);

  // At a = 1/2 the column player is indifferent; P1 is 2 for b = 0 and 3
  // for b = 1.
  const SidedParam half = SidedParam::Exact(Rational(1, 2));
  const Response worst = BestResponseB(b, half, pess, a);
  CHECK(worst.b == 0);
  CHECK(worst.p1 == 2);
  CHECK(BestResponseB(b, half, TieBreakRule::kOptimistic, a).p1 == 3);
  const Response uniform = BestResponseB(b, half, TieBreakRule::kUniform, a);
  CHECK(uniform.b == Rational(1, 2));
  CHECK(uniform.p1 == Rational(5, 2));
  CHECK(BestResponseB(b, half, TieBreakRule::kLowestIndex, a).b == 1);

  const Response left = BestResponseB(b, SidedParam::LeftOf(Rational(1, 2)),
                                      pess, a);
  CHECK(left.b == 1);
  CHECK(left.p1 == 3);
  CHECK(BestResponseB(b, SidedParam::RightOf(Rational(1, 2)), pess, a).b == 0);
}

TEST_CASE("pure equilibrium of a dominance game") {
  const auto eqs = NashEquilibria(M("[[4,2],[3,1]]"), M("[[2,4],[1,3]]"));
  REQUIRE(eqs.size() == 1);
  CHECK(eqs[0].x == MixedStrategy::Pure(2, 0));
  CHECK(eqs[0].y == MixedStrategy::Pure(2, 1));
  CHECK(eqs[0].p1 == 2);
  CHECK(eqs[0].kind == EquilibriumKind::kPure);
}

TEST_CASE("coordination cell of the first listed game") {
  const PayoffMatrix m = M("[[1,2],[3,4]]");
  const auto eqs = NashEquilibria(m, m);
  bool found = false;
  for (const Equilibrium& e : eqs) {
    if (e.x == MixedStrategy::Pure(2, 1) && e.y == MixedStrategy::Pure(2, 1)) {
      found = true;
      CHECK(e.p1 == 4);
    }
  }
  CHECK(found);
}

TEST_CASE("mixed equilibrium of matching pennies") {
  const auto eqs = NashEquilibria(M("[[2,1],[1,2]]"), M("[[1,2],[2,1]]"));
  REQUIRE(eqs.size() == 1);
  CHECK(eqs[0].kind == EquilibriumKind::kMixed);
  CHECK(eqs[0].x == MixedStrategy::FromParam(Rational(1, 2)));
  CHECK(eqs[0].p1 == Rational(3, 2));
}

TEST_CASE("every equilibrium of every ordinal pair survives deviations") {
  const auto all = AllStrictOrdinalMatrices();
  for (const StrictOrdinalMatrix& sa : all) {
    for (const StrictOrdinalMatrix& sb : all) {
      const PayoffMatrix a = sa.payoff(), b = sb.payoff();
      const auto eqs = NashEquilibria(a, b);
      REQUIRE_FALSE(eqs.empty());
      int pure = 0;
      for (const Equilibrium& e : eqs) {
        CHECK(NoProfitableDeviation(a, b, e.x, e.y));
        CHECK(IsEquilibrium(a, b, e.x, e.y));
        CHECK(e.p1 == Payoff(e.x, a, e.y));
        CHECK(e.p2 == Payoff(e.x, b, e.y));
        if (e.kind == EquilibriumKind::kPure) ++pure;
      }
      int expected_pure = 0;
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
          if (NoProfitableDeviation(a, b, MixedStrategy::Pure(2, r),
                                    MixedStrategy::Pure(2, c))) {
            ++expected_pure;
          }
        }
      }
      CHECK(pure == expected_pure);
    }
  }
}

TEST_CASE("equilibria are invariant under positive affine rescaling") {
  for (const BimatrixGame& g : PublishedListing()) {
    const PayoffMatrix a = g.a.payoff(), b = g.b.payoff();
    std::vector<Rational> a2, b2;
    for (const Rational& v : a.entries()) a2.push_back(3 * v + 2);
    for (const Rational& v : b.entries()) b2.push_back(Rational(1, 2) * v + 7);
    const auto base = NashEquilibria(a, b);
    const auto scaled =
        NashEquilibria(PayoffMatrix(2, 2, a2), PayoffMatrix(2, 2, b2));
    REQUIRE(base.size() == scaled.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      CHECK(base[i].x == scaled[i].x);
      CHECK(base[i].y == scaled[i].y);
      CHECK(scaled[i].p1 == 3 * base[i].p1 + 2);
    }
  }
}

TEST_CASE("equilibrium selection") {
  const std::vector<Equilibrium> two_pure = {
      Eq(0, 0, 3, EquilibriumKind::kPure), Eq(1, 1, 4, EquilibriumKind::kPure)};
  CHECK(SelectEquilibrium(two_pure, SelectionRule::kP1MaxPureFirst).p1 == 4);
  CHECK(SelectEquilibrium(two_pure, SelectionRule::kP1MinPureFirst).p1 == 3);
  CHECK(SelectEquilibrium(two_pure, SelectionRule::kFirstListed).p1 == 3);

  std::vector<Equilibrium> pure_and_mixed = {
      Eq(0, 0, 3, EquilibriumKind::kPure),
      {MixedStrategy::FromParam(Rational(1, 2)),
       MixedStrategy::FromParam(Rational(1, 2)), 3, 0,
       EquilibriumKind::kMixed}};
  CHECK(SelectEquilibrium(pure_and_mixed, SelectionRule::kP1MaxPureFirst).kind ==
        EquilibriumKind::kPure);
  pure_and_mixed[1].p1 = 5;
  CHECK(SelectEquilibrium(pure_and_mixed, SelectionRule::kP1MaxPureFirst).kind ==
        EquilibriumKind::kPure);

  const std::vector<Equilibrium> single = {Eq(1, 0, 2, EquilibriumKind::kPure)};
  CHECK(SelectEquilibrium(single, SelectionRule::kP1MinPureFirst).p1 == 2);
  CHECK_THROWS_AS(SelectEquilibrium({}, SelectionRule::kFirstListed),
                  ContractViolation);
  for (SelectionRule r : kAllSelectionRules) {
    CHECK(ParseSelectionRule(ToString(r)) == r);
  }
}

TEST_CASE("complete information payoff") {
  const auto rule = SelectionRule::kP1MaxPureFirst;
  CHECK(CompleteInfoPayoff(M("[[4,2],[3,1]]"), M("[[2,4],[1,3]]"), rule) == 2);
  CHECK(CompleteInfoPayoff(M("[[1,2],[3,4]]"), M("[[1,2],[3,4]]"), rule) == 4);
}

}  // TEST_SUITE

}  // namespace
}  // namespace wronggame
