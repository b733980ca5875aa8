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


#ifndef WRONGGAME_EQUILIBRIUM_H_
#define WRONGGAME_EQUILIBRIUM_H_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "wronggame/core_types.h"

namespace wronggame {

// x^T M y for x = [a, 1-a], y = [b, 1-b], written c0 + ca*a + cb*b + cab*a*b.
struct BilinearPayoff {
  Rational c0;
  Rational ca;
  Rational cb;
  Rational cab;

  Rational operator()(const Rational& a, const Rational& b) const {
    return c0 + ca * a + cb * b + cab * a * b;
  }
  // Coefficient of b once a is fixed: the column player's incentive to play
  // its first strategy.
  Rational SlopeInB(const Rational& a) const { return cb + cab * a; }
  // Coefficient of a once b is fixed.
  Rational SlopeInA(const Rational& b) const { return ca + cab * b; }

  friend bool operator==(const BilinearPayoff&, const BilinearPayoff&) = default;
};

// Throws ContractViolation unless `m` is 2x2. The form is the same whichever
// player owns `m`; only the variable being optimized differs.
BilinearPayoff BilinearForm(const PayoffMatrix& m);

// Where the column player's best response to x = [a, 1-a] switches.
struct Breakpoint {
  // Root of SlopeInB in the open interval (0,1), if any.
  std::optional<Rational> a_star;
  // Best response b for a < a_star and a > a_star. Without a root both hold
  // the constant response; both are empty when the player is indifferent
  // for every a.
  std::optional<int> below;
  std::optional<int> above;

  bool indifferent_everywhere() const { return !below.has_value(); }
};

Breakpoint BreakpointOf(const PayoffMatrix& r);

struct Response {
  Rational b;   // column player's weight on its first strategy
  Rational p1;  // row player's payoff (limit value for sided a)
};

// Column player's best response under `r` to the row player's parameter `a`.
// Indifference is settled by `rule`, evaluated on the row player's matrix
// `a_matrix`. For a one-sided `a` the response is the one that holds on the
// adjacent open side of a.value().
Response BestResponseB(const PayoffMatrix& r, const SidedParam& a,
                       TieBreakRule rule, const PayoffMatrix& a_matrix);

enum class EquilibriumKind { kPure, kMixed };

struct Equilibrium {
  MixedStrategy x;
  MixedStrategy y;
  Rational p1;
  Rational p2;
  EquilibriumKind kind;
};

// All pure equilibria (row-major cell order) followed by the isolated fully
// mixed equilibrium when one exists.
std::vector<Equilibrium> NashEquilibria(const PayoffMatrix& a,
                                        const PayoffMatrix& b);

// True when neither player gains from a pure deviation.
bool IsEquilibrium(const PayoffMatrix& a, const PayoffMatrix& b,
                   const MixedStrategy& x, const MixedStrategy& y);

enum class SelectionRule {
  kP1MaxPureFirst,  // prefer pure, then highest p1, then list order
  kP1MinPureFirst,  // prefer pure, then lowest p1, then list order
  kFirstListed,
};
inline constexpr std::array<SelectionRule, 3> kAllSelectionRules = {
    SelectionRule::kP1MaxPureFirst, SelectionRule::kP1MinPureFirst,
    SelectionRule::kFirstListed};
std::string_view ToString(SelectionRule rule);
SelectionRule ParseSelectionRule(std::string_view text);

// Throws ContractViolation on an empty list.
const Equilibrium& SelectEquilibrium(std::span<const Equilibrium> eqs,
                                     SelectionRule rule);

// Row player's payoff at the selected equilibrium of (a, r).
Rational CompleteInfoPayoff(const PayoffMatrix& a, const PayoffMatrix& r,
                            SelectionRule rule);

}  // namespace wronggame

#endif  // WRONGGAME_EQUILIBRIUM_H_
