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


#ifndef WRONGGAME_ROBUST_SOLVERS_H_
#define WRONGGAME_ROBUST_SOLVERS_H_

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "wronggame/core_types.h"
#include "wronggame/equilibrium.h"

namespace wronggame {

// What the row player treats as "solving the game" when it knows the column
// player's matrix exactly.
enum class Baseline {
  // The selected Nash equilibrium of (A, B).
  kNash,
  // The row player's optimal commitment: maximize over x its payoff against
  // the column player's best response (the singleton-family envelope).
  kCommitment,
};
inline constexpr std::array<Baseline, 2> kAllBaselines = {Baseline::kNash,
                                                          Baseline::kCommitment};
std::string_view ToString(Baseline b);
Baseline ParseBaseline(std::string_view text);

struct SolverRules {
  TieBreakRule tie = TieBreakRule::kPessimistic;
  SelectionRule selection = SelectionRule::kP1MaxPureFirst;
  Baseline baseline = Baseline::kNash;

  friend bool operator==(const SolverRules&, const SolverRules&) = default;
};

struct EnvelopeCandidate {
  SidedParam a;
  Rational value;
};

struct MaxMinResult {
  SidedParam x = SidedParam::Exact(0);
  Rational value;
  // Family members (or vectors) attaining the minimum at x.
  std::vector<int> active_set;
  // Per family member; empty for MaxMinOverVectors.
  std::vector<std::optional<Rational>> breakpoints;
  std::vector<EnvelopeCandidate> candidates;
  // Envelope just left of, at, and just right of x.value(), when defined.
  std::optional<Rational> left_value;
  Rational exact_value;
  std::optional<Rational> right_value;
};

// max over x in the simplex of min_j x^T v_j for two-component vectors v_j.
// Ties go to the smaller first component of x. Throws ContractViolation on
// an empty list.
MaxMinResult MaxMinOverVectors(std::span<const std::array<Rational, 2>> vectors);

// Supremum over a in [0,1] of min_j P1(a, b_j(a)), where b_j is the column
// player's best response under family member j. Non-attained suprema are
// returned as one-sided parameters.
MaxMinResult MFunction(const PayoffMatrix& a,
                       std::span<const PayoffMatrix> family, TieBreakRule tie);
MaxMinResult MFunction(const StrictOrdinalMatrix& a, const GameFamily& family,
                       TieBreakRule tie);

// As MFunction, with the mean over the family in place of the minimum.
MaxMinResult AverageFamilyOptimum(const PayoffMatrix& a,
                                  std::span<const PayoffMatrix> family,
                                  TieBreakRule tie);
MaxMinResult AverageFamilyOptimum(const StrictOrdinalMatrix& a,
                                  const GameFamily& family, TieBreakRule tie);

// Row player's strategy when it trusts `b` exactly.
SidedParam BaselineStrategy(const PayoffMatrix& a, const PayoffMatrix& b,
                            const SolverRules& rules);
// Row player's payoff with complete information about `r`.
Rational BaselinePayoff(const PayoffMatrix& a, const PayoffMatrix& r,
                        const SolverRules& rules);

struct CaseSolution {
  GameCase game_case = GameCase::kEE;
  // Row player's parameter a in x = [a, 1-a] as actually played.
  SidedParam x_actual = SidedParam::Exact(0);
  // Column player's b in y = [b, 1-b].
  Rational y_actual;
  // Row payoff; the one-sided limit when x_actual is sided.
  Rational p1;
  // EF only: the strategy the column player believes it is facing.
  std::optional<SidedParam> x_model;
  // The optimizer behind x (FE, FF) or behind x_model (EF).
  std::optional<MaxMinResult> optimizer;
  // Breakpoints of B, B12, B23, B34.
  std::array<std::optional<Rational>, GameFamily::kSize> breakpoints;

  MixedStrategy x() const { return MixedStrategy::FromParam(x_actual.value()); }
  MixedStrategy y() const { return MixedStrategy::FromParam(y_actual); }
};

// Solves all four cases of one game, reusing the parts that do not depend on
// the column player's true matrix.
class WrongGameSolver {
 public:
  WrongGameSolver(const StrictOrdinalMatrix& a, const StrictOrdinalMatrix& b,
                  SolverRules rules = {});

  const GameFamily& family() const { return family_; }
  const SolverRules& rules() const { return rules_; }
  const SidedParam& x_exact() const { return x_exact_; }
  const MaxMinResult& family_optimum() const { return m_; }

  // `r_index` selects the true matrix: 0 = B, 1 = B12, 2 = B23, 3 = B34.
  CaseSolution Solve(GameCase c, int r_index) const;
  // Complete-information payoff against family member `r_index`.
  Rational CompletePayoff(int r_index) const;

  // Index of `r` in the family; throws ContractViolation naming the members
  // when absent.
  int RequireMember(const StrictOrdinalMatrix& r) const;

 private:
  CaseSolution SolveEE(int r) const;
  CaseSolution SolveFE(int r) const;
  CaseSolution SolveFF(int r) const;
  CaseSolution SolveEF(int r) const;
  CaseSolution Base(GameCase c) const;

  PayoffMatrix a_;
  GameFamily family_;
  std::vector<PayoffMatrix> members_;
  SolverRules rules_;
  SidedParam x_exact_;
  MaxMinResult fe_optimum_;
  MaxMinResult m_;
};

CaseSolution SolveEE(const StrictOrdinalMatrix& a, const StrictOrdinalMatrix& b,
                     const StrictOrdinalMatrix& r, const SolverRules& rules = {});
CaseSolution SolveFE(const StrictOrdinalMatrix& a, const StrictOrdinalMatrix& b,
                     const StrictOrdinalMatrix& r, const SolverRules& rules = {});
CaseSolution SolveFF(const StrictOrdinalMatrix& a, const StrictOrdinalMatrix& b,
                     const StrictOrdinalMatrix& r, const SolverRules& rules = {});
CaseSolution SolveEF(const StrictOrdinalMatrix& a, const StrictOrdinalMatrix& b,
                     const StrictOrdinalMatrix& r, const SolverRules& rules = {});
CaseSolution SolveCase(GameCase c, const StrictOrdinalMatrix& a,
                       const StrictOrdinalMatrix& b,
                       const StrictOrdinalMatrix& r,
                       const SolverRules& rules = {});

}  // namespace wronggame

#endif  // WRONGGAME_ROBUST_SOLVERS_H_
