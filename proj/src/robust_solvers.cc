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


#include "wronggame/robust_solvers.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace wronggame {
namespace {

enum class Reduce { kMin, kMean };

constexpr std::array<std::string_view, 2> kBaselineNames = {"nash",
                                                            "commitment"};

std::vector<Rational> MemberValues(const PayoffMatrix& a,
                                   std::span<const PayoffMatrix> family,
                                   TieBreakRule tie, const SidedParam& p) {
  std::vector<Rational> v;
  v.reserve(family.size());
  for (const PayoffMatrix& m : family) {
    v.push_back(BestResponseB(m, p, tie, a).p1);
  }
  return v;
}

Rational Combine(const std::vector<Rational>& values, Reduce reduce) {
  if (reduce == Reduce::kMin) {
    return *std::min_element(values.begin(), values.end());
  }
  Rational total = 0;
  for (const Rational& v : values) total += v;
  return total / static_cast<std::int64_t>(values.size());
}

// True when candidate (a, value) should replace the incumbent: higher value,
// then attained over approached, then smaller a.
bool Better(const EnvelopeCandidate& c, const EnvelopeCandidate& best) {
  if (c.value != best.value) return c.value > best.value;
  if (c.a.exact() != best.a.exact()) return c.a.exact();
  return c.a.value() < best.a.value();
}

MaxMinResult EnvelopeOptimum(const PayoffMatrix& a,
                             std::span<const PayoffMatrix> family,
                             TieBreakRule tie, Reduce reduce) {
  if (family.empty()) throw ContractViolation("empty matrix family");
  const BilinearPayoff p1 = BilinearForm(a);

  MaxMinResult out;
  std::vector<Rational> points = {Rational(0), Rational(1)};
  for (const PayoffMatrix& m : family) {
    const Breakpoint bp = BreakpointOf(m);
    out.breakpoints.push_back(bp.a_star);
    if (bp.a_star) points.push_back(*bp.a_star);
    if (bp.indifferent_everywhere() && p1.cab != 0) {
      // The tie rule may flip b where the row player's own preference over
      // b flips.
      const Rational flip = -p1.cb / p1.cab;
      if (flip > 0 && flip < 1) points.push_back(flip);
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  std::vector<SidedParam> params;
  for (const Rational& p : points) params.push_back(SidedParam::Exact(p));
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const Rational& lo = points[i];
    const Rational& hi = points[i + 1];
    params.push_back(SidedParam::RightOf(lo));
    params.push_back(SidedParam::LeftOf(hi));
    // Inside (lo, hi) every member's response is fixed, so each member's
    // payoff is a line; the envelope can only peak where two lines cross.
    const SidedParam mid = SidedParam::Exact((lo + hi) / 2);
    std::vector<std::pair<Rational, Rational>> lines;  // (intercept, slope)
    for (const PayoffMatrix& m : family) {
      const Rational b = BestResponseB(m, mid, tie, a).b;
      lines.emplace_back(p1.c0 + p1.cb * b, p1.ca + p1.cab * b);
    }
    std::vector<Rational> crossings;
    for (std::size_t j = 0; j < lines.size(); ++j) {
      for (std::size_t k = j + 1; k < lines.size(); ++k) {
        if (lines[j].second == lines[k].second) continue;
        const Rational x = (lines[k].first - lines[j].first) /
                           (lines[j].second - lines[k].second);
        if (x > lo && x < hi) crossings.push_back(x);
      }
    }
    std::sort(crossings.begin(), crossings.end());
    crossings.erase(std::unique(crossings.begin(), crossings.end()),
                    crossings.end());
    for (const Rational& x : crossings) params.push_back(SidedParam::Exact(x));
  }

  out.candidates.reserve(params.size());
  for (const SidedParam& p : params) {
    out.candidates.push_back(
        {p, Combine(MemberValues(a, family, tie, p), reduce)});
  }
  const EnvelopeCandidate* best = &out.candidates.front();
  for (const auto& c : out.candidates) {
    if (Better(c, *best)) best = &c;
  }
  out.x = best->a;
  out.value = best->value;

  const auto at_x = MemberValues(a, family, tie, out.x);
  const Rational min_value = *std::min_element(at_x.begin(), at_x.end());
  for (std::size_t j = 0; j < at_x.size(); ++j) {
    if (reduce == Reduce::kMean || at_x[j] == min_value) {
      out.active_set.push_back(static_cast<int>(j));
    }
  }

  const Rational& v = out.x.value();
  out.exact_value =
      Combine(MemberValues(a, family, tie, SidedParam::Exact(v)), reduce);
  if (v > 0) {
    out.left_value =
        Combine(MemberValues(a, family, tie, SidedParam::LeftOf(v)), reduce);
  }
  if (v < 1) {
    out.right_value =
        Combine(MemberValues(a, family, tie, SidedParam::RightOf(v)), reduce);
  }
  return out;
}

std::array<Rational, 2> ColumnMix(const PayoffMatrix& a, const Rational& b) {
  return {a(0, 0) * b + a(0, 1) * (1 - b), a(1, 0) * b + a(1, 1) * (1 - b)};
}

}  // namespace

std::string_view ToString(Baseline b) {
  return kBaselineNames[static_cast<std::size_t>(b)];
}

Baseline ParseBaseline(std::string_view text) {
  for (std::size_t i = 0; i < kBaselineNames.size(); ++i) {
    if (kBaselineNames[i] == text) return static_cast<Baseline>(i);
  }
  throw std::invalid_argument("unknown baseline '" + std::string(text) +
                              "' (expected nash or commitment)");
}

MaxMinResult MaxMinOverVectors(
    std::span<const std::array<Rational, 2>> vectors) {
  if (vectors.empty()) throw ContractViolation("no payoff vectors");
  // x^T v = v[1] + (v[0] - v[1]) a.
  auto value_at = [&](const Rational& a, std::size_t j) {
    return vectors[j][1] + (vectors[j][0] - vectors[j][1]) * a;
  };
  std::vector<Rational> points = {Rational(0), Rational(1)};
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    for (std::size_t k = j + 1; k < vectors.size(); ++k) {
      const Rational dj = vectors[j][0] - vectors[j][1];
      const Rational dk = vectors[k][0] - vectors[k][1];
      if (dj == dk) continue;
      const Rational x = (vectors[k][1] - vectors[j][1]) / (dj - dk);
      if (x > 0 && x < 1) points.push_back(x);
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  MaxMinResult out;
  bool have_best = false;
  for (const Rational& a : points) {
    Rational v = value_at(a, 0);
    for (std::size_t j = 1; j < vectors.size(); ++j) v = std::min(v, value_at(a, j));
    out.candidates.push_back({SidedParam::Exact(a), v});
    // Points are ascending, so strict improvement keeps the smallest a.
    if (!have_best || v > out.value) {
      out.x = SidedParam::Exact(a);
      out.value = v;
      have_best = true;
    }
  }
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (value_at(out.x.value(), j) == out.value) {
      out.active_set.push_back(static_cast<int>(j));
    }
  }
  out.exact_value = out.value;
  return out;
}

MaxMinResult MFunction(const PayoffMatrix& a,
                       std::span<const PayoffMatrix> family, TieBreakRule tie) {
  return EnvelopeOptimum(a, family, tie, Reduce::kMin);
}

MaxMinResult MFunction(const StrictOrdinalMatrix& a, const GameFamily& family,
                       TieBreakRule tie) {
  const auto members = family.payoffs();
  return MFunction(a.payoff(), members, tie);
}

MaxMinResult AverageFamilyOptimum(const PayoffMatrix& a,
                                  std::span<const PayoffMatrix> family,
                                  TieBreakRule tie) {
  return EnvelopeOptimum(a, family, tie, Reduce::kMean);
}

MaxMinResult AverageFamilyOptimum(const StrictOrdinalMatrix& a,
                                  const GameFamily& family, TieBreakRule tie) {
  const auto members = family.payoffs();
  return AverageFamilyOptimum(a.payoff(), members, tie);
}

SidedParam BaselineStrategy(const PayoffMatrix& a, const PayoffMatrix& b,
                            const SolverRules& rules) {
  if (rules.baseline == Baseline::kCommitment) {
    return MFunction(a, std::span(&b, 1), rules.tie).x;
  }
  const auto eqs = NashEquilibria(a, b);
  return SidedParam::Exact(SelectEquilibrium(eqs, rules.selection).x[0]);
}

Rational BaselinePayoff(const PayoffMatrix& a, const PayoffMatrix& r,
                        const SolverRules& rules) {
  if (rules.baseline == Baseline::kCommitment) {
    return MFunction(a, std::span(&r, 1), rules.tie).value;
  }
  return CompleteInfoPayoff(a, r, rules.selection);
}

WrongGameSolver::WrongGameSolver(const StrictOrdinalMatrix& a,
                                 const StrictOrdinalMatrix& b,
                                 SolverRules rules)
    : a_(a.payoff()),
      family_(FamilyOf(b)),
      members_(family_.payoffs()),
      rules_(rules),
      x_exact_(BaselineStrategy(a_, members_[0], rules_)) {
  std::vector<std::array<Rational, 2>> vectors;
  for (const PayoffMatrix& m : members_) {
    vectors.push_back(
        ColumnMix(a_, BestResponseB(m, x_exact_, rules_.tie, a_).b));
  }
  fe_optimum_ = MaxMinOverVectors(vectors);
  m_ = MFunction(a_, members_, rules_.tie);
}

int WrongGameSolver::RequireMember(const StrictOrdinalMatrix& r) const {
  const int index = family_.IndexOf(r);
  if (index < 0) {
    std::string names;
    for (int i = 0; i < GameFamily::kSize; ++i) {
      names += (i ? ", " : "") + std::string(FamilyMemberName(i)) + "=" +
               FormatMatrix(family_[i]);
    }
    throw ContractViolation("matrix " + FormatMatrix(r) +
                            " is not in the family {" + names + "}");
  }
  return index;
}

Rational WrongGameSolver::CompletePayoff(int r_index) const {
  return BaselinePayoff(a_, members_.at(static_cast<std::size_t>(r_index)),
                        rules_);
}

CaseSolution WrongGameSolver::Solve(GameCase c, int r_index) const {
  if (r_index < 0 || r_index >= GameFamily::kSize) {
    throw ContractViolation("family index out of range");
  }
  switch (c) {
    case GameCase::kEE:
      return SolveEE(r_index);
    case GameCase::kEF:
      return SolveEF(r_index);
    case GameCase::kFE:
      return SolveFE(r_index);
    case GameCase::kFF:
      return SolveFF(r_index);
  }
  throw ContractViolation("unknown game case");
}

CaseSolution WrongGameSolver::Base(GameCase c) const {
  CaseSolution s;
  s.game_case = c;
  for (int j = 0; j < GameFamily::kSize; ++j) {
    s.breakpoints[static_cast<std::size_t>(j)] =
        BreakpointOf(members_[static_cast<std::size_t>(j)]).a_star;
  }
  return s;
}

CaseSolution WrongGameSolver::SolveEE(int r) const {
  CaseSolution s = Base(GameCase::kEE);
  const Response resp = BestResponseB(members_[static_cast<std::size_t>(r)],
                                      x_exact_, rules_.tie, a_);
  s.x_actual = x_exact_;
  s.y_actual = resp.b;
  s.p1 = resp.p1;
  return s;
}

CaseSolution WrongGameSolver::SolveFE(int r) const {
  // The column player still expects x_EE and answers it; the row player
  // hedges against every family member's answer to x_EE.
  CaseSolution s = Base(GameCase::kFE);
  const Response resp = BestResponseB(members_[static_cast<std::size_t>(r)],
                                      x_exact_, rules_.tie, a_);
  s.x_actual = fe_optimum_.x;
  s.y_actual = resp.b;
  s.p1 = BilinearForm(a_)(s.x_actual.value(), resp.b);
  s.optimizer = fe_optimum_;
  return s;
}

CaseSolution WrongGameSolver::SolveFF(int r) const {
  CaseSolution s = Base(GameCase::kFF);
  const Response resp =
      BestResponseB(members_[static_cast<std::size_t>(r)], m_.x, rules_.tie, a_);
  s.x_actual = m_.x;
  s.y_actual = resp.b;
  s.p1 = resp.p1;
  s.optimizer = m_;
  return s;
}

CaseSolution WrongGameSolver::SolveEF(int r) const {
  CaseSolution s = Base(GameCase::kEF);
  const Response resp =
      BestResponseB(members_[static_cast<std::size_t>(r)], m_.x, rules_.tie, a_);
  s.x_actual = x_exact_;
  s.x_model = m_.x;
  s.y_actual = resp.b;
  s.p1 = BilinearForm(a_)(x_exact_.value(), resp.b);
  s.optimizer = m_;
  return s;
}

CaseSolution SolveCase(GameCase c, const StrictOrdinalMatrix& a,
                       const StrictOrdinalMatrix& b,
                       const StrictOrdinalMatrix& r, const SolverRules& rules) {
  WrongGameSolver solver(a, b, rules);
  return solver.Solve(c, solver.RequireMember(r));
}

CaseSolution SolveEE(const StrictOrdinalMatrix& a, const StrictOrdinalMatrix& b,
                     const StrictOrdinalMatrix& r, const SolverRules& rules) {
  return SolveCase(GameCase::kEE, a, b, r, rules);
}
CaseSolution SolveFE(const StrictOrdinalMatrix& a, const StrictOrdinalMatrix& b,
                     const StrictOrdinalMatrix& r, const SolverRules& rules) {
  return SolveCase(GameCase::kFE, a, b, r, rules);
}
CaseSolution SolveFF(const StrictOrdinalMatrix& a, const StrictOrdinalMatrix& b,
                     const StrictOrdinalMatrix& r, const SolverRules& rules) {
  return SolveCase(GameCase::kFF, a, b, r, rules);
}
CaseSolution SolveEF(const StrictOrdinalMatrix& a, const StrictOrdinalMatrix& b,
                     const StrictOrdinalMatrix& r, const SolverRules& rules) {
  return SolveCase(GameCase::kEF, a, b, r, rules);
}

}  // namespace wronggame
