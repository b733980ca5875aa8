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


#include "wronggame/equilibrium.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wronggame {
namespace {

int Sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

constexpr std::array<std::string_view, 3> kSelectionNames = {
    "p1-max-pure-first", "p1-min-pure-first", "first-listed"};

}  // namespace

BilinearPayoff BilinearForm(const PayoffMatrix& m) {
  if (!m.is_2x2()) throw ContractViolation("bilinear form needs a 2x2 matrix");
  return {m(1, 1), m(0, 1) - m(1, 1), m(1, 0) - m(1, 1),
          m(0, 0) - m(0, 1) - m(1, 0) + m(1, 1)};
}

Breakpoint BreakpointOf(const PayoffMatrix& r) {
  const BilinearPayoff f = BilinearForm(r);
  Breakpoint out;
  if (f.cab != 0) {
    const Rational root = -f.cb / f.cab;
    if (root > 0 && root < 1) {
      out.a_star = root;
      // Slope is cab * (a - root).
      out.below = f.cab < 0 ? 1 : 0;
      out.above = f.cab < 0 ? 0 : 1;
      return out;
    }
  }
  if (f.cb == 0 && f.cab == 0) return out;
  // No sign change inside (0,1); the midpoint decides. A root sitting on an
  // endpoint leaves the interior sign intact.
  const int s = Sign(f.SlopeInB(Rational(1, 2)));
  out.below = out.above = s > 0 ? 1 : 0;
  return out;
}

Response BestResponseB(const PayoffMatrix& r, const SidedParam& a,
                       TieBreakRule rule, const PayoffMatrix& a_matrix) {
  const BilinearPayoff f = BilinearForm(r);
  const BilinearPayoff p1 = BilinearForm(a_matrix);
  const Rational& av = a.value();
  int s = Sign(f.SlopeInB(av));
  if (s == 0) {
    // Slope near av is cab * (a - av).
    if (a.side() == Side::kLeft) s = -Sign(f.cab);
    if (a.side() == Side::kRight) s = Sign(f.cab);
  }
  Rational b;
  if (s > 0) {
    b = 1;
  } else if (s < 0) {
    b = 0;
  } else {
    switch (rule) {
      case TieBreakRule::kPessimistic:
        b = p1(av, 1) < p1(av, 0) ? 1 : 0;
        break;
      case TieBreakRule::kOptimistic:
        b = p1(av, 1) > p1(av, 0) ? 1 : 0;
        break;
      case TieBreakRule::kUniform:
        b = Rational(1, 2);
        break;
      case TieBreakRule::kLowestIndex:
        b = 1;
        break;
    }
  }
  return {b, p1(av, b)};
}

std::vector<Equilibrium> NashEquilibria(const PayoffMatrix& a,
                                        const PayoffMatrix& b) {
  if (!a.is_2x2() || !b.is_2x2()) {
    throw ContractViolation("equilibrium search supports 2x2 games only");
  }
  std::vector<Equilibrium> out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (a(i, j) >= a(1 - i, j) && b(i, j) >= b(i, 1 - j)) {
        out.push_back({MixedStrategy::Pure(2, i), MixedStrategy::Pure(2, j),
                       a(i, j), b(i, j), EquilibriumKind::kPure});
      }
    }
  }
  const BilinearPayoff fa = BilinearForm(a);
  const BilinearPayoff fb = BilinearForm(b);
  if (fa.cab != 0 && fb.cab != 0) {
    // Each player mixes so that the other is indifferent.
    const Rational x1 = -fb.cb / fb.cab;
    const Rational y1 = -fa.ca / fa.cab;
    if (x1 > 0 && x1 < 1 && y1 > 0 && y1 < 1) {
      out.push_back({MixedStrategy::FromParam(x1), MixedStrategy::FromParam(y1),
                     fa(x1, y1), fb(x1, y1), EquilibriumKind::kMixed});
    }
  }
  if (out.empty() && StrictOrdinalMatrix::IsStrictOrdinal(a) &&
      StrictOrdinalMatrix::IsStrictOrdinal(b)) {
    throw std::logic_error("strict ordinal game without an equilibrium");
  }
  return out;
}

bool IsEquilibrium(const PayoffMatrix& a, const PayoffMatrix& b,
                   const MixedStrategy& x, const MixedStrategy& y) {
  const Rational p1 = Payoff(x, a, y);
  const Rational p2 = Payoff(x, b, y);
  for (int i = 0; i < a.rows(); ++i) {
    if (Payoff(MixedStrategy::Pure(a.rows(), i), a, y) > p1) return false;
  }
  for (int j = 0; j < b.cols(); ++j) {
    if (Payoff(x, b, MixedStrategy::Pure(b.cols(), j)) > p2) return false;
  }
  return true;
}

std::string_view ToString(SelectionRule rule) {
  return kSelectionNames[static_cast<std::size_t>(rule)];
}

SelectionRule ParseSelectionRule(std::string_view text) {
  for (std::size_t i = 0; i < kSelectionNames.size(); ++i) {
    if (kSelectionNames[i] == text) return static_cast<SelectionRule>(i);
  }
  throw std::invalid_argument("unknown selection rule '" + std::string(text) +
                              "'");
}

const Equilibrium& SelectEquilibrium(std::span<const Equilibrium> eqs,
                                     SelectionRule rule) {
  if (eqs.empty()) throw ContractViolation("no equilibria to select from");
  if (rule == SelectionRule::kFirstListed) return eqs.front();
  const bool any_pure = std::any_of(eqs.begin(), eqs.end(), [](const auto& e) {
    return e.kind == EquilibriumKind::kPure;
  });
  const Equilibrium* best = nullptr;
  for (const Equilibrium& e : eqs) {
    if (any_pure && e.kind != EquilibriumKind::kPure) continue;
    if (best == nullptr) {
      best = &e;
    } else if (rule == SelectionRule::kP1MaxPureFirst ? e.p1 > best->p1
                                                      : e.p1 < best->p1) {
      best = &e;
    }
  }
  return *best;
}

Rational CompleteInfoPayoff(const PayoffMatrix& a, const PayoffMatrix& r,
                            SelectionRule rule) {
  const auto eqs = NashEquilibria(a, r);
  return SelectEquilibrium(eqs, rule).p1;
}

}  // namespace wronggame
