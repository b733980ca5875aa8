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


#ifndef WRONGGAME_CORE_TYPES_H_
#define WRONGGAME_CORE_TYPES_H_

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wronggame/rational.h"

namespace wronggame {

// A precondition of a library call was not met by the caller.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed text input. `position` is the 0-based offset of the offending
// character (or the end of input).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Dense row-major matrix of non-negative rational payoffs.
class PayoffMatrix {
 public:
  PayoffMatrix(int rows, int cols, std::vector<Rational> entries);

  // 2x2 convenience constructor, entries given row by row.
  static PayoffMatrix Square2(Rational m11, Rational m12, Rational m21,
                              Rational m22);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rational& operator()(int r, int c) const {
    return entries_[static_cast<std::size_t>(r * cols_ + c)];
  }
  std::span<const Rational> entries() const { return entries_; }
  bool is_2x2() const { return rows_ == 2 && cols_ == 2; }

  PayoffMatrix Transposed() const;

  friend bool operator==(const PayoffMatrix&, const PayoffMatrix&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<Rational> entries_;
};

// A 2x2 matrix holding each of 1, 2, 3, 4 exactly once.
class StrictOrdinalMatrix {
 public:
  // Row-major values; throws ContractViolation unless a permutation of 1..4.
  explicit StrictOrdinalMatrix(std::array<int, 4> row_major);

  // Column-wise order m11, m21, m12, m22 as used by the catalog listing.
  static StrictOrdinalMatrix FromColumnWise(std::array<int, 4> column_wise);
  // Throws ContractViolation when `m` is not strict ordinal.
  static StrictOrdinalMatrix FromPayoff(const PayoffMatrix& m);
  static bool IsStrictOrdinal(const PayoffMatrix& m);

  int at(int r, int c) const { return values_[static_cast<std::size_t>(2 * r + c)]; }
  const std::array<int, 4>& row_major() const { return values_; }
  std::array<int, 4> column_wise() const;
  PayoffMatrix payoff() const;

  StrictOrdinalMatrix Transposed() const;
  StrictOrdinalMatrix RowsSwapped() const;
  StrictOrdinalMatrix ColsSwapped() const;

  friend bool operator==(const StrictOrdinalMatrix&,
                         const StrictOrdinalMatrix&) = default;
  friend auto operator<=>(const StrictOrdinalMatrix&,
                          const StrictOrdinalMatrix&) = default;

 private:
  std::array<int, 4> values_;
};

// A point of the probability simplex.
class MixedStrategy {
 public:
  // Throws ContractViolation unless every component is in [0,1] and they sum
  // to exactly 1.
  explicit MixedStrategy(std::vector<Rational> probs);

  static MixedStrategy Pure(int size, int index);
  // [a, 1-a]: the one-parameter form of a two-strategy mix.
  static MixedStrategy FromParam(const Rational& a);

  int size() const { return static_cast<int>(probs_.size()); }
  const Rational& operator[](int i) const {
    return probs_[static_cast<std::size_t>(i)];
  }
  std::span<const Rational> probs() const { return probs_; }
  bool is_pure() const;

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;

 private:
  std::vector<Rational> probs_;
};

// Which way a strategy parameter is approached. kLeft means the limit from
// below (a = v^-), kRight from above.
enum class Side { kExact, kLeft, kRight };

// A strategy parameter in [0,1], possibly a one-sided limit. Suprema that
// are approached but not attained carry a side tag.
class SidedParam {
 public:
  static SidedParam Exact(const Rational& v);
  static SidedParam LeftOf(const Rational& v);
  static SidedParam RightOf(const Rational& v);

  const Rational& value() const { return value_; }
  Side side() const { return side_; }
  bool exact() const { return side_ == Side::kExact; }

  friend bool operator==(const SidedParam&, const SidedParam&) = default;

 private:
  SidedParam(const Rational& v, Side side);
  Rational value_;
  Side side_;
};

// "1/2", "1/2-" or "1/2+".
std::string ToString(const SidedParam& p);

// The matrix B followed by its three adjacent-swap variants B12, B23, B34.
class GameFamily {
 public:
  static constexpr int kSize = 4;

  explicit GameFamily(std::array<StrictOrdinalMatrix, kSize> members);

  const StrictOrdinalMatrix& operator[](int i) const {
    return members_[static_cast<std::size_t>(i)];
  }
  const std::array<StrictOrdinalMatrix, kSize>& members() const {
    return members_;
  }
  // Position of `m` in the family, or -1.
  int IndexOf(const StrictOrdinalMatrix& m) const;
  std::vector<PayoffMatrix> payoffs() const;

 private:
  std::array<StrictOrdinalMatrix, kSize> members_;
};

// "B", "B12", "B23", "B34" for member indices 0..3.
std::string_view FamilyMemberName(int index);
// Inverse of FamilyMemberName; -1 when unknown.
int FamilyMemberIndex(std::string_view name);

enum class GameCase { kEE, kEF, kFE, kFF };
inline constexpr std::array<GameCase, 4> kAllCases = {
    GameCase::kEE, GameCase::kEF, GameCase::kFE, GameCase::kFF};
std::string_view ToString(GameCase c);
// Throws std::invalid_argument for anything but EE, EF, FE, FF.
GameCase ParseGameCase(std::string_view text);

// How player 2 resolves indifference between its two pure strategies.
enum class TieBreakRule { kPessimistic, kOptimistic, kUniform, kLowestIndex };
inline constexpr std::array<TieBreakRule, 4> kAllTieBreakRules = {
    TieBreakRule::kPessimistic, TieBreakRule::kOptimistic,
    TieBreakRule::kUniform, TieBreakRule::kLowestIndex};
std::string_view ToString(TieBreakRule rule);
TieBreakRule ParseTieBreakRule(std::string_view text);

// x^T M y, exactly. Throws ContractViolation on dimension mismatch.
Rational Payoff(const MixedStrategy& x, const PayoffMatrix& m,
                const MixedStrategy& y);

// Exchanges the ordinal values k and k+1, k in {1,2,3}.
StrictOrdinalMatrix SwapAdjacent(const StrictOrdinalMatrix& b, int k);

GameFamily FamilyOf(const StrictOrdinalMatrix& b);

// Matrix literal "[[a,b],[c,d]]" with integer or p/q entries. Whitespace is
// ignored. Any rectangular shape is accepted.
PayoffMatrix ParseMatrixLiteral(std::string_view text);
std::string FormatMatrix(const PayoffMatrix& m);
std::string FormatMatrix(const StrictOrdinalMatrix& m);

}  // namespace wronggame

#endif  // WRONGGAME_CORE_TYPES_H_
