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


#include "wronggame/core_types.h"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <utility>

namespace wronggame {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)),
      position_(position) {}

PayoffMatrix::PayoffMatrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 1 || cols < 1) {
    throw ContractViolation("payoff matrix needs at least one row and column");
  }
  if (entries_.size() != static_cast<std::size_t>(rows * cols)) {
    throw ContractViolation("payoff matrix entry count does not match shape");
  }
  for (const Rational& e : entries_) {
    if (e < 0) throw ContractViolation("payoff entries must be non-negative");
  }
}

PayoffMatrix PayoffMatrix::Square2(Rational m11, Rational m12, Rational m21,
                                   Rational m22) {
  return PayoffMatrix(2, 2, {m11, m12, m21, m22});
}

PayoffMatrix PayoffMatrix::Transposed() const {
  std::vector<Rational> t(entries_.size());
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      t[static_cast<std::size_t>(c * rows_ + r)] = (*this)(r, c);
    }
  }
  return PayoffMatrix(cols_, rows_, std::move(t));
}

StrictOrdinalMatrix::StrictOrdinalMatrix(std::array<int, 4> row_major)
    : values_(row_major) {
  std::array<int, 4> sorted = values_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 4>{1, 2, 3, 4}) {
    throw ContractViolation(
        "strict ordinal matrix must use each of 1, 2, 3, 4 exactly once");
  }
}

StrictOrdinalMatrix StrictOrdinalMatrix::FromColumnWise(
    std::array<int, 4> column_wise) {
  return StrictOrdinalMatrix(
      {column_wise[0], column_wise[2], column_wise[1], column_wise[3]});
}

bool StrictOrdinalMatrix::IsStrictOrdinal(const PayoffMatrix& m) {
  if (!m.is_2x2()) return false;
  std::array<Rational, 4> v;
  std::copy(m.entries().begin(), m.entries().end(), v.begin());
  std::sort(v.begin(), v.end());
  for (int i = 0; i < 4; ++i) {
    if (v[static_cast<std::size_t>(i)] != Rational(i + 1)) return false;
  }
  return true;
}

StrictOrdinalMatrix StrictOrdinalMatrix::FromPayoff(const PayoffMatrix& m) {
  if (!IsStrictOrdinal(m)) {
    throw ContractViolation("matrix " + FormatMatrix(m) +
                            " is not strict ordinal 2x2");
  }
  std::array<int, 4> v;
  for (std::size_t i = 0; i < 4; ++i) {
    v[i] = static_cast<int>(m.entries()[i].numerator());
  }
  return StrictOrdinalMatrix(v);
}

std::array<int, 4> StrictOrdinalMatrix::column_wise() const {
  return {values_[0], values_[2], values_[1], values_[3]};
}

PayoffMatrix StrictOrdinalMatrix::payoff() const {
  return PayoffMatrix::Square2(values_[0], values_[1], values_[2], values_[3]);
}

StrictOrdinalMatrix StrictOrdinalMatrix::Transposed() const {
  return StrictOrdinalMatrix({values_[0], values_[2], values_[1], values_[3]});
}

StrictOrdinalMatrix StrictOrdinalMatrix::RowsSwapped() const {
  return StrictOrdinalMatrix({values_[2], values_[3], values_[0], values_[1]});
}

StrictOrdinalMatrix StrictOrdinalMatrix::ColsSwapped() const {
  return StrictOrdinalMatrix({values_[1], values_[0], values_[3], values_[2]});
}

MixedStrategy::MixedStrategy(std::vector<Rational> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty()) throw ContractViolation("empty mixed strategy");
  Rational total = 0;
  for (const Rational& p : probs_) {
    if (p < 0 || p > 1) {
      throw ContractViolation("strategy component " + ToString(p) +
                              " outside [0,1]");
    }
    total += p;
  }
  if (total != 1) {
    throw ContractViolation("strategy components sum to " + ToString(total));
  }
}

MixedStrategy MixedStrategy::Pure(int size, int index) {
  if (index < 0 || index >= size) {
    throw ContractViolation("pure strategy index out of range");
  }
  std::vector<Rational> p(static_cast<std::size_t>(size), Rational(0));
  p[static_cast<std::size_t>(index)] = 1;
  return MixedStrategy(std::move(p));
}

MixedStrategy MixedStrategy::FromParam(const Rational& a) {
  return MixedStrategy({a, 1 - a});
}

bool MixedStrategy::is_pure() const {
  return std::count(probs_.begin(), probs_.end(), Rational(1)) == 1;
}

SidedParam::SidedParam(const Rational& v, Side side) : value_(v), side_(side) {
  if (v < 0 || v > 1) {
    throw ContractViolation("strategy parameter " + ToString(v) +
                            " outside [0,1]");
  }
  if (side == Side::kLeft && v == 0) {
    throw ContractViolation("left limit at 0 lies outside [0,1]");
  }
  if (side == Side::kRight && v == 1) {
    throw ContractViolation("right limit at 1 lies outside [0,1]");
  }
}

SidedParam SidedParam::Exact(const Rational& v) {
  return SidedParam(v, Side::kExact);
}
SidedParam SidedParam::LeftOf(const Rational& v) {
  return SidedParam(v, Side::kLeft);
}
SidedParam SidedParam::RightOf(const Rational& v) {
  return SidedParam(v, Side::kRight);
}

std::string ToString(const SidedParam& p) {
  switch (p.side()) {
    case Side::kExact:
      return ToString(p.value());
    case Side::kLeft:
      return ToString(p.value()) + "-";
    case Side::kRight:
      return ToString(p.value()) + "+";
  }
  return {};
}

GameFamily::GameFamily(std::array<StrictOrdinalMatrix, kSize> members)
    : members_(std::move(members)) {
  for (int k = 1; k <= 3; ++k) {
    if (members_[static_cast<std::size_t>(k)] != SwapAdjacent(members_[0], k)) {
      throw ContractViolation("family member " +
                              std::string(FamilyMemberName(k)) +
                              " is not the adjacent swap of B");
    }
  }
}

int GameFamily::IndexOf(const StrictOrdinalMatrix& m) const {
  for (int i = 0; i < kSize; ++i) {
    if (members_[static_cast<std::size_t>(i)] == m) return i;
  }
  return -1;
}

std::vector<PayoffMatrix> GameFamily::payoffs() const {
  std::vector<PayoffMatrix> out;
  out.reserve(kSize);
  for (const auto& m : members_) out.push_back(m.payoff());
  return out;
}

namespace {
constexpr std::array<std::string_view, 4> kMemberNames = {"B", "B12", "B23",
                                                          "B34"};
constexpr std::array<std::string_view, 4> kCaseNames = {"EE", "EF", "FE",
                                                        "FF"};
constexpr std::array<std::string_view, 4> kTieNames = {
    "pessimistic", "optimistic", "uniform", "lowest-index"};
}  // namespace

std::string_view FamilyMemberName(int index) {
  if (index < 0 || index >= GameFamily::kSize) {
    throw ContractViolation("family member index out of range");
  }
  return kMemberNames[static_cast<std::size_t>(index)];
}

int FamilyMemberIndex(std::string_view name) {
  for (std::size_t i = 0; i < kMemberNames.size(); ++i) {
    if (kMemberNames[i] == name) return static_cast<int>(i);
  }
  return -1;
}

std::string_view ToString(GameCase c) {
  return kCaseNames[static_cast<std::size_t>(c)];
}

GameCase ParseGameCase(std::string_view text) {
  for (std::size_t i = 0; i < kCaseNames.size(); ++i) {
    if (kCaseNames[i] == text) return static_cast<GameCase>(i);
  }
  throw std::invalid_argument("unknown game case '" + std::string(text) +
                              "' (expected EE, EF, FE or FF)");
}

std::string_view ToString(TieBreakRule rule) {
  return kTieNames[static_cast<std::size_t>(rule)];
}

TieBreakRule ParseTieBreakRule(std::string_view text) {
  for (std::size_t i = 0; i < kTieNames.size(); ++i) {
    if (kTieNames[i] == text) return static_cast<TieBreakRule>(i);
  }
  throw std::invalid_argument("unknown tie-break rule '" + std::string(text) +
                              "'");
}

Rational Payoff(const MixedStrategy& x, const PayoffMatrix& m,
                const MixedStrategy& y) {
  if (x.size() != m.rows() || y.size() != m.cols()) {
    throw ContractViolation("strategy dimensions do not conform to " +
                            std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + " matrix");
  }
  Rational total = 0;
  for (int r = 0; r < m.rows(); ++r) {
    if (x[r] == 0) continue;
    Rational row = 0;
    for (int c = 0; c < m.cols(); ++c) row += m(r, c) * y[c];
    total += x[r] * row;
  }
  return total;
}

StrictOrdinalMatrix SwapAdjacent(const StrictOrdinalMatrix& b, int k) {
  if (k < 1 || k > 3) {
    throw ContractViolation("adjacent swap index must be 1, 2 or 3, got " +
                            std::to_string(k));
  }
  std::array<int, 4> v = b.row_major();
  for (int& e : v) {
    if (e == k) {
      e = k + 1;
    } else if (e == k + 1) {
      e = k;
    }
  }
  return StrictOrdinalMatrix(v);
}

GameFamily FamilyOf(const StrictOrdinalMatrix& b) {
  return GameFamily(
      {b, SwapAdjacent(b, 1), SwapAdjacent(b, 2), SwapAdjacent(b, 3)});
}

namespace {

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  PayoffMatrix Parse() {
    std::vector<Rational> entries;
    int rows = 0;
    std::size_t cols = 0;
    Expect('[');
    do {
      SkipSpace();
      const std::size_t row_start = pos_;
      const std::vector<Rational> row = ParseRow();
      if (rows == 0) cols = row.size();
      if (row.size() != cols) {
        pos_ = row_start;
        Fail("ragged matrix rows");
      }
      entries.insert(entries.end(), row.begin(), row.end());
      ++rows;
    } while (Accept(','));
    Expect(']');
    SkipSpace();
    if (pos_ != text_.size()) Fail("trailing characters");
    try {
      return PayoffMatrix(rows, static_cast<int>(cols), std::move(entries));
    } catch (const ContractViolation& e) {
      Fail(e.what());
    }
  }

 private:
  std::vector<Rational> ParseRow() {
    std::vector<Rational> row;
    Expect('[');
    do {
      row.push_back(ParseEntry());
    } while (Accept(','));
    Expect(']');
    return row;
  }

  Rational ParseEntry() {
    SkipSpace();
    const std::size_t start = pos_;
    std::string token;
    while (pos_ < text_.size()) {
      const char ch = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++pos_;
        continue;
      }
      if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' ||
            ch == '-' || ch == '+')) {
        break;
      }
      token.push_back(ch);
      ++pos_;
    }
    if (token.empty()) {
      pos_ = start;
      Fail("expected a number");
    }
    try {
      return ParseRational(token);
    } catch (const std::invalid_argument& e) {
      pos_ = start;
      Fail(e.what());
    }
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool Accept(char ch) {
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void Expect(char ch) {
    if (!Accept(ch)) Fail(std::string("expected '") + ch + "'");
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw ParseError("matrix literal: " + what, pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PayoffMatrix ParseMatrixLiteral(std::string_view text) {
  return LiteralParser(text).Parse();
}

std::string FormatMatrix(const PayoffMatrix& m) {
  std::string out = "[";
  for (int r = 0; r < m.rows(); ++r) {
    out += r == 0 ? "[" : ",[";
    for (int c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ",";
      out += ToString(m(r, c));
    }
    out += "]";
  }
  return out + "]";
}

std::string FormatMatrix(const StrictOrdinalMatrix& m) {
  return FormatMatrix(m.payoff());
}

}  // namespace wronggame
