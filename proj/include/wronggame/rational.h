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

#ifndef WRONGGAME_RATIONAL_H_
#define WRONGGAME_RATIONAL_H_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace boost {

// Under C++20 rewritten comparisons, Boost 1.74's mixed rational/int
// operator== resolves to its own reversed form and recurses forever.
// Exact non-template overloads win overload resolution and break the cycle.
constexpr bool operator==(const rational<std::int64_t>& r, int i) {
  return r.denominator() == 1 && r.numerator() == i;
}
constexpr bool operator==(int i, const rational<std::int64_t>& r) {
  return r == i;
}
constexpr bool operator==(const rational<std::int64_t>& r, std::int64_t i) {
  return r.denominator() == 1 && r.numerator() == i;
}
constexpr bool operator==(std::int64_t i, const rational<std::int64_t>& r) {
  return r == i;
}

}  // namespace boost

namespace wronggame {

// All solver arithmetic is exact. Payoffs of 2x2 ordinal games, their
// breakpoints and envelope crossings stay tiny, so 64-bit parts suffice.
using Rational = boost::rational<std::int64_t>;

// "p/q", or "p" when the denominator is 1.
std::string ToString(const Rational& r);

// Fixed six-decimal rendering used in CSV and text reports.
std::string ToDecimal(const Rational& r, int places = 6);

double ToDouble(const Rational& r);

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
Rational ParseRational(std::string_view text);

}  // namespace wronggame

#endif  // WRONGGAME_RATIONAL_H_
