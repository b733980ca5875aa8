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


#include "wronggame/ordinal_catalog.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <string>

namespace wronggame {
namespace {

// Published listing, items 1..78.
constexpr std::string_view kPublishedListing = R"(1 3 2 4 -- 1 3 2 4
4 1 2 3 -- 2 4 3 1
4 1 2 3 -- 3 1 2 4
4 1 2 3 -- 4 2 1 3
4 1 3 2 -- 1 3 4 2
4 1 3 2 -- 2 1 3 4
4 1 3 2 -- 2 4 3 1
4 1 3 2 -- 3 1 2 4
4 1 3 2 -- 3 4 2 1
4 1 3 2 -- 4 2 1 3
4 1 3 2 -- 4 3 1 2
4 2 1 3 -- 1 2 4 3
4 2 1 3 -- 1 3 4 2
4 2 1 3 -- 2 1 3 4
4 2 1 3 -- 2 3 4 1
4 2 1 3 -- 2 4 3 1
4 2 1 3 -- 3 1 2 4
4 2 1 3 -- 3 2 1 4
4 2 1 3 -- 3 4 2 1
4 2 1 3 -- 4 1 2 3
4 2 1 3 -- 4 2 1 3
4 2 1 3 -- 4 3 1 2
4 2 3 1 -- 1 2 3 4
4 2 3 1 -- 1 2 4 3
4 2 3 1 -- 1 3 4 2
4 2 3 1 -- 1 4 3 2
4 2 3 1 -- 2 1 3 4
4 2 3 1 -- 2 3 4 1
4 2 3 1 -- 2 4 3 1
4 2 3 1 -- 3 1 2 4
4 2 3 1 -- 3 2 1 4
4 2 3 1 -- 3 4 1 2
4 2 3 1 -- 3 4 2 1
4 2 3 1 -- 4 1 2 3
4 2 3 1 -- 4 2 1 3
4 2 3 1 -- 4 3 1 2
4 2 3 1 -- 4 3 2 1
4 3 1 2 -- 1 2 3 4
4 3 1 2 -- 1 2 4 3
4 3 1 2 -- 1 3 4 2
4 3 1 2 -- 1 4 3 2
4 3 1 2 -- 2 1 3 4
4 3 1 2 -- 2 1 4 3
4 3 1 2 -- 2 3 1 4
4 3 1 2 -- 2 3 4 1
4 3 1 2 -- 2 4 3 1
4 3 1 2 -- 3 1 2 4
4 3 1 2 -- 3 2 1 4
4 3 1 2 -- 3 2 4 1
4 3 1 2 -- 3 4 1 2
4 3 1 2 -- 3 4 2 1
4 3 1 2 -- 4 1 2 3
4 3 1 2 -- 4 1 3 2
4 3 1 2 -- 4 2 1 3
4 3 1 2 -- 4 3 1 2
4 3 1 2 -- 4 3 2 1
4 3 2 1 -- 1 2 3 4
4 3 2 1 -- 1 2 4 3
4 3 2 1 -- 1 3 2 4
4 3 2 1 -- 1 3 4 2
4 3 2 1 -- 1 4 2 3
4 3 2 1 -- 1 4 3 2
4 3 2 1 -- 2 1 3 4
4 3 2 1 -- 2 1 4 3
4 3 2 1 -- 2 3 1 4
4 3 2 1 -- 2 3 4 1
4 3 2 1 -- 2 4 3 1
4 3 2 1 -- 3 1 2 4
4 3 2 1 -- 3 1 4 2
4 3 2 1 -- 3 2 1 4
4 3 2 1 -- 3 2 4 1
4 3 2 1 -- 3 4 1 2
4 3 2 1 -- 3 4 2 1
4 3 2 1 -- 4 1 2 3
4 3 2 1 -- 4 1 3 2
4 3 2 1 -- 4 2 1 3
4 3 2 1 -- 4 2 3 1
4 3 2 1 -- 4 3 1 2
)";

BimatrixGame RowSwap(const BimatrixGame& g) {
  return {g.a.RowsSwapped(), g.b.RowsSwapped()};
}
BimatrixGame ColSwap(const BimatrixGame& g) {
  return {g.a.ColsSwapped(), g.b.ColsSwapped()};
}
BimatrixGame PlayerSwap(const BimatrixGame& g) {
  return {g.b.Transposed(), g.a.Transposed()};
}

}  // namespace

OrbitKey EncodeColumnWise(const BimatrixGame& g) {
  const auto a = g.a.column_wise();
  const auto b = g.b.column_wise();
  return {a[0], a[1], a[2], a[3], b[0], b[1], b[2], b[3]};
}

std::vector<StrictOrdinalMatrix> AllStrictOrdinalMatrices() {
  std::vector<StrictOrdinalMatrix> out;
  std::array<int, 4> perm = {1, 2, 3, 4};
  do {
    out.push_back(StrictOrdinalMatrix::FromColumnWise(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<BimatrixGame> SymmetryOrbit(const BimatrixGame& g) {
  std::vector<BimatrixGame> orbit = {g};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const BimatrixGame& next :
         {RowSwap(orbit[i]), ColSwap(orbit[i]), PlayerSwap(orbit[i])}) {
      if (std::find(orbit.begin(), orbit.end(), next) == orbit.end()) {
        orbit.push_back(next);
      }
    }
  }
  return orbit;
}

CanonicalGame CanonicalForm(const BimatrixGame& g) {
  const auto orbit = SymmetryOrbit(g);
  const BimatrixGame* best = &orbit.front();
  OrbitKey best_key = EncodeColumnWise(*best);
  for (const auto& member : orbit) {
    const OrbitKey key = EncodeColumnWise(member);
    if (key < best_key) {
      best_key = key;
      best = &member;
    }
  }
  return {*best, best_key};
}

std::vector<CanonicalGame> EnumerateGames() {
  std::map<OrbitKey, CanonicalGame> classes;
  const auto matrices = AllStrictOrdinalMatrices();
  for (const auto& a : matrices) {
    for (const auto& b : matrices) {
      CanonicalGame c = CanonicalForm({a, b});
      classes.emplace(c.orbit_key, std::move(c));
    }
  }
  std::vector<CanonicalGame> out;
  out.reserve(classes.size());
  for (auto& [key, game] : classes) out.push_back(std::move(game));
  return out;
}

BimatrixGame ParseFig1(std::string_view text) {
  std::array<int, 8> values{};
  std::size_t count = 0;
  bool seen_separator = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++pos;
    } else if (ch == '-') {
      if (pos + 1 >= text.size() || text[pos + 1] != '-') {
        throw ParseError("expected '--' separator", pos);
      }
      if (seen_separator || count != 4) {
        throw ParseError("separator must follow exactly 4 entries", pos);
      }
      seen_separator = true;
      pos += 2;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      if (pos + 1 < text.size() &&
          std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
        throw ParseError("entry out of range 1..4", pos);
      }
      const int v = ch - '0';
      if (v < 1 || v > 4) throw ParseError("entry out of range 1..4", pos);
      if (count == 8) throw ParseError("more than 8 entries", pos);
      if (count == 4 && !seen_separator) {
        throw ParseError("expected '--' after 4 entries", pos);
      }
      values[count++] = v;
      ++pos;
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "'", pos);
    }
  }
  if (count != 8) throw ParseError("expected 8 entries", pos);
  auto make = [&](std::size_t offset) {
    const std::array<int, 4> cw = {values[offset], values[offset + 1],
                                   values[offset + 2], values[offset + 3]};
    std::array<int, 4> sorted = cw;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 4>{1, 2, 3, 4}) {
      throw ParseError("matrix does not use each of 1..4 exactly once",
                       offset == 0 ? 0 : text.find("--"));
    }
    return StrictOrdinalMatrix::FromColumnWise(cw);
  };
  return {make(0), make(4)};
}

std::string EmitFig1(const BimatrixGame& g) {
  std::string out;
  const auto key = EncodeColumnWise(g);
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i == 4) out += " --";
    if (i > 0) out += ' ';
    out += static_cast<char>('0' + key[i]);
  }
  return out;
}

std::vector<BimatrixGame> ParseFig1Listing(std::string_view text) {
  std::vector<BimatrixGame> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    try {
      out.push_back(ParseFig1(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(),
                       e.position());
    }
  }
  return out;
}

const std::vector<BimatrixGame>& PublishedListing() {
  static const std::vector<BimatrixGame> listing =
      ParseFig1Listing(kPublishedListing);
  return listing;
}

std::vector<CatalogEntry> Catalog() {
  const auto games = EnumerateGames();
  const auto& listing = PublishedListing();
  std::vector<CatalogEntry> out;
  out.reserve(games.size());
  for (std::size_t i = 0; i < games.size(); ++i) {
    CatalogEntry entry{static_cast<int>(i + 1), games[i], 0, games[i].game};
    for (std::size_t j = 0; j < listing.size(); ++j) {
      if (CanonicalForm(listing[j]).orbit_key == games[i].orbit_key) {
        entry.listing_item = static_cast<int>(j + 1);
        entry.listed = listing[j];
        break;
      }
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace wronggame
