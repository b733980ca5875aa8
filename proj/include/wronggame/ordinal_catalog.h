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


#ifndef WRONGGAME_ORDINAL_CATALOG_H_
#define WRONGGAME_ORDINAL_CATALOG_H_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "wronggame/core_types.h"

namespace wronggame {

// Player 1 holds `a`, player 2 holds `b`.
struct BimatrixGame {
  StrictOrdinalMatrix a;
  StrictOrdinalMatrix b;

  friend bool operator==(const BimatrixGame&, const BimatrixGame&) = default;
};

// Column-wise encoding of A followed by B.
using OrbitKey = std::array<int, 8>;

OrbitKey EncodeColumnWise(const BimatrixGame& g);

// Lexicographically smallest member of a game's symmetry orbit.
struct CanonicalGame {
  BimatrixGame game;
  OrbitKey orbit_key;
};

// The 4! placements of 1..4 in a 2x2 matrix, ordered by column-wise encoding.
std::vector<StrictOrdinalMatrix> AllStrictOrdinalMatrices();

// Orbit of `g` under simultaneous row swap, simultaneous column swap and the
// player swap (A, B) -> (B^T, A^T). Distinct members, unordered.
std::vector<BimatrixGame> SymmetryOrbit(const BimatrixGame& g);

CanonicalGame CanonicalForm(const BimatrixGame& g);

// All 78 equivalence classes of strict ordinal 2x2 games, sorted by orbit key.
std::vector<CanonicalGame> EnumerateGames();

// "a1 a2 a3 a4 -- b1 b2 b3 b4", both matrices column-wise. Throws ParseError.
BimatrixGame ParseFig1(std::string_view text);
std::string EmitFig1(const BimatrixGame& g);

// One game per line in the listing format above. Blank lines and lines
// starting with '#' are skipped. Errors are prefixed with "line N:" (1-based) and
// keep the column position within that line.
std::vector<BimatrixGame> ParseFig1Listing(std::string_view text);

// The published 78-game listing, in its published order and with its own
// representatives. Solver results are not invariant under the player swap,
// so experiments that reproduce the published study evaluate these.
const std::vector<BimatrixGame>& PublishedListing();

// A catalog class together with where its published representative sits.
struct CatalogEntry {
  int index;           // 1-based position in orbit-key order
  CanonicalGame canonical;
  int listing_item;    // 1-based item number in PublishedListing()
  BimatrixGame listed; // the published representative
};

std::vector<CatalogEntry> Catalog();

}  // namespace wronggame

#endif  // WRONGGAME_ORDINAL_CATALOG_H_
