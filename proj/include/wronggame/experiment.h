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


#ifndef WRONGGAME_EXPERIMENT_H_
#define WRONGGAME_EXPERIMENT_H_

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "wronggame/core_types.h"
#include "wronggame/ordinal_catalog.h"
#include "wronggame/robust_solvers.h"

namespace wronggame {

// Which member of each equivalence class is solved. The four cases treat the
// players asymmetrically, so the choice changes results.
enum class Representatives {
  kPublished,  // the published listing, item order
  kCanonical,  // lexicographically smallest orbit member, orbit-key order
};

enum class PerGameReduce { kMean, kMax };
enum class Population { kAllGames, kChangedGames };

struct AggregationProtocol {
  bool include_r_equals_b = false;
  PerGameReduce per_game_reduce = PerGameReduce::kMean;
  Population population = Population::kChangedGames;

  friend bool operator==(const AggregationProtocol&,
                         const AggregationProtocol&) = default;
};

struct BatchConfig {
  AggregationProtocol aggregation;
  SolverRules rules;
  Representatives representatives = Representatives::kPublished;

  friend bool operator==(const BatchConfig&, const BatchConfig&) = default;
};

std::string_view ToString(Representatives r);
std::string_view ToString(PerGameReduce r);
std::string_view ToString(Population p);
Representatives ParseRepresentatives(std::string_view text);
PerGameReduce ParsePerGameReduce(std::string_view text);
Population ParsePopulation(std::string_view text);
// Compact one-line description, e.g. "R=B:no mean changed | pessimistic ...".
std::string Describe(const BatchConfig& config);

struct LossRecord {
  int game_index;  // 1-based
  GameCase game_case;
  int r_index;     // position of R in the family of B
  Rational p1_complete;
  Rational p1_case;
  Rational loss_abs;
  Rational loss_rel;

  friend bool operator==(const LossRecord&, const LossRecord&) = default;
};

struct CaseSummary {
  GameCase game_case = GameCase::kEE;
  int no_change_count = 0;
  int changed_count = 0;
  Rational average_loss;
  Rational relative_average_loss;  // average_loss / complete_info_average
  Rational max_loss;
  Rational min_loss;
  int improved_records = 0;  // records with negative loss
};

struct Partition {
  std::vector<int> unchanged_all;  // zero loss everywhere
  std::vector<int> worse_all;      // some positive loss in every case
  std::vector<int> worse_only_ef;  // positive losses only in EF
};

struct BatchSummary {
  BatchConfig config;
  std::array<CaseSummary, 4> cases;
  Rational complete_info_average;
  Partition partition;

  const CaseSummary& at(GameCase c) const {
    return cases[static_cast<std::size_t>(c)];
  }
};

struct BatchResult {
  BatchSummary summary;
  std::vector<LossRecord> records;  // sorted by (game, case, r_index)
};

// The 78 games in evaluation order.
std::vector<BimatrixGame> ExperimentGames(Representatives r);

// One record per case and family member; R = B is skipped unless the
// protocol includes it.
std::vector<LossRecord> EvaluateGame(const BimatrixGame& g, int game_index,
                                     const BatchConfig& config);

BatchResult RunBatch(const BatchConfig& config);

BatchSummary Summarize(std::span<const LossRecord> records,
                       const BatchConfig& config,
                       const Rational& complete_info_average);

Partition PartitionObservations(std::span<const LossRecord> records);

enum class LossKind { kAbsolute, kRelative };
std::string_view ToString(LossKind k);
LossKind ParseLossKind(std::string_view text);

struct Histogram {
  GameCase game_case = GameCase::kEE;
  LossKind kind = LossKind::kAbsolute;
  std::vector<Rational> edges;  // bins + 1 ascending edges
  std::vector<int> counts;
  int underflow = 0;  // improvements, below the plotted range
  int overflow = 0;
};

// Bins the records of `c` whose loss is non-zero. Bins are [lo, hi) except
// the last, which is closed. Absolute losses span [0, 3], relative [0, 1].
// Throws ContractViolation when bins < 1.
Histogram MakeHistogram(std::span<const LossRecord> records, GameCase c,
                        LossKind kind, int bins = 12);

// Values reported for the published study.
struct PublishedTargets {
  std::array<int, 4> no_change = {44, 56, 44, 44};
  std::array<double, 4> average_loss = {1.8676, 1.7045, 1.3971, 0.9632};
  double complete_info_average = 3.481;
  double ee_relative_loss = 0.54;
  int unchanged_all = 22;
  int worse_all = 44;
  int worse_only_ef = 12;
};

struct ProtocolMatch {
  BatchSummary summary;
  std::array<int, 4> no_change_deviation{};
  std::array<double, 4> average_loss_deviation{};
  double complete_info_deviation = 0;
  double ee_relative_deviation = 0;
  std::array<int, 3> partition_deviation{};
  // Lower is closer. Counts add their absolute error; real-valued targets
  // add error / tolerance (0.02, or 0.01 for the relative loss).
  double score = 0;
};

ProtocolMatch ScoreAgainstPublished(const BatchSummary& summary,
                                    const PublishedTargets& targets = {});

struct SweepResult {
  std::vector<ProtocolMatch> rows;
  std::size_t best = 0;
};

// Every aggregation protocol under every selection rule, baseline, tie-break
// rule and choice of representatives.
std::vector<BatchConfig> SweepConfigs();
SweepResult ProtocolSweep();

// The configuration ProtocolSweep() ranks first.
BatchConfig PublishedProtocol();

// File formats.
nlohmann::json ToJson(const BatchSummary& summary);
BatchSummary BatchSummaryFromJson(const nlohmann::json& j);
void WriteLossRecordsCsv(std::span<const LossRecord> records, std::ostream& out);
// Throws ParseError with the 1-based line number as position.
std::vector<LossRecord> ReadLossRecordsCsv(std::istream& in);
void WriteHistogramCsv(const Histogram& h, std::ostream& out);
// Rows (bin_lo, bin_hi, count).
std::vector<std::tuple<Rational, Rational, int>> ReadHistogramCsv(
    std::istream& in);
void WriteSweepCsv(const SweepResult& sweep, std::ostream& out);

}  // namespace wronggame

#endif  // WRONGGAME_EXPERIMENT_H_
