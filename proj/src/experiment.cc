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


#include "wronggame/experiment.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace wronggame {
namespace {

constexpr std::array<std::string_view, 2> kRepresentativesNames = {"published",
                                                                   "canonical"};
constexpr std::array<std::string_view, 2> kReduceNames = {"mean", "max"};
constexpr std::array<std::string_view, 2> kPopulationNames = {"all", "changed"};
constexpr std::array<std::string_view, 2> kLossKindNames = {"absolute",
                                                            "relative"};

template <typename Enum, std::size_t N>
Enum ParseName(std::string_view text,
               const std::array<std::string_view, N>& names,
               std::string_view what) {
  for (std::size_t i = 0; i < N; ++i) {
    if (names[i] == text) return static_cast<Enum>(i);
  }
  throw std::invalid_argument("unknown " + std::string(what) + " '" +
                              std::string(text) + "'");
}

std::size_t CaseSlot(GameCase c) { return static_cast<std::size_t>(c); }

nlohmann::json RationalJson(const Rational& r) {
  return {{"exact", ToString(r)}, {"decimal", std::stod(ToDecimal(r))}};
}

Rational RationalFromJson(const nlohmann::json& j) {
  return ParseRational(j.at("exact").get<std::string>());
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

std::string_view ToString(Representatives r) {
  return kRepresentativesNames[static_cast<std::size_t>(r)];
}
std::string_view ToString(PerGameReduce r) {
  return kReduceNames[static_cast<std::size_t>(r)];
}
std::string_view ToString(Population p) {
  return kPopulationNames[static_cast<std::size_t>(p)];
}
std::string_view ToString(LossKind k) {
  return kLossKindNames[static_cast<std::size_t>(k)];
}
Representatives ParseRepresentatives(std::string_view text) {
  return ParseName<Representatives>(text, kRepresentativesNames,
                                    "representatives");
}
PerGameReduce ParsePerGameReduce(std::string_view text) {
  return ParseName<PerGameReduce>(text, kReduceNames, "per-game reduction");
}
Population ParsePopulation(std::string_view text) {
  return ParseName<Population>(text, kPopulationNames, "population");
}
LossKind ParseLossKind(std::string_view text) {
  return ParseName<LossKind>(text, kLossKindNames, "loss kind");
}

std::string Describe(const BatchConfig& config) {
  std::string out = "include-b=";
  out += config.aggregation.include_r_equals_b ? "yes" : "no";
  out += " reduce=" + std::string(ToString(config.aggregation.per_game_reduce));
  out += " population=" + std::string(ToString(config.aggregation.population));
  out += " baseline=" + std::string(ToString(config.rules.baseline));
  out += " selection=" + std::string(ToString(config.rules.selection));
  out += " tie=" + std::string(ToString(config.rules.tie));
  out += " games=" + std::string(ToString(config.representatives));
  return out;
}

std::vector<BimatrixGame> ExperimentGames(Representatives r) {
  if (r == Representatives::kPublished) return PublishedListing();
  std::vector<BimatrixGame> out;
  for (const auto& c : EnumerateGames()) out.push_back(c.game);
  return out;
}

std::vector<LossRecord> EvaluateGame(const BimatrixGame& g, int game_index,
                                     const BatchConfig& config) {
  std::vector<LossRecord> out;
  try {
    const WrongGameSolver solver(g.a, g.b, config.rules);
    const int first_r = config.aggregation.include_r_equals_b ? 0 : 1;
    for (GameCase c : kAllCases) {
      for (int r = first_r; r < GameFamily::kSize; ++r) {
        const Rational complete = solver.CompletePayoff(r);
        const Rational p1 = solver.Solve(c, r).p1;
        const Rational loss = complete - p1;
        out.push_back({game_index, c, r, complete, p1, loss, loss / complete});
      }
    }
  } catch (const std::exception& e) {
    throw std::runtime_error("evaluating game " + std::to_string(game_index) +
                             " (" + EmitFig1(g) + "): " + e.what());
  }
  return out;
}

Partition PartitionObservations(std::span<const LossRecord> records) {
  struct Flags {
    bool changed = false;
    std::array<bool, 4> worse{};
  };
  std::map<int, Flags> games;
  for (const LossRecord& r : records) {
    Flags& f = games[r.game_index];
    if (r.loss_abs != 0) f.changed = true;
    if (r.loss_abs > 0) f.worse[CaseSlot(r.game_case)] = true;
  }
  Partition p;
  const std::size_t ef = CaseSlot(GameCase::kEF);
  for (const auto& [index, f] : games) {
    if (!f.changed) p.unchanged_all.push_back(index);
    if (std::all_of(f.worse.begin(), f.worse.end(), [](bool w) { return w; })) {
      p.worse_all.push_back(index);
    }
    bool others = false;
    for (std::size_t c = 0; c < 4; ++c) {
      if (c != ef && f.worse[c]) others = true;
    }
    if (f.worse[ef] && !others) p.worse_only_ef.push_back(index);
  }
  return p;
}

BatchSummary Summarize(std::span<const LossRecord> records,
                       const BatchConfig& config,
                       const Rational& complete_info_average) {
  BatchSummary s;
  s.config = config;
  s.complete_info_average = complete_info_average;
  for (GameCase c : kAllCases) {
    CaseSummary& cs = s.cases[CaseSlot(c)];
    cs.game_case = c;
    std::map<int, std::vector<Rational>> per_game;
    bool first = true;
    for (const LossRecord& r : records) {
      if (r.game_case != c) continue;
      per_game[r.game_index].push_back(r.loss_abs);
      if (first || r.loss_abs > cs.max_loss) cs.max_loss = r.loss_abs;
      if (first || r.loss_abs < cs.min_loss) cs.min_loss = r.loss_abs;
      if (r.loss_abs < 0) ++cs.improved_records;
      first = false;
    }
    Rational total = 0;
    std::int64_t population = 0;
    for (const auto& [index, losses] : per_game) {
      const bool changed = std::any_of(losses.begin(), losses.end(),
                                       [](const Rational& l) { return l != 0; });
      changed ? ++cs.changed_count : ++cs.no_change_count;
      if (!changed && config.aggregation.population == Population::kChangedGames) {
        continue;
      }
      Rational value;
      if (config.aggregation.per_game_reduce == PerGameReduce::kMax) {
        value = *std::max_element(losses.begin(), losses.end());
      } else {
        for (const Rational& l : losses) value += l;
        value /= static_cast<std::int64_t>(losses.size());
      }
      total += value;
      ++population;
    }
    cs.average_loss = population > 0 ? total / population : Rational(0);
    cs.relative_average_loss = complete_info_average != 0
                                   ? cs.average_loss / complete_info_average
                                   : Rational(0);
  }
  s.partition = PartitionObservations(records);
  return s;
}

BatchResult RunBatch(const BatchConfig& config) {
  const auto games = ExperimentGames(config.representatives);
  BatchResult result;
  Rational complete_total = 0;
  for (std::size_t i = 0; i < games.size(); ++i) {
    auto records = EvaluateGame(games[i], static_cast<int>(i + 1), config);
    result.records.insert(result.records.end(), records.begin(), records.end());
    complete_total += BaselinePayoff(games[i].a.payoff(), games[i].b.payoff(),
                                     config.rules);
  }
  std::sort(result.records.begin(), result.records.end(),
            [](const LossRecord& x, const LossRecord& y) {
              return std::tie(x.game_index, x.game_case, x.r_index) <
                     std::tie(y.game_index, y.game_case, y.r_index);
            });
  result.summary =
      Summarize(result.records, config,
                complete_total / static_cast<std::int64_t>(games.size()));
  return result;
}

Histogram MakeHistogram(std::span<const LossRecord> records, GameCase c,
                        LossKind kind, int bins) {
  if (bins < 1) throw ContractViolation("histogram needs at least one bin");
  Histogram h;
  h.game_case = c;
  h.kind = kind;
  const Rational upper = kind == LossKind::kAbsolute ? Rational(3) : Rational(1);
  for (int i = 0; i <= bins; ++i) h.edges.push_back(upper * i / bins);
  h.counts.assign(static_cast<std::size_t>(bins), 0);
  for (const LossRecord& r : records) {
    if (r.game_case != c || r.loss_abs == 0) continue;
    const Rational& v = kind == LossKind::kAbsolute ? r.loss_abs : r.loss_rel;
    if (v < 0) {
      ++h.underflow;
    } else if (v > upper) {
      ++h.overflow;
    } else {
      // floor(v / width), with the top edge folded into the last bin.
      const Rational scaled = v * bins / upper;
      std::int64_t bin = scaled.numerator() / scaled.denominator();
      bin = std::min<std::int64_t>(bin, bins - 1);
      ++h.counts[static_cast<std::size_t>(bin)];
    }
  }
  return h;
}

ProtocolMatch ScoreAgainstPublished(const BatchSummary& summary,
                                    const PublishedTargets& targets) {
  ProtocolMatch m;
  m.summary = summary;
  for (std::size_t i = 0; i < 4; ++i) {
    const CaseSummary& cs = summary.cases[i];
    m.no_change_deviation[i] = cs.no_change_count - targets.no_change[i];
    m.average_loss_deviation[i] =
        ToDouble(cs.average_loss) - targets.average_loss[i];
    m.score += std::abs(m.no_change_deviation[i]) +
               std::abs(m.average_loss_deviation[i]) / 0.02;
  }
  m.complete_info_deviation =
      ToDouble(summary.complete_info_average) - targets.complete_info_average;
  m.ee_relative_deviation =
      ToDouble(summary.at(GameCase::kEE).relative_average_loss) -
      targets.ee_relative_loss;
  m.partition_deviation = {
      static_cast<int>(summary.partition.unchanged_all.size()) -
          targets.unchanged_all,
      static_cast<int>(summary.partition.worse_all.size()) - targets.worse_all,
      static_cast<int>(summary.partition.worse_only_ef.size()) -
          targets.worse_only_ef};
  m.score += std::abs(m.complete_info_deviation) / 0.02 +
             std::abs(m.ee_relative_deviation) / 0.01;
  for (int d : m.partition_deviation) m.score += std::abs(d);
  return m;
}

std::vector<BatchConfig> SweepConfigs() {
  std::vector<BatchConfig> out;
  for (Representatives reps :
       {Representatives::kPublished, Representatives::kCanonical}) {
    for (Baseline baseline : kAllBaselines) {
      for (SelectionRule selection : kAllSelectionRules) {
        for (TieBreakRule tie : kAllTieBreakRules) {
          for (bool include_b : {false, true}) {
            for (PerGameReduce reduce :
                 {PerGameReduce::kMean, PerGameReduce::kMax}) {
              for (Population pop :
                   {Population::kChangedGames, Population::kAllGames}) {
                out.push_back({{include_b, reduce, pop},
                               {tie, selection, baseline},
                               reps});
              }
            }
          }
        }
      }
    }
  }
  return out;
}

SweepResult ProtocolSweep() {
  SweepResult result;
  // Solver output depends only on rules and representatives; the eight
  // aggregation protocols re-summarize one evaluation that keeps R = B.
  std::map<std::tuple<int, int, int, int>, BatchResult> evaluated;
  for (const BatchConfig& config : SweepConfigs()) {
    const auto key = std::make_tuple(static_cast<int>(config.representatives),
                                     static_cast<int>(config.rules.baseline),
                                     static_cast<int>(config.rules.selection),
                                     static_cast<int>(config.rules.tie));
    auto it = evaluated.find(key);
    if (it == evaluated.end()) {
      BatchConfig full = config;
      full.aggregation.include_r_equals_b = true;
      it = evaluated.emplace(key, RunBatch(full)).first;
    }
    std::vector<LossRecord> records;
    for (const LossRecord& r : it->second.records) {
      if (config.aggregation.include_r_equals_b || r.r_index != 0) {
        records.push_back(r);
      }
    }
    result.rows.push_back(ScoreAgainstPublished(Summarize(
        records, config, it->second.summary.complete_info_average)));
  }
  for (std::size_t i = 1; i < result.rows.size(); ++i) {
    if (result.rows[i].score < result.rows[result.best].score) result.best = i;
  }
  return result;
}

BatchConfig PublishedProtocol() {
  // Frozen copy of ProtocolSweep()'s top row; a test keeps the two in sync.
  BatchConfig config;
  config.aggregation = {false, PerGameReduce::kMax, Population::kChangedGames};
  config.rules = {TieBreakRule::kPessimistic, SelectionRule::kP1MaxPureFirst,
                  Baseline::kCommitment};
  config.representatives = Representatives::kCanonical;
  return config;
}

nlohmann::json ToJson(const BatchSummary& s) {
  nlohmann::json j;
  const BatchConfig& c = s.config;
  j["protocol"] = {
      {"include_r_equals_b", c.aggregation.include_r_equals_b},
      {"per_game_reduce", ToString(c.aggregation.per_game_reduce)},
      {"population", ToString(c.aggregation.population)},
      {"baseline", ToString(c.rules.baseline)},
      {"selection", ToString(c.rules.selection)},
      {"tie_break", ToString(c.rules.tie)},
      {"representatives", ToString(c.representatives)},
      {"is_published_protocol", c == PublishedProtocol()},
  };
  j["complete_info_average"] = RationalJson(s.complete_info_average);
  j["cases"] = nlohmann::json::array();
  for (const CaseSummary& cs : s.cases) {
    j["cases"].push_back({
        {"case", ToString(cs.game_case)},
        {"no_change_count", cs.no_change_count},
        {"changed_count", cs.changed_count},
        {"average_loss", RationalJson(cs.average_loss)},
        {"relative_average_loss", RationalJson(cs.relative_average_loss)},
        {"max_loss", RationalJson(cs.max_loss)},
        {"min_loss", RationalJson(cs.min_loss)},
        {"improved_records", cs.improved_records},
    });
  }
  j["partition"] = {
      {"unchanged_all", s.partition.unchanged_all},
      {"worse_all", s.partition.worse_all},
      {"worse_only_EF", s.partition.worse_only_ef},
  };
  return j;
}

BatchSummary BatchSummaryFromJson(const nlohmann::json& j) {
  BatchSummary s;
  const auto& p = j.at("protocol");
  s.config.aggregation.include_r_equals_b =
      p.at("include_r_equals_b").get<bool>();
  s.config.aggregation.per_game_reduce =
      ParsePerGameReduce(p.at("per_game_reduce").get<std::string>());
  s.config.aggregation.population =
      ParsePopulation(p.at("population").get<std::string>());
  s.config.rules.baseline = ParseBaseline(p.at("baseline").get<std::string>());
  s.config.rules.selection =
      ParseSelectionRule(p.at("selection").get<std::string>());
  s.config.rules.tie = ParseTieBreakRule(p.at("tie_break").get<std::string>());
  s.config.representatives =
      ParseRepresentatives(p.at("representatives").get<std::string>());
  s.complete_info_average = RationalFromJson(j.at("complete_info_average"));
  const auto& cases = j.at("cases");
  if (cases.size() != 4) throw std::invalid_argument("expected 4 cases");
  for (const auto& cj : cases) {
    const GameCase c = ParseGameCase(cj.at("case").get<std::string>());
    CaseSummary& cs = s.cases[CaseSlot(c)];
    cs.game_case = c;
    cs.no_change_count = cj.at("no_change_count").get<int>();
    cs.changed_count = cj.at("changed_count").get<int>();
    cs.average_loss = RationalFromJson(cj.at("average_loss"));
    cs.relative_average_loss = RationalFromJson(cj.at("relative_average_loss"));
    cs.max_loss = RationalFromJson(cj.at("max_loss"));
    cs.min_loss = RationalFromJson(cj.at("min_loss"));
    cs.improved_records = cj.at("improved_records").get<int>();
  }
  const auto& part = j.at("partition");
  s.partition.unchanged_all = part.at("unchanged_all").get<std::vector<int>>();
  s.partition.worse_all = part.at("worse_all").get<std::vector<int>>();
  s.partition.worse_only_ef = part.at("worse_only_EF").get<std::vector<int>>();
  return s;
}

namespace {
constexpr std::string_view kLossHeader =
    "game_index,case,r_index,p1_complete,p1_case,loss_abs,loss_rel,"
    "p1_complete_dec,p1_case_dec,loss_abs_dec,loss_rel_dec";
constexpr std::string_view kHistHeader = "bin_lo,bin_hi,count";
}  // namespace

void WriteLossRecordsCsv(std::span<const LossRecord> records,
                         std::ostream& out) {
  out << kLossHeader << '\n';
  for (const LossRecord& r : records) {
    out << r.game_index << ',' << ToString(r.game_case) << ',' << r.r_index
        << ',' << ToString(r.p1_complete) << ',' << ToString(r.p1_case) << ','
        << ToString(r.loss_abs) << ',' << ToString(r.loss_rel) << ','
        << ToDecimal(r.p1_complete) << ',' << ToDecimal(r.p1_case) << ','
        << ToDecimal(r.loss_abs) << ',' << ToDecimal(r.loss_rel) << '\n';
  }
}

std::vector<LossRecord> ReadLossRecordsCsv(std::istream& in) {
  std::vector<LossRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1) {
      if (line != kLossHeader) throw ParseError("unexpected CSV header", 1);
      continue;
    }
    if (line.empty()) continue;
    const auto f = SplitCsvLine(line);
    if (f.size() != 11) throw ParseError("expected 11 columns", line_no);
    try {
      LossRecord r{std::stoi(f[0]), ParseGameCase(f[1]), std::stoi(f[2]),
                   ParseRational(f[3]), ParseRational(f[4]),
                   ParseRational(f[5]), ParseRational(f[6])};
      out.push_back(r);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return out;
}

void WriteHistogramCsv(const Histogram& h, std::ostream& out) {
  out << kHistHeader << '\n';
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    out << ToString(h.edges[i]) << ',' << ToString(h.edges[i + 1]) << ','
        << h.counts[i] << '\n';
  }
}

std::vector<std::tuple<Rational, Rational, int>> ReadHistogramCsv(
    std::istream& in) {
  std::vector<std::tuple<Rational, Rational, int>> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1) {
      if (line != kHistHeader) throw ParseError("unexpected CSV header", 1);
      continue;
    }
    if (line.empty()) continue;
    const auto f = SplitCsvLine(line);
    if (f.size() != 3) throw ParseError("expected 3 columns", line_no);
    try {
      out.emplace_back(ParseRational(f[0]), ParseRational(f[1]),
                       std::stoi(f[2]));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return out;
}

void WriteSweepCsv(const SweepResult& sweep, std::ostream& out) {
  out << "best,score,include_r_equals_b,per_game_reduce,population,baseline,"
         "selection,tie_break,representatives,no_change_EE,no_change_EF,"
         "no_change_FE,no_change_FF,avg_loss_EE,avg_loss_EF,avg_loss_FE,"
         "avg_loss_FF,complete_info_average,ee_relative_loss,unchanged_all,"
         "worse_all,worse_only_EF\n";
  char score[32];
  for (std::size_t i = 0; i < sweep.rows.size(); ++i) {
    const ProtocolMatch& m = sweep.rows[i];
    const BatchSummary& s = m.summary;
    const BatchConfig& c = s.config;
    std::snprintf(score, sizeof(score), "%.4f", m.score);
    out << (i == sweep.best ? 1 : 0) << ',' << score << ','
        << (c.aggregation.include_r_equals_b ? 1 : 0) << ','
        << ToString(c.aggregation.per_game_reduce) << ','
        << ToString(c.aggregation.population) << ','
        << ToString(c.rules.baseline) << ',' << ToString(c.rules.selection)
        << ',' << ToString(c.rules.tie) << ',' << ToString(c.representatives);
    for (const auto& cs : s.cases) out << ',' << cs.no_change_count;
    for (const auto& cs : s.cases) out << ',' << ToDecimal(cs.average_loss, 4);
    out << ',' << ToDecimal(s.complete_info_average, 4) << ','
        << ToDecimal(s.at(GameCase::kEE).relative_average_loss, 4) << ','
        << s.partition.unchanged_all.size() << ',' << s.partition.worse_all.size()
        << ',' << s.partition.worse_only_ef.size() << '\n';
  }
}

}  // namespace wronggame
