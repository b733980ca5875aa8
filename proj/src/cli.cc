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


#include "wronggame/cli.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wronggame/core_types.h"
#include "wronggame/experiment.h"
#include "wronggame/ordinal_catalog.h"
#include "wronggame/robust_solvers.h"

namespace wronggame {
namespace {

namespace fs = std::filesystem;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string out_dir;

  // Game selection.
  std::string a_literal;
  std::string b_literal;
  int game = 0;
  std::string game_case = "all";
  std::string r_selector = "B";

  // Protocol; defaults are the published protocol.
  bool include_b = false;
  std::string reduce;
  std::string population;
  std::string baseline;
  std::string selection;
  std::string tie;
  std::string games;

  std::string kind = "absolute";
  int bins = 12;
};

BatchConfig ConfigFrom(const Options& o) {
  BatchConfig c = PublishedProtocol();
  if (o.include_b) c.aggregation.include_r_equals_b = true;
  if (!o.reduce.empty()) c.aggregation.per_game_reduce = ParsePerGameReduce(o.reduce);
  if (!o.population.empty()) c.aggregation.population = ParsePopulation(o.population);
  if (!o.baseline.empty()) c.rules.baseline = ParseBaseline(o.baseline);
  if (!o.selection.empty()) c.rules.selection = ParseSelectionRule(o.selection);
  if (!o.tie.empty()) c.rules.tie = ParseTieBreakRule(o.tie);
  if (!o.games.empty()) c.representatives = ParseRepresentatives(o.games);
  return c;
}

fs::path OutputDir(const Options& o) {
  if (!o.out_dir.empty()) return o.out_dir;
  if (const char* env = std::getenv("WRONGGAME_OUT"); env && *env) return env;
  return ".";
}

void EnsureDir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw IoError("cannot create output directory " + dir.string());
  }
}

void WriteFile(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f << content;
  f.close();
  if (!f) throw IoError("failed writing " + path.string());
}

nlohmann::json SidedJson(const SidedParam& p) {
  const char* side = p.side() == Side::kExact  ? "exact"
                     : p.side() == Side::kLeft ? "left"
                                               : "right";
  return {{"value", ToString(p.value())}, {"side", side}, {"text", ToString(p)}};
}

nlohmann::json OptimizerJson(const MaxMinResult& m) {
  nlohmann::json j = {{"x", SidedJson(m.x)},
                      {"value", ToString(m.value)},
                      {"active_set", m.active_set},
                      {"exact_value", ToString(m.exact_value)}};
  if (m.left_value) j["left_value"] = ToString(*m.left_value);
  if (m.right_value) j["right_value"] = ToString(*m.right_value);
  j["candidates"] = nlohmann::json::array();
  for (const auto& c : m.candidates) {
    j["candidates"].push_back({{"a", ToString(c.a)}, {"value", ToString(c.value)}});
  }
  return j;
}

std::string OptionalText(const std::optional<Rational>& r) {
  return r ? ToString(*r) : "none";
}

// --game N, or --A/--B matrix literals.
BimatrixGame SelectGame(const Options& o, const BatchConfig& config) {
  if (o.game != 0) {
    if (!o.a_literal.empty() || !o.b_literal.empty()) {
      throw CLI::ValidationError("--game", "cannot be combined with --A/--B");
    }
    const auto games = ExperimentGames(config.representatives);
    if (o.game < 1 || o.game > static_cast<int>(games.size())) {
      throw ContractViolation("game index must be in 1..78");
    }
    return games[static_cast<std::size_t>(o.game - 1)];
  }
  if (o.a_literal.empty() || o.b_literal.empty()) {
    throw CLI::ValidationError("solve", "give --game or both --A and --B");
  }
  return {StrictOrdinalMatrix::FromPayoff(ParseMatrixLiteral(o.a_literal)),
          StrictOrdinalMatrix::FromPayoff(ParseMatrixLiteral(o.b_literal))};
}

int ResolveR(const Options& o, const WrongGameSolver& solver) {
  const int named = FamilyMemberIndex(o.r_selector);
  if (named >= 0) return named;
  return solver.RequireMember(
      StrictOrdinalMatrix::FromPayoff(ParseMatrixLiteral(o.r_selector)));
}

void CmdEnumerate(const Options& o, std::ostream& out) {
  const auto catalog = Catalog();
  std::ostringstream body;
  if (o.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& e : catalog) {
      j.push_back({{"index", e.index},
                   {"A", FormatMatrix(e.canonical.game.a)},
                   {"B", FormatMatrix(e.canonical.game.b)},
                   {"orbit_key", e.canonical.orbit_key},
                   {"encoding", EmitFig1(e.canonical.game)},
                   {"listing_item", e.listing_item},
                   {"listed", EmitFig1(e.listed)}});
    }
    body << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    body << "index,encoding,listing_item,listed\n";
    for (const auto& e : catalog) {
      body << e.index << ',' << EmitFig1(e.canonical.game) << ','
           << e.listing_item << ',' << EmitFig1(e.listed) << '\n';
    }
  } else {
    for (const auto& e : catalog) {
      char prefix[16];
      std::snprintf(prefix, sizeof(prefix), "%2d  ", e.index);
      body << prefix << EmitFig1(e.canonical.game) << '\n';
    }
  }
  out << body.str();
  if (!o.out_dir.empty()) {
    const fs::path dir = OutputDir(o);
    EnsureDir(dir);
    const char* ext = o.format == "json" ? "json" : o.format == "csv" ? "csv" : "txt";
    WriteFile(dir / (std::string("catalog.") + ext), body.str());
  }
}

void CmdSolve(const Options& o, std::ostream& out) {
  const BatchConfig config = ConfigFrom(o);
  const BimatrixGame g = SelectGame(o, config);
  const WrongGameSolver solver(g.a, g.b, config.rules);
  const int r = ResolveR(o, solver);
  std::vector<GameCase> cases;
  if (o.game_case == "all") {
    cases.assign(kAllCases.begin(), kAllCases.end());
  } else {
    cases.push_back(ParseGameCase(o.game_case));
  }
  const Rational complete = solver.CompletePayoff(r);

  nlohmann::json j = {{"A", FormatMatrix(g.a)},
                      {"B", FormatMatrix(g.b)},
                      {"R", FamilyMemberName(r)},
                      {"R_matrix", FormatMatrix(solver.family()[r])},
                      {"rules",
                       {{"baseline", ToString(config.rules.baseline)},
                        {"selection", ToString(config.rules.selection)},
                        {"tie_break", ToString(config.rules.tie)}}},
                      {"p1_complete", ToString(complete)},
                      {"solutions", nlohmann::json::array()}};
  std::ostringstream text;
  text << "A = " << FormatMatrix(g.a) << "  B = " << FormatMatrix(g.b)
       << "  R = " << FamilyMemberName(r) << " " << FormatMatrix(solver.family()[r])
       << "\n";
  text << "rules: baseline=" << ToString(config.rules.baseline)
       << " selection=" << ToString(config.rules.selection)
       << " tie=" << ToString(config.rules.tie) << "\n";
  text << "breakpoints:";
  for (int k = 0; k < GameFamily::kSize; ++k) {
    text << ' ' << FamilyMemberName(k) << '='
         << OptionalText(BreakpointOf(solver.family()[k].payoff()).a_star);
  }
  text << "\np1_complete = " << ToString(complete) << " ("
       << ToDecimal(complete) << ")\n";

  for (GameCase c : cases) {
    const CaseSolution s = solver.Solve(c, r);
    const Rational loss = complete - s.p1;
    nlohmann::json sj = {{"case", ToString(c)},
                         {"x", SidedJson(s.x_actual)},
                         {"y", {{"b", ToString(s.y_actual)}}},
                         {"p1", ToString(s.p1)},
                         {"loss", ToString(loss)}};
    nlohmann::json bps = nlohmann::json::array();
    for (const auto& bp : s.breakpoints) bps.push_back(OptionalText(bp));
    sj["diagnostics"]["breakpoints"] = bps;
    if (s.x_model) sj["x_model"] = SidedJson(*s.x_model);
    if (s.optimizer) sj["diagnostics"]["optimizer"] = OptimizerJson(*s.optimizer);
    j["solutions"].push_back(sj);

    text << "\n[" << ToString(c) << "]\n";
    text << "  x = [a, 1-a] with a = " << ToString(s.x_actual) << "\n";
    if (s.x_model) text << "  column player models a = " << ToString(*s.x_model) << "\n";
    text << "  y = [b, 1-b] with b = " << ToString(s.y_actual) << "\n";
    text << "  p1 = " << ToString(s.p1) << " (" << ToDecimal(s.p1) << ")"
         << "  loss = " << ToString(loss) << " (" << ToDecimal(loss) << ")\n";
    if (s.optimizer) {
      const MaxMinResult& m = *s.optimizer;
      text << "  optimizer: a = " << ToString(m.x) << " value = " << ToString(m.value)
           << " (" << ToDecimal(m.value) << ")\n";
      text << "    envelope left/at/right: " << OptionalText(m.left_value) << " / "
           << ToString(m.exact_value) << " / " << OptionalText(m.right_value) << "\n";
      text << "    active members:";
      for (int k : m.active_set) text << ' ' << k;
      text << "\n    candidates:";
      for (const auto& cand : m.candidates) {
        text << ' ' << ToString(cand.a) << "->" << ToString(cand.value);
      }
      text << "\n";
    }
  }
  if (o.format == "json") {
    out << j.dump(2) << '\n';
  } else {
    out << text.str();
  }
}

void PrintSummaryTable(const BatchSummary& s, std::ostream& out) {
  out << "protocol: " << Describe(s.config) << "\n";
  out << "Type | Number of games with no change | average loss\n";
  for (const CaseSummary& cs : s.cases) {
    char line[96];
    std::snprintf(line, sizeof(line), "%-4s | %30d | %s\n",
                  std::string(ToString(cs.game_case)).c_str(), cs.no_change_count,
                  ToDecimal(cs.average_loss, 4).c_str());
    out << line;
  }
  out << "complete information average: " << ToDecimal(s.complete_info_average, 4)
      << "\n";
  out << "EE relative average loss: "
      << ToDecimal(s.at(GameCase::kEE).relative_average_loss * 100, 1) << "%\n";
  out << "unchanged in all cases: " << s.partition.unchanged_all.size()
      << ", worse in every case: " << s.partition.worse_all.size()
      << ", worse only in EF: " << s.partition.worse_only_ef.size() << "\n";
  for (const CaseSummary& cs : s.cases) {
    out << ToString(cs.game_case) << ": max loss " << ToString(cs.max_loss)
        << ", min loss " << ToString(cs.min_loss) << ", improved records "
        << cs.improved_records << "\n";
  }
}

std::string HistogramFileName(GameCase c, LossKind k) {
  return "hist_" + std::string(ToString(c)) + "_" + std::string(ToString(k)) +
         ".csv";
}

void CmdBatch(const Options& o, std::ostream& out) {
  const BatchConfig config = ConfigFrom(o);
  const fs::path dir = OutputDir(o);
  EnsureDir(dir);
  const BatchResult result = RunBatch(config);
  WriteFile(dir / "batch_summary.json", ToJson(result.summary).dump(2) + "\n");
  std::ostringstream csv;
  WriteLossRecordsCsv(result.records, csv);
  WriteFile(dir / "loss_records.csv", csv.str());
  for (GameCase c : kAllCases) {
    for (LossKind k : {LossKind::kAbsolute, LossKind::kRelative}) {
      std::ostringstream h;
      WriteHistogramCsv(MakeHistogram(result.records, c, k, o.bins), h);
      WriteFile(dir / HistogramFileName(c, k), h.str());
    }
  }
  PrintSummaryTable(result.summary, out);
  out << "wrote " << (dir / "batch_summary.json").string() << ", "
      << (dir / "loss_records.csv").string() << " and 8 histogram files\n";
}

void CmdHist(const Options& o, std::ostream& out) {
  const BatchConfig config = ConfigFrom(o);
  const GameCase c = ParseGameCase(o.game_case);
  const LossKind k = ParseLossKind(o.kind);
  const BatchResult result = RunBatch(config);
  const Histogram h = MakeHistogram(result.records, c, k, o.bins);
  std::ostringstream csv;
  WriteHistogramCsv(h, csv);
  const fs::path dir = OutputDir(o);
  EnsureDir(dir);
  WriteFile(dir / HistogramFileName(c, k), csv.str());
  out << csv.str();
  if (h.underflow > 0) {
    out << "# " << h.underflow << " records below 0 (improvements) not binned\n";
  }
}

void CmdSweep(const Options& o, std::ostream& out) {
  const SweepResult sweep = ProtocolSweep();
  const fs::path dir = OutputDir(o);
  EnsureDir(dir);
  std::ostringstream csv;
  WriteSweepCsv(sweep, csv);
  WriteFile(dir / "protocol_sweep.csv", csv.str());
  const ProtocolMatch& best = sweep.rows[sweep.best];
  out << "evaluated " << sweep.rows.size() << " protocols\n";
  out << "best match (published protocol), score "
      << ToDecimal(Rational(static_cast<std::int64_t>(best.score * 10000), 10000), 4)
      << ":\n";
  PrintSummaryTable(best.summary, out);
  out << "deviations from the published values:\n";
  const PublishedTargets targets;
  for (std::size_t i = 0; i < 4; ++i) {
    char line[128];
    std::snprintf(line, sizeof(line),
                  "  %s no-change %+d (target %d), average loss %+.4f (target %.4f)\n",
                  std::string(ToString(kAllCases[i])).c_str(),
                  best.no_change_deviation[i], targets.no_change[i],
                  best.average_loss_deviation[i], targets.average_loss[i]);
    out << line;
  }
  char line[160];
  std::snprintf(line, sizeof(line),
                "  complete-info average %+.4f, EE relative loss %+.4f, "
                "partition %+d/%+d/%+d\n",
                best.complete_info_deviation, best.ee_relative_deviation,
                best.partition_deviation[0], best.partition_deviation[1],
                best.partition_deviation[2]);
  out << line;
  out << "wrote " << (dir / "protocol_sweep.csv").string() << "\n";
}

void AddProtocolOptions(CLI::App* cmd, Options& o) {
  cmd->add_flag("--include-b", o.include_b, "Include R = B in the aggregation");
  cmd->add_option("--reduce", o.reduce, "Per-game reduction over R")
      ->check(CLI::IsMember({"mean", "max"}));
  cmd->add_option("--population", o.population, "Games averaged")
      ->check(CLI::IsMember({"changed", "all"}));
  cmd->add_option("--baseline", o.baseline, "Exact-information solution")
      ->check(CLI::IsMember({"nash", "commitment"}));
  cmd->add_option("--selection", o.selection, "Equilibrium selection rule")
      ->check(CLI::IsMember({"p1-max-pure-first", "p1-min-pure-first", "first-listed"}));
  cmd->add_option("--tie", o.tie, "Column player's tie-break rule")
      ->check(CLI::IsMember({"pessimistic", "optimistic", "uniform", "lowest-index"}));
  cmd->add_option("--games", o.games, "Game representatives")
      ->check(CLI::IsMember({"published", "canonical"}));
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Solve bimatrix games when a player has the wrong game in mind",
               "wronggame"};
  app.require_subcommand(1);
  Options o;

  auto* enumerate = app.add_subcommand("enumerate", "List the 78 strict ordinal 2x2 games");
  enumerate->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "csv"}));
  enumerate->add_option("--out", o.out_dir, "Also write catalog.<ext> here");

  auto* solve = app.add_subcommand("solve", "Solve one game under one or all cases");
  solve->add_option("--A", o.a_literal, "Row player's matrix, e.g. [[4,1],[2,3]]");
  solve->add_option("--B", o.b_literal, "Believed column player's matrix");
  solve->add_option("--game", o.game, "Game index 1..78 (see --games)");
  solve->add_option("--case", o.game_case)->check(CLI::IsMember({"EE", "EF", "FE", "FF", "all"}));
  solve->add_option("--R", o.r_selector, "True matrix: B, B12, B23, B34 or a literal");
  solve->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  AddProtocolOptions(solve, o);

  auto* batch = app.add_subcommand("batch", "Evaluate all 78 games and write reports");
  batch->add_option("--out", o.out_dir, "Output directory (default $WRONGGAME_OUT or .)");
  batch->add_option("--bins", o.bins)->check(CLI::PositiveNumber);
  AddProtocolOptions(batch, o);

  auto* hist = app.add_subcommand("hist", "Write one loss histogram");
  hist->add_option("--case", o.game_case)->required()->check(CLI::IsMember({"EE", "EF", "FE", "FF"}));
  hist->add_option("--kind", o.kind)->check(CLI::IsMember({"absolute", "relative"}));
  hist->add_option("--bins", o.bins)->check(CLI::PositiveNumber);
  hist->add_option("--out", o.out_dir, "Output directory (default $WRONGGAME_OUT or .)");
  AddProtocolOptions(hist, o);

  auto* sweep = app.add_subcommand("sweep", "Rank aggregation protocols against the published table");
  sweep->add_option("--out", o.out_dir, "Output directory (default $WRONGGAME_OUT or .)");

  std::vector<const char*> argv = {"wronggame"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*enumerate) CmdEnumerate(o, out);
    if (*solve) CmdSolve(o, out);
    if (*batch) CmdBatch(o, out);
    if (*hist) CmdHist(o, out);
    if (*sweep) CmdSweep(o, out);
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace wronggame
