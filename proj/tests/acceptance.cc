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


// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero when any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.h"
#include "wronggame/cli.h"
#include "wronggame/equilibrium.h"
#include "wronggame/experiment.h"
#include "wronggame/ordinal_catalog.h"
#include "wronggame/robust_solvers.h"

namespace wronggame {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

constexpr double kLossTolerance = 0.02;
constexpr double kCompleteTolerance = 0.02;
constexpr double kRelativeTolerance = 0.01;
constexpr double kOracleTolerance = 1e-3;
constexpr double kEnumerationSeconds = 1.0;
constexpr double kSweepSeconds = 10.0;

int failures = 0;

void Report(int id, const std::string& name, bool ok,
            const std::string& detail) {
  std::printf("[%s] criterion %d %s: %s\n", ok ? "PASS" : "FAIL", id,
              name.c_str(), detail.c_str());
  if (!ok) ++failures;
}

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

std::string Fixed(double v, int places = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, v);
  return buf;
}

StrictOrdinalMatrix S(int m11, int m12, int m21, int m22) {
  return StrictOrdinalMatrix({m11, m12, m21, m22});
}

oracle::Mat ToOracle(const StrictOrdinalMatrix& m) {
  const auto& v = m.row_major();
  return {double(v[0]), double(v[1]), double(v[2]), double(v[3])};
}

void Enumeration() {
  const auto start = Clock::now();
  const auto games = EnumerateGames();
  const double secs = Seconds(start);

  std::ifstream in(std::string(WRONGGAME_TEST_DATA_DIR) + "/fig1_games.txt");
  std::ostringstream text;
  text << in.rdbuf();
  std::set<OrbitKey> fixture;
  for (const BimatrixGame& g : ParseFig1Listing(text.str())) {
    fixture.insert(CanonicalForm(g).orbit_key);
  }
  std::set<OrbitKey> enumerated;
  for (const CanonicalGame& c : games) enumerated.insert(c.orbit_key);

  const bool ok = games.size() == 78 && enumerated == fixture &&
                  secs < kEnumerationSeconds;
  Report(1, "enumeration", ok,
         std::to_string(games.size()) + " classes, " +
             (enumerated == fixture ? "equal to" : "different from") +
             " the canonicalized listing, " + Fixed(secs, 3) + " s");
}

void WorkedExample() {
  const MaxMinResult m =
      MFunction(S(4, 1, 2, 3), FamilyOf(S(1, 3, 4, 2)), TieBreakRule::kPessimistic);
  const std::vector<std::optional<Rational>> expected = {
      Rational(1, 2), Rational(3, 4), Rational(1, 2), Rational(1, 4)};
  const bool ok = m.x == SidedParam::Exact(Rational(1, 4)) &&
                  m.value == Rational(5, 2) && m.breakpoints == expected;
  std::string bps;
  for (const auto& b : m.breakpoints) bps += " " + (b ? ToString(*b) : "-");
  Report(2, "worked example", ok,
         "a = " + ToString(m.x) + ", value = " + ToString(m.value) +
             ", breakpoints" + bps);
}

void AveragedVariant() {
  const auto a = S(4, 1, 2, 3);
  const auto f = FamilyOf(S(1, 3, 4, 2));
  const MaxMinResult avg = AverageFamilyOptimum(a, f, TieBreakRule::kPessimistic);
  const MaxMinResult m = MFunction(a, f, TieBreakRule::kPessimistic);
  const Rational ratio = avg.value / m.value;
  const bool ok = avg.x == SidedParam::LeftOf(Rational(1, 2)) &&
                  avg.value == Rational(11, 4) && ratio == Rational(11, 10);
  Report(3, "averaged variant", ok,
         "a = " + ToString(avg.x) + ", value = " + ToString(avg.value) +
             ", ratio to max-min = " + ToString(ratio));
}

void SecondExample() {
  const auto a = S(4, 1, 2, 3);
  const auto f = FamilyOf(S(1, 2, 3, 4));
  const MaxMinResult m = MFunction(a, f, TieBreakRule::kPessimistic);
  bool at_breakpoint = false;
  for (const auto& b : m.breakpoints) at_breakpoint |= b && *b == m.x.value();
  std::vector<oracle::Mat> fam;
  for (const auto& r : f.members()) fam.push_back(ToOracle(r));
  const auto grid = oracle::MaxMin(ToOracle(a), fam);
  const double err = std::abs(ToDouble(m.value) - grid.value);
  Report(4, "second example", !at_breakpoint && err < kOracleTolerance,
         "a = " + ToString(m.x) + ", value = " + ToString(m.value) +
             (at_breakpoint ? " (at a breakpoint)" : " (off every breakpoint)") +
             ", grid oracle " + Fixed(grid.value, 6) + " at " +
             Fixed(grid.a, 4));
}

std::string Deviations(const ProtocolMatch& m) {
  std::string s;
  const PublishedTargets t;
  for (GameCase c : kAllCases) {
    const auto i = static_cast<std::size_t>(c);
    s += std::string(ToString(c)) + " no-change " +
         std::to_string(m.summary.at(c).no_change_count) + " (target " +
         std::to_string(t.no_change[i]) + "), loss " +
         ToDecimal(m.summary.at(c).average_loss, 4) + " (target " +
         Fixed(t.average_loss[i]) + "); ";
  }
  s += "complete " + ToDecimal(m.summary.complete_info_average, 4) +
       " (target 3.481); EE relative " +
       Fixed(100 * ToDouble(m.summary.at(GameCase::kEE).relative_average_loss),
             1) +
       "% (target 54%)";
  return s;
}

ProtocolMatch best_match;

void PublishedTable() {
  const auto start = Clock::now();
  const SweepResult sweep = ProtocolSweep();
  const double secs = Seconds(start);
  best_match = sweep.rows[sweep.best];
  const ProtocolMatch& m = best_match;

  bool exact = true;
  for (std::size_t i = 0; i < 4; ++i) {
    exact &= m.no_change_deviation[i] == 0;
    exact &= std::abs(m.average_loss_deviation[i]) <= kLossTolerance;
  }
  exact &= std::abs(m.complete_info_deviation) <= kCompleteTolerance;
  exact &= std::abs(m.ee_relative_deviation) <= kRelativeTolerance;

  Report(5, "published table", exact && secs < kSweepSeconds,
         std::to_string(sweep.rows.size()) + " protocols in " + Fixed(secs, 2) +
             " s; best [" + Describe(m.summary.config) + "] score " +
             Fixed(m.score) + ": " + Deviations(m));
}

void PartitionCounts() {
  const Partition& p = best_match.summary.partition;
  const bool ok = p.unchanged_all.size() == 22 && p.worse_all.size() == 44 &&
                  p.worse_only_ef.size() == 12;
  Report(6, "partition", ok,
         "unchanged everywhere " + std::to_string(p.unchanged_all.size()) +
             " (target 22), worse everywhere " +
             std::to_string(p.worse_all.size()) +
             " (target 44), worse only in EF " +
             std::to_string(p.worse_only_ef.size()) + " (target 12)");
}

bool BoundsHold(const BatchSummary& s) {
  return s.at(GameCase::kEE).max_loss == 3 && s.at(GameCase::kEF).max_loss == 3 &&
         s.at(GameCase::kFE).max_loss == 2 && s.at(GameCase::kFF).max_loss == 2 &&
         s.at(GameCase::kFE).improved_records > 0;
}

void LossBounds() {
  const BatchSummary& s = best_match.summary;
  int holding = 0;
  const SweepResult sweep = ProtocolSweep();
  for (const ProtocolMatch& m : sweep.rows) holding += BoundsHold(m.summary);
  std::string detail = "max loss";
  for (GameCase c : kAllCases) {
    detail += " " + std::string(ToString(c)) + "=" + ToString(s.at(c).max_loss);
  }
  detail += " (targets 3 3 2 2); FE improvements " +
            std::to_string(s.at(GameCase::kFE).improved_records) +
            "; protocols satisfying all bounds: " + std::to_string(holding) +
            " of " + std::to_string(sweep.rows.size());
  Report(7, "loss bounds", BoundsHold(s), detail);
}

bool NoPureDeviation(const PayoffMatrix& a, const PayoffMatrix& b,
                     const MixedStrategy& x, const MixedStrategy& y) {
  const Rational p1 = Payoff(x, a, y), p2 = Payoff(x, b, y);
  for (int i = 0; i < 2; ++i) {
    if (Payoff(MixedStrategy::Pure(2, i), a, y) > p1) return false;
    if (Payoff(x, b, MixedStrategy::Pure(2, i)) > p2) return false;
  }
  return true;
}

void OracleEquivalence() {
  std::mt19937 rng(20260101);
  std::uniform_int_distribution<int> entry(0, 4);
  std::uniform_int_distribution<int> count(1, 4);
  double worst_m = 0, worst_avg = 0, worst_vec = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::array<int, 4> va = {1, 2, 3, 4}, vb = {1, 2, 3, 4};
    std::shuffle(va.begin(), va.end(), rng);
    std::shuffle(vb.begin(), vb.end(), rng);
    const StrictOrdinalMatrix a(va), b(vb);
    const auto fam = oracle::SwapFamily(ToOracle(b));
    const GameFamily f = FamilyOf(b);
    worst_m = std::max(
        worst_m, std::abs(ToDouble(MFunction(a, f, TieBreakRule::kPessimistic).value) -
                          oracle::MaxMin(ToOracle(a), fam).value));
    worst_avg = std::max(
        worst_avg,
        std::abs(ToDouble(AverageFamilyOptimum(a, f, TieBreakRule::kPessimistic).value) -
                 oracle::MaxMean(ToOracle(a), fam).value));
    std::vector<std::array<Rational, 2>> vs;
    std::vector<std::array<double, 2>> dvs;
    for (int j = count(rng); j > 0; --j) {
      const int u = entry(rng), v = entry(rng);
      vs.push_back({u, v});
      dvs.push_back({double(u), double(v)});
    }
    worst_vec = std::max(worst_vec,
                         std::abs(ToDouble(MaxMinOverVectors(vs).value) -
                                  oracle::MaxMinVectors(dvs).value));
  }

  int pairs = 0, bad = 0;
  for (const StrictOrdinalMatrix& sa : AllStrictOrdinalMatrices()) {
    for (const StrictOrdinalMatrix& sb : AllStrictOrdinalMatrices()) {
      ++pairs;
      const PayoffMatrix a = sa.payoff(), b = sb.payoff();
      const auto eqs = NashEquilibria(a, b);
      bool ok = !eqs.empty();
      for (const Equilibrium& e : eqs) ok &= NoPureDeviation(a, b, e.x, e.y);
      bad += !ok;
    }
  }
  const bool ok = worst_m < kOracleTolerance && worst_avg < kOracleTolerance &&
                  worst_vec < kOracleTolerance && bad == 0 && pairs == 576;
  Report(8, "oracle equivalence", ok,
         "max |error| M " + Fixed(worst_m, 6) + ", average " +
             Fixed(worst_avg, 6) + ", vectors " + Fixed(worst_vec, 6) +
             " over 1000 instances; " + std::to_string(pairs - bad) + "/" +
             std::to_string(pairs) + " game pairs pass deviation checks");
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void Determinism() {
  const fs::path root = fs::temp_directory_path() / "wronggame_acceptance";
  fs::remove_all(root);
  std::ostringstream out1, out2, err;
  const int c1 = RunCli({"batch", "--out", (root / "one").string()}, out1, err);
  const int c2 = RunCli({"batch", "--out", (root / "two").string()}, out2, err);
  int files = 0, differing = 0;
  if (c1 == kExitOk && c2 == kExitOk) {
    for (const auto& entry : fs::directory_iterator(root / "one")) {
      ++files;
      const fs::path other = root / "two" / entry.path().filename();
      differing += !fs::exists(other) || Slurp(entry.path()) != Slurp(other);
    }
  }
  // The closing line of the report names the output directory.
  const auto report = [](const std::ostringstream& o) {
    const std::string s = o.str();
    return s.substr(0, s.rfind("wrote "));
  };
  const bool ok = c1 == kExitOk && c2 == kExitOk && files > 0 &&
                  differing == 0 && report(out1) == report(out2);
  Report(9, "determinism", ok,
         std::to_string(files) + " files compared, " +
             std::to_string(differing) + " differ");
  fs::remove_all(root);
}

}  // namespace
}  // namespace wronggame

int main() {
  using namespace wronggame;
  Enumeration();
  WorkedExample();
  AveragedVariant();
  SecondExample();
  PublishedTable();
  PartitionCounts();
  LossBounds();
  OracleEquivalence();
  Determinism();
  std::printf("%d of 9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
