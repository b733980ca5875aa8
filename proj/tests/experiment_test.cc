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


#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include "doctest.h"
#include "wronggame/experiment.h"

namespace wronggame {
namespace {

BatchConfig DefaultConfig() { return PublishedProtocol(); }

std::string CsvOf(const BatchResult& r) {
  std::ostringstream out;
  WriteLossRecordsCsv(r.records, out);
  return out.str();
}

TEST_SUITE("experiment") {

TEST_CASE("record layout") {
  BatchConfig config = DefaultConfig();
  config.aggregation.include_r_equals_b = false;
  const BatchResult without = RunBatch(config);
  CHECK(without.records.size() == 78 * 4 * 3);
  config.aggregation.include_r_equals_b = true;
  const BatchResult with = RunBatch(config);
  CHECK(with.records.size() == 78 * 4 * 4);
  for (const LossRecord& r : with.records) {
    CHECK(r.loss_abs == r.p1_complete - r.p1_case);
    CHECK(r.loss_rel == r.loss_abs / r.p1_complete);
  }
  CHECK(std::is_sorted(with.records.begin(), with.records.end(),
                       [](const LossRecord& x, const LossRecord& y) {
                         return std::tie(x.game_index, x.game_case, x.r_index) <
                                std::tie(y.game_index, y.game_case, y.r_index);
                       }));
}

TEST_CASE("summary counts are consistent") {
  const BatchResult r = RunBatch(DefaultConfig());
  for (const CaseSummary& cs : r.summary.cases) {
    CHECK(cs.no_change_count + cs.changed_count == 78);
    CHECK(cs.max_loss >= cs.min_loss);
    CHECK(cs.relative_average_loss ==
          cs.average_loss / r.summary.complete_info_average);
  }
  const Partition& p = r.summary.partition;
  std::set<int> seen;
  for (const auto* group : {&p.unchanged_all, &p.worse_all, &p.worse_only_ef}) {
    for (int g : *group) CHECK(seen.insert(g).second);
  }
  for (GameCase c : kAllCases) {
    CHECK(static_cast<int>(p.unchanged_all.size()) <=
          r.summary.at(c).no_change_count);
  }
}

TEST_CASE("complete-information average of the published listing") {
  BatchConfig config = DefaultConfig();
  config.rules.baseline = Baseline::kCommitment;
  config.representatives = Representatives::kPublished;
  const BatchResult r = RunBatch(config);
  CHECK(std::abs(ToDouble(r.summary.complete_info_average) - 3.481) < 5e-4);
}

TEST_CASE("batches are deterministic") {
  const BatchResult first = RunBatch(DefaultConfig());
  const BatchResult second = RunBatch(DefaultConfig());
  CHECK(first.records == second.records);
  CHECK(CsvOf(first) == CsvOf(second));
  CHECK(ToJson(first.summary).dump() == ToJson(second.summary).dump());
}

TEST_CASE("summary json round-trips") {
  const BatchResult r = RunBatch(DefaultConfig());
  const nlohmann::json j = ToJson(r.summary);
  const BatchSummary back = BatchSummaryFromJson(j);
  CHECK(back.config == r.summary.config);
  CHECK(ToJson(back) == j);
  CHECK(j["protocol"]["is_published_protocol"] == true);
}

TEST_CASE("loss record csv round-trips") {
  const BatchResult r = RunBatch(DefaultConfig());
  std::istringstream in(CsvOf(r));
  CHECK(ReadLossRecordsCsv(in) == r.records);

  std::istringstream bad(
      "game_index,case,r_index,p1_complete,p1_case,loss_abs,loss_rel,"
      "p1_complete_dec,p1_case_dec,loss_abs_dec,loss_rel_dec\n"
      "1,EE,1,3,2,1,1/3,3.0,2.0,1.0,0.3\n"
      "2,XX,1,3,2,1,1/3,3.0,2.0,1.0,0.3\n");
  try {
    ReadLossRecordsCsv(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("histograms cover exactly the changed records") {
  const BatchResult r = RunBatch(DefaultConfig());
  for (GameCase c : kAllCases) {
    int nonzero = 0;
    for (const LossRecord& rec : r.records) {
      if (rec.game_case == c && rec.loss_abs != 0) ++nonzero;
    }
    for (LossKind kind : {LossKind::kAbsolute, LossKind::kRelative}) {
      const Histogram h = MakeHistogram(r.records, c, kind, 12);
      CHECK(h.edges.size() == 13);
      int total = h.underflow + h.overflow;
      for (int n : h.counts) total += n;
      CHECK(total == nonzero);
      CHECK(h.overflow == 0);

      std::ostringstream out;
      WriteHistogramCsv(h, out);
      std::istringstream in(out.str());
      const auto rows = ReadHistogramCsv(in);
      REQUIRE(rows.size() == 12);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(std::get<0>(rows[i]) == h.edges[i]);
        CHECK(std::get<1>(rows[i]) == h.edges[i + 1]);
        CHECK(std::get<2>(rows[i]) == h.counts[i]);
      }
    }
  }
  CHECK_THROWS_AS(MakeHistogram(r.records, GameCase::kEE, LossKind::kAbsolute, 0),
                  ContractViolation);
}

TEST_CASE("histogram binning") {
  std::vector<LossRecord> recs;
  for (Rational loss : {Rational(0), Rational(1, 2), Rational(3), Rational(-1),
                        Rational(1)}) {
    recs.push_back({1, GameCase::kFE, 1, 4, 4 - loss, loss, loss / 4});
  }
  const Histogram h = MakeHistogram(recs, GameCase::kFE, LossKind::kAbsolute, 3);
  CHECK(h.counts == std::vector<int>{1, 1, 1});
  CHECK(h.underflow == 1);
}

TEST_CASE("protocol sweep ranks the frozen protocol first") {
  const SweepResult sweep = ProtocolSweep();
  CHECK(sweep.rows.size() == SweepConfigs().size());
  CHECK(sweep.rows.size() == 384);
  const ProtocolMatch& best = sweep.rows[sweep.best];
  CHECK(best.summary.config == PublishedProtocol());
  for (const ProtocolMatch& m : sweep.rows) CHECK(m.score >= best.score);

  std::ostringstream csv;
  WriteSweepCsv(sweep, csv);
  const std::string text = csv.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 385);
}

TEST_CASE("sweep rows agree with direct batches") {
  const SweepResult sweep = ProtocolSweep();
  for (std::size_t i = 0; i < sweep.rows.size(); i += 37) {
    const BatchSummary& s = sweep.rows[i].summary;
    CHECK(ToJson(RunBatch(s.config).summary) == ToJson(s));
  }
}

TEST_CASE("protocol names round-trip") {
  for (auto r : {Representatives::kPublished, Representatives::kCanonical}) {
    CHECK(ParseRepresentatives(ToString(r)) == r);
  }
  for (auto r : {PerGameReduce::kMean, PerGameReduce::kMax}) {
    CHECK(ParsePerGameReduce(ToString(r)) == r);
  }
  for (auto p : {Population::kAllGames, Population::kChangedGames}) {
    CHECK(ParsePopulation(ToString(p)) == p);
  }
  for (auto k : {LossKind::kAbsolute, LossKind::kRelative}) {
    CHECK(ParseLossKind(ToString(k)) == k);
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace wronggame
