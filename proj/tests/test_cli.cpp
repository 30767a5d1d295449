// Copyright 2026 The mincut Authors.
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


#include <sstream>

#include <gtest/gtest.h>

#include "mincut/oracle.hpp"
#include "mincut/replay.hpp"
#include "mincut/streams.hpp"

namespace mincut {
namespace {

ReplayConfig full_audit(const std::string& decomposer = "trivial") {
  ReplayConfig c;
  c.driver.decomposer = decomposer;
  c.audit = ReplayConfig::Audit::kFull;
  c.timing = false;
  return c;
}

TEST(Replay, EmptyStreamReportsOnlyTheBuild) {
  const EdgeList g = planted_graph(10, 2, 1);
  const RunReport r = replay(g, {}, full_audit());
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_EQ(r.records[0].op, "build");
  EXPECT_EQ(r.records[0].value, 2);
  EXPECT_EQ(r.updates, 0);
  EXPECT_EQ(r.disagreements, 0);
}

TEST(Replay, RandomStreamHasNoDisagreements) {
  for (const char* d : {"trivial", "conductance"}) {
    const EdgeList g = planted_graph(16, 4, 3);
    const auto stream = planted_stream(g, 100, 5, 0);
    const RunReport r = replay(g, stream, full_audit(d));
    EXPECT_EQ(r.records.size(), 101u);
    EXPECT_EQ(r.audited, 101);
    EXPECT_EQ(r.disagreements, 0) << d;
  }
}

// Values stay exact on both sides of every level rebuild.
TEST(Replay, RebuildBoundaryKeepsValuesContinuous) {
  const EdgeList g = planted_graph(14, 3, 8);
  const auto stream = planted_stream(g, 80, 2, 5);
  const RunReport r = replay(g, stream, full_audit("conductance"));
  int crossings = 0;
  for (size_t k = 1; k < r.records.size(); ++k) {
    if (r.records[k].rebuilds <= r.records[k - 1].rebuilds) continue;
    ++crossings;
    EXPECT_TRUE(*r.records[k - 1].agree);
    EXPECT_TRUE(*r.records[k].agree);
  }
  EXPECT_GT(crossings, 0);
  EXPECT_EQ(r.disagreements, 0);
}

TEST(Replay, SampledAuditPeriod) {
  const EdgeList g = planted_graph(12, 3, 2);
  const auto stream = planted_stream(g, 25, 4, 0);
  ReplayConfig c = full_audit();
  c.audit = ReplayConfig::Audit::kSampled;
  c.audit_every = 10;
  const RunReport r = replay(g, stream, c);
  EXPECT_EQ(r.audited, 4);  // steps 0, 10, 20, 25
  EXPECT_FALSE(r.records[5].agree.has_value());
}

TEST(GenPlanted, OracleConfirmsPlantedValue) {
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    const EdgeList g = planted_graph(20, 3, seed);
    EXPECT_EQ(global_min_cut(g).value, 3);
  }
}

TEST(GenPlanted, ZeroPlantIsDisconnected) {
  const RunReport r = replay(planted_graph(12, 0, 6), {}, full_audit());
  EXPECT_EQ(r.records[0].kind, "disconnected");
  EXPECT_EQ(r.records[0].value, 0);
  EXPECT_EQ(r.disagreements, 0);
}

TEST(GenPlanted, MonotoneStreamHandsOffUpward) {
  const EdgeList g = planted_graph(12, 1, 3);
  const auto stream = monotone_stream(g, 60, 7);
  for (const auto& b : stream) ASSERT_EQ(b[0].kind, Update::Kind::kInsert);
  const RunReport r = replay(g, stream, full_audit());
  EXPECT_EQ(r.disagreements, 0);
  int up = 0;
  for (size_t k = 1; k < r.records.size(); ++k) {
    EXPECT_GE(r.records[k].value, r.records[k - 1].value);
    if (r.records[k].range > r.records[k - 1].range) ++up;
  }
  EXPECT_GE(up, 2);
}

TEST(Replay, ReportsAreReproducible) {
  const EdgeList g = planted_graph(14, 4, 9);
  const auto stream = planted_stream(g, 40, 1, 4);
  const RunReport a = replay(g, stream, full_audit("conductance"));
  const RunReport b = replay(g, stream, full_audit("conductance"));
  EXPECT_EQ(a.digest, b.digest);
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
}

TEST(Replay, JsonCarriesSchemaAndRecords) {
  const EdgeList g = planted_graph(10, 2, 4);
  const auto stream = planted_stream(g, 5, 2, 0);
  const nlohmann::json j = to_json(replay(g, stream, full_audit()));
  EXPECT_EQ(j["schema_version"], RunReport::kSchemaVersion);
  ASSERT_EQ(j["records"].size(), 6u);
  for (const auto& rec : j["records"]) {
    EXPECT_TRUE(rec.contains("oracle"));
    EXPECT_TRUE(rec["agree"].get<bool>());
    EXPECT_TRUE(rec.contains("recourse"));
    EXPECT_TRUE(rec["counters"].contains("rebuilds"));
  }
  EXPECT_EQ(j["summary"]["disagreements"], 0);
}

TEST(Replay, WeightedStreamWithinTolerance) {
  std::vector<WeightedEdge> edges;
  const int n = 22;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 2.0 + i % 3});
  std::istringstream in("I 0 11 4.5\nB 2\nD 3 4\nI 3 4 1.5\nD 0 11\n");
  const auto stream = read_stream(in);
  ReplayConfig c = full_audit();
  c.weighted.wmin = 1.0;
  c.weighted.wmax = 5.0;
  const RunReport r = replay_weighted(n, edges, stream, c);
  EXPECT_EQ(r.records.size(), 4u);
  EXPECT_EQ(r.updates, 4);
  EXPECT_EQ(r.disagreements, 0);
}

TEST(Streams, WeightsRoundTrip) {
  std::vector<UpdateBatch> s{{{Update::Kind::kInsert, 1, 2, 0.25}},
                             {{Update::Kind::kInsert, 3, 4, 1.0}, {Update::Kind::kDelete, 1, 2, 1.0}}};
  std::ostringstream out;
  write_stream(out, s);
  EXPECT_EQ(out.str(), "I 1 2 0.25\nB 2\nI 3 4\nD 1 2\n");
  std::istringstream in(out.str());
  const auto back = read_stream(in);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0][0].w, 0.25);
  EXPECT_EQ(back[1][0].w, 1.0);
}

}  // namespace
}  // namespace mincut
