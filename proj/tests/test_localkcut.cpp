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


#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "mincut/localkcut.hpp"
#include "mincut/oracle.hpp"
#include "support/checks.hpp"

namespace mincut {
namespace {

using Engine = LocalKCutConfig::Engine;

LocalKCut make(const EdgeList& g, int64_t lambda_max, int64_t nu, int beta,
               LocalKCutConfig config = {}) {
  LocalKCut lkc(g.n, lambda_max, nu, beta, config);
  std::vector<EdgeId> ids;
  std::vector<std::pair<VertexId, VertexId>> ends;
  for (int e = 0; e < g.m(); ++e) {
    ids.push_back(e);
    ends.push_back(g.edges[e]);
  }
  lkc.build(ids, ends);
  return lkc;
}

EdgeList cycle(int n) {
  EdgeList g(n);
  for (int k = 0; k < n; ++k) g.add(k, (k + 1) % n);
  return g;
}

bool lightly_crossed(const LocalKCut& lkc, const VertexSet& s) {
  for (int i = 0; i < lkc.packing().size(); ++i)
    if (lkc.packing().respects_count(s, i) <= 2 * lkc.beta()) return true;
  return false;
}

TEST(LocalKCut, IsolatedVertex) {
  EdgeList g(3);
  g.add(1, 2);
  auto lkc = make(g, 2, 8, 1);
  EXPECT_EQ(lkc.query(0), (std::vector<VertexSet>{{0}}));
}

TEST(LocalKCut, FourCycle) {
  auto lkc = make(cycle(4), 2, 8, 2);
  EXPECT_TRUE(lkc.forest_test_implied());
  EXPECT_FALSE(lkc.has_packing());
  // Every arc through 0 has two boundary edges. The whole cycle has none
  // and volume 8; callers drop it.
  const std::vector<VertexSet> want = {{0},          {0, 1},    {0, 1, 2},
                                       {0, 1, 2, 3}, {0, 1, 3}, {0, 2, 3}, {0, 3}};
  EXPECT_EQ(lkc.query(0), want);
  EXPECT_EQ(testing::local_sets(cycle(4), 0, 2, 8), want);
}

TEST(LocalKCut, CompleteGraphHasNoProperSmallCut) {
  EdgeList k4(4);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) k4.add(u, v);
  auto lkc = make(k4, 2, 12, 1);
  for (VertexId v = 0; v < 4; ++v) EXPECT_EQ(lkc.query(v), (std::vector<VertexSet>{{0, 1, 2, 3}}));
}

TEST(LocalKCut, RejectsBadParameters) {
  EXPECT_THROW(LocalKCut(3, 4, 4, 1), std::invalid_argument);
  EXPECT_THROW(LocalKCut(3, 4, 8, 0), std::invalid_argument);
  auto lkc = make(cycle(3), 2, 8, 1);
  EXPECT_THROW(lkc.query(3), std::out_of_range);
  EXPECT_THROW(lkc.erase(9), std::out_of_range);
}

TEST(LocalKCut, ImpliedForestTestMatchesOracle) {
  std::mt19937 rng(8);
  for (int t = 0; t < 25; ++t) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const int64_t lambda_max = 8 + static_cast<int64_t>(rng() % 9);
    const EdgeList g = testing::random_graph_with_min_cut(rng, n, 2);
    const int64_t nu = 3 * lambda_max;
    auto lkc = make(g, lambda_max, nu, 8);
    for (VertexId v = 0; v < n; ++v)
      EXPECT_EQ(lkc.query(v), testing::local_sets(g, v, lambda_max, nu));
  }
}

TEST(LocalKCut, SoundAndCompleteWithBindingForestTest) {
  std::mt19937 rng(17);
  for (int t = 0; t < 12; ++t) {
    const int n = 4 + static_cast<int>(rng() % 6);
    const int beta = 2;
    const int64_t lambda_max = 5 + static_cast<int64_t>(rng() % 3);
    const EdgeList g = testing::random_graph_with_min_cut(rng, n, (lambda_max + beta - 1) / beta);
    const int64_t lambda = global_min_cut(g).value;
    const int64_t nu = 4 * lambda_max;
    auto lkc = make(g, lambda_max, nu, beta);
    ASSERT_FALSE(lkc.forest_test_implied());
    EXPECT_EQ(lkc.packing().size(),
              ForestPacking::forest_count(lambda_max, g.m(), 1.0 / (3.0 * beta)));
    for (VertexId v = 0; v < n; ++v) {
      const auto got = lkc.query(v);
      std::vector<VertexSet> sound, required;
      for (const auto& s : testing::local_sets(g, v, lambda_max, nu)) {
        if (lightly_crossed(lkc, s)) sound.push_back(s);
        if (cut_size(g, s) <= beta * lambda) required.push_back(s);
      }
      EXPECT_EQ(got, sound);
      for (const auto& s : required)
        EXPECT_TRUE(std::binary_search(got.begin(), got.end(), s));
    }
  }
}

TEST(LocalKCut, LiteralEngineAgreesWithClosedForm) {
  std::mt19937 rng(4);
  for (int t = 0; t < 8; ++t) {
    const int n = 3 + static_cast<int>(rng() % 3);
    EdgeList g(n);
    for (int k = 0; k < n + 2; ++k) {
      const int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
      if (u != v) g.add(u, v);
    }
    const int64_t lambda_max = 3, nu = 8;
    LocalKCutConfig closed{Engine::kClosedForm, 6, true};
    LocalKCutConfig subsets{Engine::kLiteral, 6, true, ColoringFamily::Construction::kSubsets};
    LocalKCutConfig hashed{Engine::kLiteral, 6, true, ColoringFamily::Construction::kAuto};
    auto a = make(g, lambda_max, nu, 1, closed);
    auto b = make(g, lambda_max, nu, 1, subsets);
    auto c = make(g, lambda_max, nu, 1, hashed);
    for (VertexId v = 0; v < n; ++v) {
      const auto x = a.query(v), y = b.query(v), z = c.query(v);
      EXPECT_EQ(x, y);
      EXPECT_TRUE(std::includes(z.begin(), z.end(), x.begin(), x.end()));
      for (const auto& s : z) {
        EXPECT_TRUE(std::binary_search(s.begin(), s.end(), v));
        EXPECT_TRUE(induces_connected(g, s));
        EXPECT_LE(cut_size(g, s), lambda_max);
        EXPECT_LE(volume(g, s), nu);
      }
    }
  }
}

TEST(LocalKCut, InsertThenDeleteRestoresState) {
  std::mt19937 rng(2);
  const EdgeList g = testing::random_graph_with_min_cut(rng, 7, 3);
  auto lkc = make(g, 5, 20, 2);
  std::vector<std::vector<VertexSet>> before;
  for (VertexId v = 0; v < 7; ++v) before.push_back(lkc.query(v));
  std::vector<std::vector<EdgeId>> forests;
  for (int i = 0; i < lkc.packing().size(); ++i) forests.push_back(lkc.packing().forest(i).forest_edges());
  lkc.insert(100, 0, 3);
  lkc.erase(100);
  for (VertexId v = 0; v < 7; ++v) EXPECT_EQ(lkc.query(v), before[v]);
  for (int i = 0; i < lkc.packing().size(); ++i)
    EXPECT_EQ(lkc.packing().forest(i).forest_edges(), forests[i]);
}

TEST(LocalKCut, DynamicUpdatesMatchFreshBuild) {
  std::mt19937 rng(31);
  for (int t = 0; t < 4; ++t) {
    const int n = 8;
    EdgeList g = testing::random_graph_with_min_cut(rng, n, 3);
    const LocalKCutConfig config{Engine::kClosedForm, 200, false};
    auto lkc = make(g, 5, 18, 2, config);
    std::vector<std::pair<EdgeId, std::pair<int, int>>> live;
    for (int e = 0; e < g.m(); ++e) live.push_back({e, g.edges[e]});
    EdgeId next = g.m();
    for (int step = 0; step < 30; ++step) {
      // A batch of deletions, then a few insertions, then queries.
      for (int k = 0; k < 2 && live.size() > 4; ++k) {
        const size_t j = rng() % live.size();
        lkc.erase(live[j].first);
        live.erase(live.begin() + j);
      }
      for (int k = 0; k < 2; ++k) {
        const int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
        if (u == v) continue;
        lkc.insert(next, u, v);
        live.push_back({next++, {u, v}});
      }
      LocalKCut fresh(n, 5, 18, 2, config);
      std::vector<EdgeId> ids;
      std::vector<std::pair<VertexId, VertexId>> ends;
      for (auto& [e, uv] : live) {
        ids.push_back(e);
        ends.push_back(uv);
      }
      fresh.build(ids, ends);
      const VertexId v = static_cast<VertexId>(rng() % n);
      if (fresh.packing().size() == lkc.packing().size()) EXPECT_EQ(lkc.query(v), fresh.query(v));
      // Soundness holds regardless of the packing epoch.
      EdgeList cur(n);
      for (auto& [e, uv] : live) cur.add(uv.first, uv.second);
      for (const auto& s : lkc.query(v)) {
        EXPECT_LE(cut_size(cur, s), 5);
        EXPECT_LE(volume(cur, s), 18);
        EXPECT_TRUE(induces_connected(cur, s));
      }
    }
  }
}

TEST(LocalKCut, WorkStaysUnderSearchTreeBound) {
  std::mt19937 rng(12);
  for (int t = 0; t < 20; ++t) {
    const int n = 12;
    const EdgeList g = testing::random_graph_with_min_cut(rng, n, 2);
    auto lkc = make(g, 12, 60, 8);
    for (VertexId v = 0; v < n; ++v) {
      const int64_t before = lkc.query_work();
      lkc.query(v);
      EXPECT_LE(lkc.query_work() - before, int64_t{1} << n);
    }
  }
}

TEST(LocalKCut, Deterministic) {
  std::mt19937 r1(77), r2(77);
  const EdgeList g1 = testing::random_graph_with_min_cut(r1, 9, 3);
  const EdgeList g2 = testing::random_graph_with_min_cut(r2, 9, 3);
  auto a = make(g1, 6, 24, 2);
  auto b = make(g2, 6, 24, 2);
  for (VertexId v = 0; v < 9; ++v) EXPECT_EQ(a.query(v), b.query(v));
}

}  // namespace
}  // namespace mincut
