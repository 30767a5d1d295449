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
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "mincut/packing.hpp"

namespace mincut {
namespace {

using Ends = std::pair<VertexId, VertexId>;

// From-scratch greedy packing with its own Kruskal; returns forest edge sets.
std::vector<std::vector<EdgeId>> greedy_reference(int n, const std::map<EdgeId, Ends>& edges,
                                                  int k) {
  std::map<EdgeId, int64_t> load;
  for (auto& [id, e] : edges) load[id] = 0;
  std::vector<std::vector<EdgeId>> out;
  for (int i = 0; i < k; ++i) {
    std::vector<EdgeId> order;
    for (auto& [id, e] : edges) order.push_back(id);
    std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
      return load[a] != load[b] ? load[a] < load[b] : a < b;
    });
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
    std::vector<EdgeId> forest;
    for (EdgeId id : order) {
      int a = find(edges.at(id).first), b = find(edges.at(id).second);
      if (a == b) continue;
      p[a] = b;
      forest.push_back(id);
    }
    for (EdgeId id : forest) ++load[id];
    std::sort(forest.begin(), forest.end());
    out.push_back(forest);
  }
  return out;
}

TEST(ForestPacking, ForestCountFormula) {
  // ceil(6 * 2 * ln 10 / (1/24)^2) = ceil(15915.47)
  EXPECT_EQ(ForestPacking::forest_count(2, 10, 1.0 / 24.0), 15916);
  EXPECT_EQ(ForestPacking::forest_count(2, 10, 1.0 / 24.0, 100), 100);
  EXPECT_EQ(ForestPacking::forest_count(1, 1, 0.5), 17);
}

TEST(ForestPacking, SingleEdgeInEveryForest) {
  ForestPacking p(2, 3);
  p.insert(0, 0, 1);
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(p.in_forest(i, 0));
  EXPECT_EQ(p.load(0, 2), 3);
}

TEST(ForestPacking, FourCycleSecondForestUsesUnloadedEdge) {
  ForestPacking p(4, 2);
  std::map<EdgeId, Ends> ref;
  for (EdgeId e = 0; e < 4; ++e) {
    ref[e] = {e, (e + 1) % 4};
    p.insert(e, e, (e + 1) % 4);
  }
  auto expected = greedy_reference(4, ref, 2);
  EXPECT_EQ(p.forest(0).forest_edges(), (std::vector<EdgeId>{0, 1, 2}));
  EXPECT_TRUE(p.in_forest(1, 3));
  for (int i = 0; i < 2; ++i) EXPECT_EQ(p.forest(i).forest_edges(), expected[i]);
}

TEST(ForestPacking, DisconnectingDeletionChangesOneEdgePerForest) {
  ForestPacking p(6, 5);
  EdgeId id = 0;
  for (int b : {0, 3}) {
    p.insert(id++, b, b + 1);
    p.insert(id++, b + 1, b + 2);
    p.insert(id++, b, b + 2);
  }
  p.insert(id, 2, 3);
  auto cs = p.erase(id);
  for (int i = 0; i < 5; ++i) {
    EXPECT_TRUE(cs[i].entered.empty());
    EXPECT_EQ(cs[i].left, std::vector<EdgeId>{id});
  }
}

TEST(ForestPacking, RespectsCount) {
  ForestPacking p(4, 1);
  p.insert(0, 0, 1);
  p.insert(1, 1, 2);
  p.insert(2, 2, 3);
  EXPECT_EQ(p.respects_count({0}, 0), 1);
  EXPECT_EQ(p.respects_count({0, 1}, 0), 1);
  EXPECT_EQ(p.respects_count({1}, 0), 2);
}

TEST(ForestPacking, RespectsCountMatchesScan) {
  std::mt19937 rng(8);
  for (int t = 0; t < 50; ++t) {
    const int n = 9;
    ForestPacking p(n, 3);
    std::vector<Ends> ends;
    for (EdgeId e = 0; e < 20; ++e) {
      ends.emplace_back(rng() % n, rng() % n);
      p.insert(e, ends.back().first, ends.back().second);
    }
    VertexSet s;
    for (int v = 0; v < n; ++v)
      if (rng() % 2) s.push_back(v);
    for (int i = 0; i < 3; ++i) {
      int count = 0;
      for (EdgeId e : p.forest(i).forest_edges()) {
        bool a = std::binary_search(s.begin(), s.end(), ends[e].first);
        bool b = std::binary_search(s.begin(), s.end(), ends[e].second);
        count += a != b;
      }
      EXPECT_EQ(p.respects_count(s, i), count);
    }
  }
}

TEST(ForestPacking, DynamicMatchesStaticGreedy) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + trial % 8;
    const int k = 1 + trial % 6;
    ForestPacking p(n, k);
    std::map<EdgeId, Ends> ref;
    EdgeId next = 0;
    for (int step = 0; step < 80; ++step) {
      std::map<EdgeId, std::vector<int64_t>> old_loads;
      bool deleting = !ref.empty() && rng() % 3 == 0;
      std::vector<ChangeSet> cs;
      EdgeId victim = kNone;
      if (deleting) {
        auto it = ref.begin();
        std::advance(it, rng() % ref.size());
        victim = it->first;
        for (auto& [id, e] : ref)
          for (int i = 0; i < k; ++i) old_loads[id].push_back(p.load(id, i));
        ref.erase(it);
        cs = p.erase(victim);
      } else {
        VertexId u = rng() % n, v = rng() % n;
        while (v == u) v = rng() % n;
        ref[next] = {u, v};
        cs = p.insert(next++, u, v);
      }
      auto expected = greedy_reference(n, ref, k);
      for (int i = 0; i < k; ++i) {
        ASSERT_EQ(p.forest(i).forest_edges(), expected[i]) << trial << " " << step << " " << i;
        EXPECT_LE(cs[i].size(), static_cast<size_t>(i + 1));
      }
      for (auto& [id, loads] : old_loads) {
        if (id == victim) continue;
        for (int i = 0; i < k; ++i) {
          // Loads of surviving edges never drop on a deletion. A deletion
          // that splits a component leaves them unchanged.
          EXPECT_GE(p.load(id, i), loads[i]);
        }
      }
    }
  }
}

TEST(ForestPacking, StaticBuildMatchesReference) {
  std::mt19937 rng(17);
  for (int t = 0; t < 10; ++t) {
    const int n = 8;
    std::map<EdgeId, Ends> ref;
    std::vector<EdgeId> ids;
    std::vector<Ends> ends;
    for (EdgeId e = 0; e < 25; ++e) {
      VertexId u = rng() % n, v = rng() % n;
      while (v == u) v = rng() % n;
      ref[e * 3] = {u, v};
      ids.push_back(e * 3);
      ends.emplace_back(u, v);
    }
    ForestPacking p(n, 7);
    p.build(n, ids, ends);
    auto expected = greedy_reference(n, ref, 7);
    for (int i = 0; i < 7; ++i) EXPECT_EQ(p.forest(i).forest_edges(), expected[i]);
  }
}

}  // namespace
}  // namespace mincut
