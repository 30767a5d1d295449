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
#include <cmath>
#include <map>
#include <random>

#include <gtest/gtest.h>

#include "mincut/dyngraph.hpp"
#include "mincut/oracle.hpp"

namespace mincut {
namespace {

using L = EdgeLabel;

// Partition recount from labels alone.
std::vector<int> recount(const ClusteredGraph& cg, Part p) {
  const auto& g = cg.graph();
  const int n = g.num_vertices();
  std::vector<int> comp(n, -1);
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> q{s};
    comp[s] = s;
    for (size_t i = 0; i < q.size(); ++i)
      for (EdgeId f : g.incident(q[i])) {
        const L l = g.label(f);
        const bool inside = p == Part::kPre ? l != L::kIntercluster : l == L::kIntracluster;
        const int y = g.other(f, q[i]);
        if (inside && comp[y] < 0) {
          comp[y] = s;
          q.push_back(y);
        }
      }
  }
  return comp;
}

int64_t recount_boundary(const ClusteredGraph& cg, const VertexSet& c) {
  return cut_size(cg.graph().to_edge_list(), c);
}

TEST(DynMultiGraph, RejectsSelfLoopsAndUnknownIds) {
  DynMultiGraph g(3);
  EXPECT_THROW(g.insert_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(g.insert_edge(0, 3), std::out_of_range);
  EXPECT_THROW(g.delete_edge(0), std::out_of_range);
}

TEST(DynMultiGraph, EveryEdgeInTwoAdjacencyLists) {
  std::mt19937 rng(3);
  DynMultiGraph g(7);
  std::vector<EdgeId> live;
  for (int step = 0; step < 500; ++step) {
    if (live.empty() || rng() % 3) {
      VertexId u = rng() % 7, v = rng() % 7;
      if (u == v) continue;
      live.push_back(g.insert_edge(u, v));
    } else {
      const size_t k = rng() % live.size();
      g.delete_edge(live[k]);
      live.erase(live.begin() + k);
    }
    std::map<EdgeId, int> seen;
    for (VertexId v = 0; v < 7; ++v)
      for (EdgeId e : g.incident(v)) {
        ++seen[e];
        auto [a, b] = g.endpoints(e);
        EXPECT_TRUE(a == v || b == v);
      }
    EXPECT_EQ(seen.size(), live.size());
    for (auto [e, c] : seen) EXPECT_EQ(c, 2);
  }
}

TEST(ClusteredGraph, InsertIntraMergesCluster) {
  ClusteredGraph cg(2);
  cg.insert_edge(0, 1, L::kIntracluster);
  const int c = cg.cluster_of(Part::kCluster, 0);
  EXPECT_EQ(c, cg.cluster_of(Part::kCluster, 1));
  EXPECT_EQ(cg.record(Part::kCluster, c).boundary, 0);
  EXPECT_EQ(cg.record(Part::kCluster, c).inner_volume, 2);
  EXPECT_EQ(cg.clusters(Part::kCluster).size(), 1u);
}

TEST(ClusteredGraph, TriangleWithOneIntraEdge) {
  ClusteredGraph cg(3);
  cg.insert_edge(0, 1, L::kIntracluster);
  cg.insert_edge(1, 2, L::kIntercluster);
  cg.insert_edge(0, 2, L::kIntercluster);
  const int ab = cg.cluster_of(Part::kCluster, 0);
  EXPECT_EQ(ab, cg.cluster_of(Part::kCluster, 1));
  EXPECT_NE(ab, cg.cluster_of(Part::kCluster, 2));
  EXPECT_EQ(cg.record(Part::kCluster, ab).boundary, recount_boundary(cg, {0, 1}));
  EXPECT_EQ(cg.record(Part::kCluster, ab).boundary, 2);
  cg.audit();
}

TEST(ClusteredGraph, ParallelIntercluster) {
  ClusteredGraph cg(2);
  cg.insert_edge(0, 1, L::kIntercluster);
  cg.insert_edge(0, 1, L::kIntercluster);
  for (VertexId v : {0, 1}) EXPECT_EQ(cg.record(Part::kPre, cg.cluster_of(Part::kPre, v)).boundary, 2);
  EXPECT_THROW(cg.insert_edge(0, 0, L::kIntracluster), std::invalid_argument);
}

TEST(ClusteredGraph, RejectsInconsistentLabels) {
  ClusteredGraph cg(3);
  cg.insert_edge(0, 1, L::kIntracluster);
  EXPECT_THROW(cg.insert_edge(0, 1, L::kIntercluster), std::invalid_argument);
  EXPECT_THROW(cg.insert_edge(0, 1, L::kFragmented), std::invalid_argument);
  EXPECT_THROW(cg.delete_edge(7), std::out_of_range);
  EXPECT_THROW(cg.insert_edge(0, 9, L::kIntracluster), std::out_of_range);
}

TEST(ClusteredGraph, DeleteOnlyEdge) {
  ClusteredGraph cg(2);
  const EdgeId e = cg.insert_edge(0, 1, L::kIntracluster);
  cg.delete_edge(e);
  EXPECT_NE(cg.cluster_of(Part::kCluster, 0), cg.cluster_of(Part::kCluster, 1));
  EXPECT_EQ(cg.clusters(Part::kCluster).size(), 2u);
  cg.audit();
}

TEST(ClusteredGraph, DeleteParallelCopy) {
  ClusteredGraph cg(2);
  const EdgeId e = cg.insert_edge(0, 1, L::kIntracluster);
  cg.insert_edge(0, 1, L::kIntracluster);
  const int c = cg.cluster_of(Part::kCluster, 0);
  EXPECT_EQ(cg.record(Part::kCluster, c).inner_volume, 4);
  cg.delete_edge(e);
  EXPECT_EQ(cg.cluster_of(Part::kCluster, 1), c);
  EXPECT_EQ(cg.record(Part::kCluster, c).inner_volume, 2);
}

TEST(ClusteredGraph, DeleteBridgeOfPath) {
  ClusteredGraph cg(3);
  cg.insert_edge(0, 1, L::kIntracluster);
  const EdgeId bc = cg.insert_edge(1, 2, L::kIntracluster);
  cg.delete_edge(bc);
  const auto comp = recount(cg, Part::kCluster);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      EXPECT_EQ(cg.cluster_of(Part::kCluster, a) == cg.cluster_of(Part::kCluster, b),
                comp[a] == comp[b]);
  EXPECT_EQ(cg.cluster_of(Part::kCluster, 0), cg.cluster_of(Part::kCluster, 1));
  cg.audit();
}

TEST(ClusteredGraph, RelabelOneCycleEdgeKeepsCluster) {
  ClusteredGraph cg(4);
  std::vector<EdgeId> e;
  for (int k = 0; k < 4; ++k) e.push_back(cg.insert_edge(k, (k + 1) % 4, L::kIntracluster));
  auto r = cg.relabel({{e[0], L::kIntercluster}});
  EXPECT_TRUE(r.new_pre.empty());
  EXPECT_EQ(cg.clusters(Part::kPre).size(), 1u);
  const int c = cg.cluster_of(Part::kPre, 0);
  // Membership is unchanged, so the boundary recount is unchanged too.
  EXPECT_EQ(cg.record(Part::kPre, c).boundary, 0);
  cg.audit();
}

TEST(ClusteredGraph, RelabelOppositeCycleEdges) {
  ClusteredGraph cg(4);
  std::vector<EdgeId> e;
  for (int k = 0; k < 4; ++k) e.push_back(cg.insert_edge(k, (k + 1) % 4, L::kIntracluster));
  auto r = cg.relabel({{e[1], L::kIntercluster}, {e[3], L::kIntercluster}});
  EXPECT_EQ(r.new_pre.size(), 1u);
  EXPECT_EQ(r.new_cluster.size(), 1u);
  for (int c : cg.clusters(Part::kPre)) {
    const auto& rec = cg.record(Part::kPre, c);
    EXPECT_EQ(rec.members.size(), 2u);
    EXPECT_EQ(rec.boundary, recount_boundary(cg, rec.sorted_members()));
    EXPECT_EQ(rec.boundary, 2);
  }
  cg.audit();
}

TEST(ClusteredGraph, RelabelLeafEdges) {
  ClusteredGraph cg(4);
  cg.insert_edge(0, 1, L::kIntracluster);
  cg.insert_edge(1, 2, L::kIntracluster);
  const EdgeId leaf = cg.insert_edge(2, 3, L::kIntracluster);
  cg.relabel({{leaf, L::kIntercluster}});
  const auto& rec = cg.record(Part::kPre, cg.cluster_of(Part::kPre, 3));
  EXPECT_EQ(rec.members, std::vector<VertexId>{3});
  EXPECT_EQ(rec.boundary, 1);
  EXPECT_THROW(cg.relabel({{leaf, L::kIntracluster}}), std::invalid_argument);
}

TEST(ClusteredGraph, FragmentedRevertMerges) {
  ClusteredGraph cg(3);
  cg.insert_edge(0, 1, L::kIntracluster);
  const EdgeId f = cg.insert_edge(1, 2, L::kIntracluster);
  cg.relabel({{f, L::kFragmented}});
  EXPECT_EQ(cg.clusters(Part::kPre).size(), 1u);
  EXPECT_EQ(cg.clusters(Part::kCluster).size(), 2u);
  cg.relabel({{f, L::kIntracluster}});
  EXPECT_EQ(cg.clusters(Part::kCluster).size(), 1u);
  cg.audit();
}

// Cluster {0,1} with one internal edge and three boundary edges per endpoint.
ClusteredGraph sparse_example() {
  ClusteredGraph cg(8);
  cg.insert_edge(0, 1, L::kIntracluster);
  for (int k = 0; k < 3; ++k) {
    cg.insert_edge(0, 2 + k, L::kIntercluster);
    cg.insert_edge(1, 5 + k, L::kIntercluster);
  }
  return cg;
}

TEST(BoundarySparse, DefinitionExamples) {
  ClusteredGraph cg = sparse_example();
  const int c = cg.cluster_of(Part::kPre, 0);
  EXPECT_TRUE(cg.is_boundary_sparse({0}, c, Rational{1, 25}));
  EXPECT_TRUE(oracle_is_sparse(cg.graph().to_edge_list(), {0, 1}, {0}, Rational{1, 25}));

  ClusteredGraph closed(3);
  closed.insert_edge(0, 1, L::kIntracluster);
  closed.insert_edge(1, 2, L::kIntracluster);
  const int cc = closed.cluster_of(Part::kPre, 0);
  EXPECT_FALSE(closed.is_boundary_sparse({0}, cc, Rational{1, 25}));
  EXPECT_FALSE(closed.is_boundary_sparse({0, 1}, cc, Rational{1, 25}));

  // w(S, C\S) = w(S, V\C) = w(C\S, V\C) = 2.
  ClusteredGraph even(4);
  for (int k = 0; k < 2; ++k) {
    even.insert_edge(0, 1, L::kIntracluster);
    even.insert_edge(0, 2, L::kIntercluster);
    even.insert_edge(1, 3, L::kIntercluster);
  }
  EXPECT_FALSE(even.is_boundary_sparse({0}, even.cluster_of(Part::kPre, 0), Rational{1, 25}));
}

TEST(BoundarySparse, Errors) {
  ClusteredGraph cg = sparse_example();
  const int c = cg.cluster_of(Part::kPre, 0);
  EXPECT_THROW(cg.is_boundary_sparse({}, c, Rational{1, 25}), std::invalid_argument);
  EXPECT_THROW(cg.is_boundary_sparse({0, 1}, c, Rational{1, 25}), std::invalid_argument);
  EXPECT_THROW(cg.is_boundary_sparse({2}, c, Rational{1, 25}), std::invalid_argument);
}

TEST(BoundarySparse, AgreesWithOracle) {
  std::mt19937 rng(21);
  for (int t = 0; t < 100; ++t) {
    const int n = 10;
    ClusteredGraph cg(n);
    std::vector<int> group(n);
    for (int v = 0; v < n; ++v) group[v] = v < 6 ? 0 : 1 + rng() % 2;
    std::vector<std::pair<int, int>> inter;
    for (int k = 0; k < 25; ++k) {
      int u = rng() % n, v = rng() % n;
      if (u == v) continue;
      if (group[u] == group[v])
        cg.insert_edge(u, v, L::kIntracluster);
      else
        inter.emplace_back(u, v);
    }
    for (auto [u, v] : inter) cg.insert_edge(u, v, L::kIntercluster);
    const int c = cg.cluster_of(Part::kPre, 0);
    const VertexSet members = cg.record(Part::kPre, c).sorted_members();
    if (members.size() < 2) continue;
    for (int trial = 0; trial < 10; ++trial) {
      VertexSet s;
      for (VertexId x : members)
        if (rng() % 2) s.push_back(x);
      if (s.empty() || s.size() == members.size()) continue;
      const Cut cut = cg.make_cut(s, c);
      const EdgeList g = cg.graph().to_edge_list();
      EXPECT_EQ(cut.volume, volume(g, s));
      EXPECT_EQ(cg.is_boundary_sparse(s, c, Rational{1, 25}),
                oracle_is_sparse(g, members, s, Rational{1, 25}));
    }
  }
}

TEST(MirrorCluster, PathMiddle) {
  ClusteredGraph cg(3);
  cg.insert_edge(0, 1, L::kIntercluster);
  cg.insert_edge(1, 2, L::kIntercluster);
  auto m = cg.mirror_cluster(cg.cluster_of(Part::kPre, 1));
  EXPECT_TRUE(m.has_z);
  EXPECT_EQ(m.graph.num_vertices(), 2);
  EXPECT_EQ(m.graph.num_edges(), 2);
  EXPECT_EQ(m.original, (std::vector<VertexId>{1, kNone}));
}

TEST(MirrorCluster, WholeComponentOmitsZ) {
  ClusteredGraph cg(3);
  cg.insert_edge(0, 1, L::kIntracluster);
  cg.insert_edge(1, 2, L::kIntracluster);
  auto m = cg.mirror_cluster(cg.cluster_of(Part::kPre, 0));
  EXPECT_FALSE(m.has_z);
  EXPECT_EQ(m.graph.num_vertices(), 3);
  EXPECT_EQ(m.graph.num_edges(), 2);
}

TEST(MirrorCluster, StarCenterAndLeaf) {
  ClusteredGraph cg(4);
  cg.insert_edge(0, 1, L::kIntracluster);
  cg.insert_edge(0, 2, L::kIntercluster);
  cg.insert_edge(0, 3, L::kIntercluster);
  auto m = cg.mirror_cluster(cg.cluster_of(Part::kPre, 0));
  ASSERT_EQ(m.graph.num_vertices(), 3);
  int to_z = 0;
  for (EdgeId e : m.graph.live_edges()) {
    auto [a, b] = m.graph.endpoints(e);
    if (b == 2) {
      EXPECT_EQ(a, 0);
      ++to_z;
    }
  }
  EXPECT_EQ(to_z, 2);
}

ClusteredGraph random_clustered(std::mt19937& rng, int n, int m, int groups) {
  ClusteredGraph cg(n);
  std::vector<int> group(n);
  for (int v = 0; v < n; ++v) group[v] = rng() % groups;
  std::vector<std::pair<int, int>> inter;
  for (int k = 0; k < m; ++k) {
    int u = rng() % n, v = rng() % n;
    if (u == v) continue;
    if (group[u] == group[v])
      cg.insert_edge(u, v, L::kIntracluster);
    else
      inter.emplace_back(u, v);
  }
  for (auto [u, v] : inter) cg.insert_edge(u, v, L::kIntercluster);
  return cg;
}

TEST(MirrorCluster, PreservesCutSizes) {
  std::mt19937 rng(99);
  int checked = 0;
  while (checked < 100) {
    ClusteredGraph cg = random_clustered(rng, 2 + rng() % 9, 18, 3);
    const auto ids = cg.clusters(Part::kPre);
    const int c = ids[rng() % ids.size()];
    const VertexSet members = cg.record(Part::kPre, c).sorted_members();
    VertexSet s, local;
    for (size_t i = 0; i < members.size(); ++i)
      if (rng() % 2) {
        s.push_back(members[i]);
        local.push_back(static_cast<VertexId>(i));
      }
    auto mirror = cg.mirror_cluster(c);
    EXPECT_EQ(cut_size(mirror.graph.to_edge_list(), local),
              cut_size(cg.graph().to_edge_list(), s));
    ++checked;
  }
}

TEST(ContractedGraph, TrivialPartitionIsIdentity) {
  ClusteredGraph cg(5);
  EdgeList g(5);
  for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {0, 4}}) {
    cg.insert_edge(u, v, L::kIntercluster);
    g.add(u, v);
  }
  auto c = cg.contracted_graph();
  EXPECT_EQ(c.cluster, (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_EQ(c.graph.to_edge_list().edges, g.edges);
}

TEST(ContractedGraph, SingleClusterHasNoEdges) {
  ClusteredGraph cg(4);
  for (int k = 0; k < 4; ++k) cg.insert_edge(k, (k + 1) % 4, L::kIntracluster);
  cg.insert_edge(0, 2, L::kIntracluster);
  auto c = cg.contracted_graph();
  ASSERT_EQ(c.graph.num_vertices(), 1);
  EXPECT_EQ(c.graph.num_edges(), 0);
  EXPECT_EQ(c.graph.inner_volume(0), cg.graph().volume());
}

TEST(ContractedGraph, TwoTrianglesAndBridge) {
  ClusteredGraph cg(6);
  for (int b : {0, 3}) {
    cg.insert_edge(b, b + 1, L::kIntracluster);
    cg.insert_edge(b + 1, b + 2, L::kIntracluster);
    cg.insert_edge(b, b + 2, L::kIntracluster);
  }
  cg.insert_edge(2, 3, L::kIntercluster);
  auto c = cg.contracted_graph();
  ASSERT_EQ(c.graph.num_vertices(), 2);
  EXPECT_EQ(c.graph.num_edges(), 1);
  EXPECT_EQ(c.graph.inner_volume(0), 6);
  EXPECT_EQ(c.graph.inner_volume(1), 6);
}

// Applies drained operations to a replica and checks them against a fresh
// computation of the derived edge set.
struct Replica {
  std::map<EdgeId, std::pair<VertexId, VertexId>> edges;
  void apply(const std::vector<EdgeOp>& ops) {
    bool seen_insert = false;
    for (const auto& op : ops) {
      if (op.kind == EdgeOp::Kind::kDelete) {
        ASSERT_FALSE(seen_insert) << "deletions must come first";
        auto it = edges.find(op.id);
        ASSERT_NE(it, edges.end());
        EXPECT_EQ(it->second, std::make_pair(op.u, op.v));
        edges.erase(it);
      } else {
        seen_insert = true;
        ASSERT_EQ(edges.count(op.id), 0u);
        edges[op.id] = {op.u, op.v};
      }
    }
  }
};

std::map<EdgeId, std::pair<VertexId, VertexId>> expected_mirror(const ClusteredGraph& cg) {
  std::map<EdgeId, std::pair<VertexId, VertexId>> out;
  const auto& g = cg.graph();
  for (EdgeId e : g.live_edges()) {
    auto [u, v] = g.endpoints(e);
    if (g.label(e) != L::kIntercluster) {
      out[2 * e] = {u, v};
    } else {
      out[2 * e] = {u, cg.mirror_z(cg.cluster_of(Part::kPre, u))};
      out[2 * e + 1] = {v, cg.mirror_z(cg.cluster_of(Part::kPre, v))};
    }
  }
  return out;
}

std::map<EdgeId, std::pair<VertexId, VertexId>> expected_contracted(const ClusteredGraph& cg) {
  std::map<EdgeId, std::pair<VertexId, VertexId>> out;
  const auto& g = cg.graph();
  for (EdgeId e : g.live_edges()) {
    if (g.label(e) == L::kIntracluster) continue;
    auto [u, v] = g.endpoints(e);
    out[e] = {cg.cluster_of(Part::kCluster, u), cg.cluster_of(Part::kCluster, v)};
  }
  return out;
}

bool labels_consistent(const ClusteredGraph& cg) {
  const auto& g = cg.graph();
  for (EdgeId e : g.live_edges()) {
    auto [u, v] = g.endpoints(e);
    if (g.label(e) == L::kIntercluster &&
        cg.cluster_of(Part::kPre, u) == cg.cluster_of(Part::kPre, v))
      return false;
    if (g.label(e) == L::kFragmented &&
        cg.cluster_of(Part::kCluster, u) == cg.cluster_of(Part::kCluster, v))
      return false;
  }
  return true;
}

TEST(ClusteredGraph, RandomOperationsKeepRecordsAndDerivedGraphs) {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 4 + trial % 9;
    ClusteredGraph cg(n);
    Replica mirror, contracted;
    for (int step = 0; step < 150; ++step) {
      const auto live = cg.graph().live_edges();
      const int op = static_cast<int>(rng() % 6);
      if (op <= 1 || live.empty()) {
        VertexId u = rng() % n, v = rng() % n;
        if (u == v) continue;
        // An intracluster edge may join two P1 clusters only when no
        // intercluster edge runs between them.
        const int cu = cg.cluster_of(Part::kPre, u), cv = cg.cluster_of(Part::kPre, v);
        bool joined = false;
        for (EdgeId f : cg.record(Part::kPre, cu).boundary_edges) {
          auto [a, b] = cg.graph().endpoints(f);
          joined |= cg.cluster_of(Part::kPre, a) == cv || cg.cluster_of(Part::kPre, b) == cv;
        }
        const int pu = cg.cluster_of(Part::kCluster, u), pv = cg.cluster_of(Part::kCluster, v);
        bool fragmented = false;
        for (EdgeId f : cg.graph().live_edges()) {
          auto [a, b] = cg.graph().endpoints(f);
          const int pa = cg.cluster_of(Part::kCluster, a), pb = cg.cluster_of(Part::kCluster, b);
          fragmented |= cg.graph().label(f) == L::kFragmented &&
                        ((pa == pu && pb == pv) || (pa == pv && pb == pu));
        }
        L l = fragmented ? L::kFragmented : L::kIntracluster;
        if (cu != cv && (joined || rng() % 2)) l = L::kIntercluster;
        cg.insert_edge(u, v, l);
      } else if (op == 2) {
        cg.delete_edge(live[rng() % live.size()]);
      } else {
        // Cut a random P1 cluster along a random subset, or revert or
        // fragment a random edge.
        const EdgeId e = live[rng() % live.size()];
        const L l = cg.graph().label(e);
        if (op == 3 && l == L::kIntracluster) {
          const auto ids = cg.clusters(Part::kPre);
          const int c = ids[rng() % ids.size()];
          std::vector<char> side(n, 0);
          for (VertexId x : cg.record(Part::kPre, c).members) side[x] = rng() % 2;
          std::vector<std::pair<EdgeId, L>> changes;
          for (EdgeId f : cg.graph().live_edges()) {
            auto [a, b] = cg.graph().endpoints(f);
            if (cg.graph().label(f) != L::kIntercluster && cg.cluster_of(Part::kPre, a) == c &&
                cg.cluster_of(Part::kPre, b) == c && side[a] != side[b])
              changes.emplace_back(f, L::kIntercluster);
          }
          cg.relabel(changes);
        } else if (op == 4 && l == L::kIntracluster) {
          // Fragment along a subset of the P2 cluster.
          auto [a0, b0] = cg.graph().endpoints(e);
          (void)b0;
          const int c = cg.cluster_of(Part::kCluster, a0);
          std::vector<char> side(n, 0);
          for (VertexId x : cg.record(Part::kCluster, c).members) side[x] = rng() % 2;
          std::vector<std::pair<EdgeId, L>> changes;
          for (EdgeId f : cg.graph().live_edges()) {
            auto [a, b] = cg.graph().endpoints(f);
            if (cg.graph().label(f) == L::kIntracluster && cg.cluster_of(Part::kCluster, a) == c &&
                side[a] != side[b])
              changes.emplace_back(f, L::kFragmented);
          }
          cg.relabel(changes);
        } else if (l == L::kFragmented) {
          // Revert every fragmented edge of the P1 cluster.
          const int c = cg.cluster_of(Part::kPre, cg.graph().endpoints(e).first);
          std::vector<std::pair<EdgeId, L>> changes;
          for (EdgeId f : cg.graph().live_edges())
            if (cg.graph().label(f) == L::kFragmented &&
                cg.cluster_of(Part::kPre, cg.graph().endpoints(f).first) == c)
              changes.emplace_back(f, L::kIntracluster);
          cg.relabel(changes);
        }
      }
      ASSERT_NO_THROW(cg.audit()) << trial << " " << step;
      for (Part p : {Part::kPre, Part::kCluster}) {
        const auto comp = recount(cg, p);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            ASSERT_EQ(cg.cluster_of(p, a) == cg.cluster_of(p, b), comp[a] == comp[b]);
      }
      ASSERT_TRUE(labels_consistent(cg));
      mirror.apply(cg.drain_mirror_ops());
      contracted.apply(cg.drain_contracted_ops());
      ASSERT_EQ(mirror.edges, expected_mirror(cg)) << trial << " " << step;
      ASSERT_EQ(contracted.edges, expected_contracted(cg));
    }
  }
}

TEST(ClusteredGraph, SplitWorkIsNearLinear) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 60;
    ClusteredGraph cg(n);
    std::vector<EdgeId> edges;
    for (int k = 0; k < 240; ++k) {
      VertexId u = rng() % n, v = rng() % n;
      if (u != v) edges.push_back(cg.insert_edge(u, v, L::kIntracluster));
    }
    const int64_t before = cg.split_work();
    std::shuffle(edges.begin(), edges.end(), rng);
    for (EdgeId e : edges) cg.delete_edge(e);
    const double mu = static_cast<double>(2 * edges.size());
    EXPECT_LE(static_cast<double>(cg.split_work() - before), 8.0 * mu * std::log2(mu));
  }
}

}  // namespace
}  // namespace mincut
