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


// Acceptance runner. Each criterion prints one PASS or FAIL line; the exit
// status is nonzero when any criterion fails. Every check compares against
// an independent oracle (Stoer-Wagner, subset scans or a from-scratch
// rebuild).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mincut/driver.hpp"
#include "mincut/fragment.hpp"
#include "mincut/localkcut.hpp"
#include "mincut/mirrorcuts.hpp"
#include "mincut/oracle.hpp"
#include "mincut/packing.hpp"
#include "mincut/replay.hpp"
#include "mincut/splitter.hpp"
#include "mincut/streams.hpp"
#include "mincut/weighted.hpp"
#include "support/checks.hpp"

namespace mincut {
namespace {

using Clock = std::chrono::steady_clock;

// Running FNV-1a over everything a pipeline produces.
class Digest {
 public:
  void add(int64_t x) { hash_ = fnv1a(hash_, &x, sizeof x); }
  void add(const VertexSet& s) {
    add(static_cast<int64_t>(s.size()));
    for (VertexId v : s) add(static_cast<int64_t>(v));
  }
  uint64_t value() const { return hash_; }

 private:
  uint64_t hash_ = 14695981039346656037ull;
};

struct Outcome {
  bool pass = true;
  std::string detail;
  uint64_t digest = 0;
  double seconds = 0;
};

template <typename... Args>
std::string format(const char* fmt, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// --- dynamic streams (exactness and invariant audit) ------------------------

struct StreamOutcomes {
  Outcome exact;
  Outcome audit;
};

// Largest n in {40, 36, ..., 12} whose planted graph leaves room for the
// stream to drift without exceeding 150 edges.
int stream_size(int64_t lambda, uint64_t seed) {
  for (int n = 40; n > 12; n -= 4)
    if (planted_graph(n, lambda, seed).m() <= 135) return n;
  return 12;
}

StreamOutcomes dynamic_streams() {
  StreamOutcomes out;
  const auto start = Clock::now();
  Digest exact_digest, audit_digest;
  int64_t checks = 0, mismatches = 0, max_m = 0, levels = 0, violations = 0;
  std::string first_bad;
  for (int s = 0; s < 20; ++s) {
    const int64_t lambda = 1 + s % 12;
    const uint64_t seed = 1000 + s;
    const int n = stream_size(lambda, seed);
    const EdgeList g0 = planted_graph(n, lambda, seed);
    DriverConfig config;
    config.decomposer = s % 2 ? "conductance" : "trivial";
    config.self_check = true;
    DynamicMinCut dm(n, config);
    dm.build(g0);
    EdgeList mirror = g0;
    const auto stream = planted_stream(g0, 200, seed * 7 + 1);
    for (size_t step = 0; step <= stream.size(); ++step) {
      if (step > 0) {
        dm.apply(stream[step - 1]);
        apply_updates(mirror, stream[step - 1]);
      }
      max_m = std::max<int64_t>(max_m, mirror.m());
      const OracleResult truth = global_min_cut(mirror);
      const MinCutAnswer& a = dm.query();
      bool ok;
      if (truth.value == 0) {
        ok = a.kind == MinCutAnswer::Kind::kDisconnected && a.value == 0;
      } else {
        ok = a.kind == MinCutAnswer::Kind::kValue && a.value == truth.value &&
             !a.witness.empty() && static_cast<int>(a.witness.size()) < n &&
             cut_size(mirror, a.witness) == a.value;
      }
      ++checks;
      if (!ok && ++mismatches == 1)
        first_bad = format("stream %d step %zu: got %lld want %lld", s, step,
                           static_cast<long long>(a.value), static_cast<long long>(truth.value));
      exact_digest.add(static_cast<int64_t>(a.kind));
      exact_digest.add(a.value);
      exact_digest.add(a.witness);

      // Every level instance that is current after this mutation.
      const RangeLadder& ladder = dm.ladder();
      for (int i = 0; i < static_cast<int>(ladder.ranges().size()); ++i) {
        if (!ladder.instance(i) || ladder.last_update(i) != ladder.time()) continue;
        ladder.instance(i)->visit([&](const LevelInstance& level) {
          const ClusterDecomposition* dec = level.decomposition();
          if (!dec) return;
          ++levels;
          const int64_t bad = static_cast<int64_t>(dec->invariant_violations().size());
          violations += bad;
          audit_digest.add(bad);
        });
      }
    }
  }
  out.exact.pass = mismatches == 0 && max_m <= 150;
  out.exact.detail = format("%lld checks on 20 streams, %lld mismatches, max m %lld",
                            static_cast<long long>(checks), static_cast<long long>(mismatches),
                            static_cast<long long>(max_m));
  if (!first_bad.empty()) out.exact.detail += "; first: " + first_bad;
  out.exact.digest = exact_digest.value();
  out.audit.pass = violations == 0 && levels > 0;
  out.audit.detail = format("%lld level audits, %lld checked sparse cuts",
                            static_cast<long long>(levels), static_cast<long long>(violations));
  out.audit.digest = audit_digest.value();
  out.exact.seconds = out.audit.seconds = since(start);
  return out;
}

// --- LocalKCut ---------------------------------------------------------------

LocalKCut build_lkc(const EdgeList& g, int64_t lambda_max, int64_t nu, int beta) {
  LocalKCut lkc(g.n, lambda_max, nu, beta);
  std::vector<EdgeId> ids;
  std::vector<std::pair<VertexId, VertexId>> ends;
  for (int e = 0; e < g.m(); ++e) {
    ids.push_back(e);
    ends.push_back(g.edges[e]);
  }
  lkc.build(ids, ends);
  return lkc;
}

// All connected vertex sets of g with their boundary and volume, by a scan
// over bitmasks.
struct SubsetTable {
  std::vector<uint32_t> sets;
  std::vector<int64_t> cut, vol;
};

SubsetTable connected_subsets(const EdgeList& g) {
  std::vector<uint32_t> adj(g.n, 0);
  std::vector<int64_t> deg(g.n, 0);
  for (auto [u, v] : g.edges) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
    ++deg[u];
    ++deg[v];
  }
  SubsetTable t;
  for (uint32_t mask = 1; mask < (1u << g.n); ++mask) {
    uint32_t reach = mask & (~mask + 1), frontier = reach;
    while (frontier) {
      uint32_t next = 0;
      for (uint32_t f = frontier; f; f &= f - 1) next |= adj[__builtin_ctz(f)];
      next &= mask & ~reach;
      reach |= next;
      frontier = next;
    }
    if (reach != mask) continue;
    int64_t c = 0, vol = 0;
    for (auto [u, v] : g.edges) c += ((mask >> u) ^ (mask >> v)) & 1u;
    for (int x = 0; x < g.n; ++x)
      if (mask >> x & 1u) vol += deg[x];
    t.sets.push_back(mask);
    t.cut.push_back(c);
    t.vol.push_back(vol);
  }
  return t;
}

VertexSet members(uint32_t mask) {
  VertexSet s;
  for (int x = 0; mask; ++x, mask >>= 1)
    if (mask & 1u) s.push_back(x);
  return s;
}

Outcome localkcut_oracle() {
  Outcome out;
  const auto start = Clock::now();
  Digest digest;
  std::mt19937 rng(4242);
  int64_t queries = 0, unsound = 0, incomplete = 0, binding = 0;
  for (int t = 0; t < 200; ++t) {
    // One graph in four uses beta = 2 so the forest condition binds.
    const bool binds = t % 4 == 3;
    const int beta = binds ? 2 : 8;
    const int n = binds ? 4 + static_cast<int>(rng() % 6) : 3 + static_cast<int>(rng() % 10);
    const int64_t lambda_max = binds ? 5 + static_cast<int64_t>(rng() % 3)
                                     : 8 + static_cast<int64_t>(rng() % 9);
    const EdgeList g =
        testing::random_graph_with_min_cut(rng, n, (lambda_max + beta - 1) / beta);
    const int64_t lambda = global_min_cut(g).value;
    const int64_t nu = 4 * lambda_max;
    const LocalKCut lkc = build_lkc(g, lambda_max, nu, beta);
    binding += !lkc.forest_test_implied();
    const SubsetTable table = connected_subsets(g);
    for (VertexId v = 0; v < n; ++v) {
      const auto got = lkc.query(v);
      ++queries;
      std::vector<VertexSet> sound, required;
      for (size_t k = 0; k < table.sets.size(); ++k) {
        if (!(table.sets[k] >> v & 1u) || table.cut[k] > lambda_max || table.vol[k] > nu) continue;
        const VertexSet s = members(table.sets[k]);
        bool crossed_lightly = lkc.forest_test_implied();
        for (int i = 0; !crossed_lightly && i < lkc.packing().size(); ++i)
          crossed_lightly = lkc.packing().respects_count(s, i) <= 2 * beta;
        if (crossed_lightly) sound.push_back(s);
        if (table.cut[k] <= beta * lambda) required.push_back(s);
      }
      std::sort(sound.begin(), sound.end());
      if (got != sound) ++unsound;
      for (const auto& s : required)
        if (!std::binary_search(got.begin(), got.end(), s)) {
          ++incomplete;
          break;
        }
      digest.add(static_cast<int64_t>(got.size()));
      for (const auto& s : got) digest.add(s);
    }
  }
  out.pass = unsound == 0 && incomplete == 0 && binding > 0;
  out.detail = format("%lld queries on 200 graphs (%lld with a binding forest test), "
                      "%lld differ from the filter, %lld miss a required set",
                      static_cast<long long>(queries), static_cast<long long>(binding),
                      static_cast<long long>(unsound), static_cast<long long>(incomplete));
  out.digest = digest.value();
  out.seconds = since(start);
  return out;
}

// --- tree packing ------------------------------------------------------------

Outcome packing_respects() {
  Outcome out;
  const auto start = Clock::now();
  Digest digest;
  std::mt19937 rng(99);
  const int beta = 8;
  const double eps = 1.0 / (3.0 * beta);
  const int threshold = static_cast<int>(std::floor(2 * (1 + eps) * beta));
  int64_t cuts = 0, missed = 0, worst = 0, forests = 0;
  for (int t = 0; t < 50; ++t) {
    const int n = 4 + static_cast<int>(rng() % 7);
    const int64_t target = 1 + static_cast<int64_t>(rng() % 4);
    EdgeList g(n);
    int64_t lambda = 0;
    do {
      g = testing::random_graph_with_min_cut(rng, n, target);
      lambda = global_min_cut(g).value;
    } while (lambda > 4);
    const int k = ForestPacking::forest_count(lambda, g.m(), eps);
    forests = std::max<int64_t>(forests, k);
    ForestPacking packing;
    std::vector<EdgeId> ids;
    for (int e = 0; e < g.m(); ++e) ids.push_back(e);
    packing = ForestPacking(n, k);
    packing.build(n, ids, g.edges);
    // Cuts are taken with vertex 0 inside, which names each cut once.
    for (uint32_t mask = 1; mask + 1 < (1u << n); mask += 2) {
      const VertexSet s = members(mask);
      if (cut_size(g, s) > beta * lambda) continue;
      ++cuts;
      int best = packing.respects_count(s, 0);
      for (int i = 1; i < k && best > threshold; ++i)
        best = std::min(best, packing.respects_count(s, i));
      worst = std::max<int64_t>(worst, best);
      if (best > threshold) ++missed;
      digest.add(best);
    }
  }
  out.pass = missed == 0;
  out.detail = format("%lld approximate cuts, up to %lld forests, worst respects %lld <= %d, "
                      "%lld missed",
                      static_cast<long long>(cuts), static_cast<long long>(forests),
                      static_cast<long long>(worst), threshold, static_cast<long long>(missed));
  out.digest = digest.value();
  out.seconds = since(start);
  return out;
}

Outcome packing_changes() {
  Outcome out;
  const auto start = Clock::now();
  Digest digest;
  std::mt19937 rng(1234);
  const int n = 14, k = 10;
  ForestPacking packing(n, k);
  std::map<EdgeId, std::pair<VertexId, VertexId>> live;
  EdgeId next = 0;
  int64_t over = 0, rebuild_mismatch = 0, worst_excess = -k;
  for (int step = 0; step < 10000; ++step) {
    std::vector<ChangeSet> cs;
    if (!live.empty() && (live.size() >= 60 || rng() % 2)) {
      auto it = live.begin();
      std::advance(it, rng() % live.size());
      cs = packing.erase(it->first);
      live.erase(it);
    } else {
      VertexId u = rng() % n, v = rng() % n;
      while (v == u) v = rng() % n;
      live[next] = {u, v};
      cs = packing.insert(next++, u, v);
    }
    for (int i = 0; i < k; ++i) {
      const int64_t size = static_cast<int64_t>(cs[i].size());
      worst_excess = std::max<int64_t>(worst_excess, size - (i + 1));
      if (size > i + 1) ++over;
      digest.add(size);
    }
    // A static rebuild must agree with the maintained forests.
    if (step % 500 == 499) {
      std::vector<EdgeId> ids;
      std::vector<std::pair<VertexId, VertexId>> ends;
      for (auto& [id, e] : live) {
        ids.push_back(id);
        ends.push_back(e);
      }
      ForestPacking fresh(n, k);
      fresh.build(n, ids, ends);
      for (int i = 0; i < k; ++i)
        if (fresh.forest(i).forest_edges() != packing.forest(i).forest_edges()) ++rebuild_mismatch;
    }
  }
  out.pass = over == 0 && rebuild_mismatch == 0;
  out.detail = format("10000 updates on %d forests, %lld over the bound (max excess %lld), "
                      "%lld forests differ from a rebuild",
                      k, static_cast<long long>(over), static_cast<long long>(worst_excess),
                      static_cast<long long>(rebuild_mismatch));
  out.digest = digest.value();
  out.seconds = since(start);
  return out;
}

// --- splitters ---------------------------------------------------------------

Outcome splitter_covering() {
  Outcome out;
  const auto start = Clock::now();
  Digest digest;
  int64_t families = 0, failures = 0;
  for (int n = 0; n <= 12; ++n)
    for (int a = 0; a <= std::min(n, 6); ++a)
      for (int b = 0; b <= std::min(n, 6 - a); ++b) {
        const ColoringFamily f(n, a, b);
        ++families;
        if (!testing::covers_exhaustively(f)) ++failures;
        digest.add(f.size());
      }
  std::mt19937 rng(77);
  ColoringFamily f(12, 3, 3);
  std::set<EdgeId> live;
  EdgeId next = 0;
  int64_t collisions = 0, checks = 0;
  for (int step = 0; step < 1000; ++step) {
    if (live.size() < 6 && (live.empty() || rng() % 2)) {
      f.assign_slot(next);
      live.insert(next++);
    } else {
      auto it = live.begin();
      std::advance(it, rng() % live.size());
      f.free_slot(*it);
      live.erase(it);
    }
    std::set<int> used;
    for (EdgeId e : live) {
      const int s = f.slot_of(e);
      if (s < 0 || s >= f.universe() || !used.insert(s).second) ++collisions;
      digest.add(s);
    }
    if (step % 100 == 99) {
      ++checks;
      if (!testing::covers_exhaustively(f)) ++failures;
    }
  }
  out.pass = failures == 0 && collisions == 0;
  out.detail = format("%lld families plus %lld checks over 1000 interleavings, %lld not "
                      "covering, %lld slot collisions",
                      static_cast<long long>(families), static_cast<long long>(checks),
                      static_cast<long long>(failures), static_cast<long long>(collisions));
  out.digest = digest.value();
  out.seconds = since(start);
  return out;
}

// --- fragmenting ---------------------------------------------------------------

Outcome fragmenting() {
  Outcome out;
  const auto start = Clock::now();
  Digest digest;
  std::mt19937 rng(6);
  int64_t grouping = 0, partition = 0, growth = 0, over_bound = 0, parts = 0, splits = 0;
  const Rational delta{1, 25};
  for (int t = 0; t < 50; ++t) {
    const auto in = testing::random_cluster_instance(rng);
    const int64_t nu = 2 * in.g.m();
    std::vector<char> inside(in.g.n, 0);
    for (VertexId v : in.c) inside[v] = 1;
    LocalKCut lkc(in.g.n, in.lambda_max, nu, 8);
    std::vector<EdgeId> ids;
    std::vector<std::pair<VertexId, VertexId>> ends;
    DynMultiGraph dg(in.g.n);
    for (int e = 0; e < in.g.m(); ++e) {
      const auto [u, v] = in.g.edges[e];
      dg.insert_edge(u, v);
      if (inside[u] == inside[v]) {
        ids.push_back(e);
        ends.push_back(in.g.edges[e]);
      }
    }
    lkc.build(ids, ends);
    FragmentParams p;
    p.lambda_max = in.lambda_max;
    p.lambda_min = (5 * in.lambda_max + 5) / 6;
    p.nu = nu;
    p.delta = delta;
    const FragmentResult r = fragment(dg, in.c, lkc, p);
    parts += static_cast<int64_t>(r.parts.size());
    splits += static_cast<int64_t>(r.parts.size()) - 1;
    if (!r.within_count_bound) ++over_bound;
    if (!testing::fragment_property_holds(in.g, in.c, r.parts, in.lambda_max, nu, delta))
      ++grouping;
    VertexSet all;
    for (const auto& part : r.parts) all.insert(all.end(), part.begin(), part.end());
    std::sort(all.begin(), all.end());
    if (all != in.c) ++partition;
    const int64_t bc = cut_size(in.g, in.c);
    for (const auto& part : r.parts) {
      if (cut_size(in.g, part) > bc) ++growth;
      digest.add(part);
    }
  }
  out.pass = grouping == 0 && partition == 0 && growth == 0 && splits > 0;
  out.detail = format("50 clusters, %lld fragments (%lld splits), grouping failures %lld, "
                      "partition errors %lld, boundary increases %lld, soft count bound "
                      "exceeded %lld",
                      static_cast<long long>(parts), static_cast<long long>(splits),
                      static_cast<long long>(grouping), static_cast<long long>(partition),
                      static_cast<long long>(growth), static_cast<long long>(over_bound));
  out.digest = digest.value();
  out.seconds = since(start);
  return out;
}

// --- mirror cuts ---------------------------------------------------------------

// Smallest proper local cut containing each real vertex, by enumeration.
std::vector<int64_t> mirror_oracle(const MirrorCutStore& store) {
  const EdgeList g = store.local_kcut().graph().to_edge_list();
  std::vector<int64_t> best(store.num_real(), kUnbounded);
  for (VertexId v = 0; v < store.num_real(); ++v)
    for (const VertexSet& s : enumerate_cuts(g, v, store.lambda_max(), store.nu(), true)) {
      const int64_t c = cut_size(g, s);
      if (c > 0) best[v] = std::min(best[v], c);
    }
  return best;
}

Outcome mirror_cuts() {
  Outcome out;
  const auto start = Clock::now();
  Digest digest;
  std::mt19937_64 rng(20261014);
  int64_t batches = 0, wrong = 0, max_vol = 0;
  auto check = [&](const MirrorCutStore& store) {
    store.audit();
    const auto best = mirror_oracle(store);
    for (VertexId v = 0; v < store.num_real(); ++v) {
      if (store.value_of(v) != best[v]) ++wrong;
      digest.add(store.value_of(v));
    }
    max_vol = std::max<int64_t>(max_vol, 2 * store.local_kcut().graph().num_edges());
  };
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 6 + static_cast<int>(rng() % 7);
    const int real = n - static_cast<int>(rng() % 3);
    const int64_t lambda_max = 1 + static_cast<int64_t>(rng() % 4);
    const int64_t nu = 4 * lambda_max + static_cast<int64_t>(rng() % 8);
    MirrorCutStore store(n, real, lambda_max, nu, 8);
    std::map<EdgeId, std::pair<VertexId, VertexId>> live;
    EdgeId next = 0;
    auto random_edge = [&]() {
      VertexId u = static_cast<VertexId>(rng() % n), v = static_cast<VertexId>(rng() % n);
      while (v == u) v = static_cast<VertexId>(rng() % n);
      return std::make_pair(u, v);
    };
    std::vector<EdgeOp> initial;
    for (int k = 0; k < n + static_cast<int>(rng() % n); ++k) {
      auto [u, v] = random_edge();
      live[next] = {u, v};
      initial.push_back({EdgeOp::Kind::kInsert, next++, u, v});
    }
    store.build(initial);
    check(store);
    for (int step = 0; step < 15; ++step) {
      std::vector<EdgeOp> deletions, insertions;
      const int size = 1 + static_cast<int>(rng() % 3);
      for (int k = 0; k < size; ++k) {
        if (!live.empty() && rng() % 2) {
          auto it = live.begin();
          std::advance(it, rng() % live.size());
          deletions.push_back({EdgeOp::Kind::kDelete, it->first, it->second.first,
                               it->second.second});
          live.erase(it);
        } else {
          auto [u, v] = random_edge();
          insertions.push_back({EdgeOp::Kind::kInsert, next++, u, v});
        }
      }
      for (const EdgeOp& op : insertions) live[op.id] = {op.u, op.v};
      deletions.insert(deletions.end(), insertions.begin(), insertions.end());
      store.batch_update(deletions);
      ++batches;
      check(store);
    }
  }
  out.pass = wrong == 0 && max_vol <= 200;
  out.detail = format("50 streams, %lld batches, %lld wrong stored values, max volume %lld",
                      static_cast<long long>(batches), static_cast<long long>(wrong),
                      static_cast<long long>(max_vol));
  out.digest = digest.value();
  out.seconds = since(start);
  return out;
}

// --- weighted ------------------------------------------------------------------

// Connected graph on n vertices: a random spanning tree plus extra edges,
// weights drawn from [wmin, wmax].
std::vector<WeightedEdge> random_weighted_graph(std::mt19937_64& rng, int n, double wmin,
                                                double wmax) {
  std::uniform_real_distribution<double> weight(wmin, wmax);
  std::vector<WeightedEdge> edges;
  for (int v = 1; v < n; ++v)
    edges.push_back({static_cast<VertexId>(rng() % v), v, weight(rng)});
  const int extra = n + static_cast<int>(rng() % (2 * n));
  for (int k = 0; k < extra; ++k) {
    VertexId u = static_cast<VertexId>(rng() % n), v = static_cast<VertexId>(rng() % n);
    while (v == u) v = static_cast<VertexId>(rng() % n);
    edges.push_back({u, v, weight(rng)});
  }
  return edges;
}

Outcome weighted_approximation() {
  Outcome out;
  const auto start = Clock::now();
  const double eps = 0.5, bound = std::pow(1 + eps, 4);
  std::mt19937_64 rng(31337);
  int good = 0;
  int64_t answers = 0;
  double worst = 1.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 10 + static_cast<int>(rng() % 16);
    WeightedConfig config;
    config.epsilon = eps;
    config.wmin = 1.0;
    config.wmax = 8.0;
    config.seed = 5000 + trial;
    auto edges = random_weighted_graph(rng, n, config.wmin, config.wmax);
    WeightedMinCut wm(n, config);
    wm.build(edges);
    std::map<EdgeId, WeightedEdge> live;
    for (size_t e = 0; e < edges.size(); ++e) live[static_cast<EdgeId>(e)] = edges[e];
    // The trial passes when the answer after the build and after each of
    // five updates is within the factor.
    bool ok = true;
    std::uniform_real_distribution<double> weight(config.wmin, config.wmax);
    for (int step = 0; step <= 5; ++step) {
      if (step > 0) {
        if (step % 2) {
          auto it = live.begin();
          std::advance(it, rng() % live.size());
          wm.erase(it->first);
          live.erase(it);
        } else {
          VertexId u = static_cast<VertexId>(rng() % n), v = static_cast<VertexId>(rng() % n);
          while (v == u) v = static_cast<VertexId>(rng() % n);
          const double w = weight(rng);
          live[wm.insert(u, v, w)] = {u, v, w};
        }
      }
      std::vector<WeightedEdge> current;
      for (auto& [id, e] : live) current.push_back(e);
      const double truth = weighted_min_cut(n, current, nullptr);
      const WeightedAnswer& a = wm.query();
      ++answers;
      if (truth == 0) {
        ok &= a.kind == WeightedAnswer::Kind::kDisconnected;
        continue;
      }
      if (a.kind != WeightedAnswer::Kind::kValue) {
        ok = false;
        continue;
      }
      const double ratio = std::max(a.value / truth, truth / a.value);
      worst = std::max(worst, ratio);
      ok &= ratio <= bound;
    }
    good += ok;
  }
  out.pass = good >= 48;
  out.detail = format("%d of 50 trials within %.4f (%lld answers, worst ratio %.4f)", good, bound,
                      static_cast<long long>(answers), worst);
  out.seconds = since(start);
  return out;
}

void report(const char* id, const Outcome& o, bool* all) {
  std::printf("%s %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", id, o.detail.c_str(), o.seconds);
  std::fflush(stdout);
  *all &= o.pass;
}

}  // namespace
}  // namespace mincut

int main() {
  using namespace mincut;
  bool all = true;
  std::vector<std::function<std::vector<Outcome>()>> pipelines = {
      [] {
        auto s = dynamic_streams();
        return std::vector<Outcome>{s.exact, s.audit};
      },
      [] { return std::vector<Outcome>{localkcut_oracle()}; },
      [] { return std::vector<Outcome>{packing_respects()}; },
      [] { return std::vector<Outcome>{packing_changes()}; },
      [] { return std::vector<Outcome>{splitter_covering()}; },
      [] { return std::vector<Outcome>{fragmenting()}; },
      [] { return std::vector<Outcome>{mirror_cuts()}; },
  };
  // Criterion ids in the order the pipelines produce them.
  const char* ids[] = {"C1 exact dynamic mincut", "C7 invariant audit",
                       "C2 LocalKCut soundness and completeness", "C3 tree-packing respects",
                       "C4 forest change bound", "C5 splitter covering",
                       "C6 fragmenting contract", "C8 mirror cut exactness"};
  std::vector<Outcome> first;
  for (auto& p : pipelines)
    for (const Outcome& o : p()) {
      report(ids[first.size()], o, &all);
      first.push_back(o);
    }
  report("C9 weighted approximation", weighted_approximation(), &all);

  const auto start = Clock::now();
  std::vector<Outcome> second;
  for (auto& p : pipelines)
    for (const Outcome& o : p()) second.push_back(o);
  Outcome det;
  int differing = 0;
  for (size_t i = 0; i < first.size(); ++i)
    if (first[i].digest != second[i].digest || first[i].pass != second[i].pass) ++differing;
  det.pass = differing == 0;
  det.detail = format("%zu pipeline digests compared across two runs, %d differ", first.size(),
                      differing);
  det.seconds = since(start);
  report("C10 determinism", det, &all);
  return all ? 0 : 1;
}
