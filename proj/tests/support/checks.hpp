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


// Exhaustive checkers shared by the unit tests and the acceptance runner.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "mincut/oracle.hpp"
#include "mincut/splitter.hpp"

namespace mincut::testing {

// Every disjoint (A, B) with |A| <= a, |B| <= b is split by some member of
// `family`. Only maximal pairs are tried; smaller pairs extend to one.
// Needs universe <= 20.
inline bool covers_exhaustively(const ColoringFamily& family) {
  const int n = family.universe();
  const int a = std::min(family.a(), n);
  std::vector<uint32_t> masks;
  for (int j = 0; j < family.size(); ++j) {
    uint32_t m = 0;
    for (int x = 0; x < n; ++x)
      if (family.contains(j, x)) m |= 1u << x;
    masks.push_back(m);
  }
  const uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  for (uint32_t A = 0; A <= full; ++A) {
    if (__builtin_popcount(A) != a) continue;
    const int b = std::min(family.b(), n - a);
    const uint32_t rest = full & ~A;
    // Enumerate B as subsets of rest with popcount b.
    for (uint32_t B = rest;; B = (B - 1) & rest) {
      if (__builtin_popcount(B) == b) {
        bool ok = false;
        for (uint32_t F : masks)
          if ((F & A) == A && (F & B) == 0) {
            ok = true;
            break;
          }
        if (!ok) return false;
      }
      if (B == 0) break;
    }
  }
  return true;
}

// Connected S containing v with cut <= lambda_max and volume <= nu, found by
// a scan over all subsets. Sorted.
inline std::vector<VertexSet> local_sets(const EdgeList& g, VertexId v, int64_t lambda_max,
                                         int64_t nu) {
  std::vector<VertexSet> out;
  for (auto& s : enumerate_cuts(g, v, lambda_max, nu, false))
    if (induces_connected(g, s)) out.push_back(std::move(s));
  return out;
}

// Random connected multigraph on n vertices whose minimum cut is at least
// `min_cut`: edges are added one at a time until the bound holds.
inline EdgeList random_graph_with_min_cut(std::mt19937& rng, int n, int64_t min_cut) {
  EdgeList g(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (n >= 2 && global_min_cut(g).value < min_cut) {
    for (int k = 0; k < n; ++k) {
      const int u = pick(rng), v = pick(rng);
      if (u != v) g.add(u, v);
    }
  }
  return g;
}

// Checks the grouping property of a fragmentation of c into `parts`: for
// every S inside c with vol(S) <= nu and cut at most lambda_max within G[c],
// the parts can be grouped so that S meets no group's union in a
// (1 - delta)-boundary-sparse set. Subset DP over groupings, 3^k.
// Needs |c| <= 20. Writes a failing S to `counterexample` when given.
inline bool fragment_property_holds(const EdgeList& g, const VertexSet& c,
                                    const std::vector<VertexSet>& parts, int64_t lambda_max,
                                    int64_t nu, Rational delta,
                                    VertexSet* counterexample = nullptr) {
  const int k = static_cast<int>(parts.size());
  EdgeList inner(g.n);
  std::vector<char> in_c(g.n, 0);
  for (VertexId v : c) in_c[v] = 1;
  for (const auto& [u, v] : g.edges)
    if (in_c[u] && in_c[v]) inner.add(u, v);
  std::vector<VertexSet> unions(1u << k);
  for (uint32_t mask = 1; mask < (1u << k); ++mask) {
    const int low = __builtin_ctz(mask);
    unions[mask] = unions[mask & (mask - 1)];
    unions[mask].insert(unions[mask].end(), parts[low].begin(), parts[low].end());
  }
  for (auto& u : unions) std::sort(u.begin(), u.end());
  const uint32_t full = (1u << k) - 1;
  for (uint32_t bits = 0; bits < (1u << c.size()); ++bits) {
    VertexSet s;
    for (size_t i = 0; i < c.size(); ++i)
      if (bits >> i & 1u) s.push_back(c[i]);
    if (volume(g, s) > nu || cut_size(inner, s) > lambda_max) continue;
    std::vector<char> good(1u << k, 0), ok(1u << k, 0);
    std::vector<char> in_s(g.n, 0);
    for (VertexId v : s) in_s[v] = 1;
    for (uint32_t mask = 1; mask <= full; ++mask) {
      VertexSet x;
      for (VertexId v : unions[mask])
        if (in_s[v]) x.push_back(v);
      good[mask] = !oracle_is_sparse(g, unions[mask], x, delta);
    }
    ok[0] = 1;
    for (uint32_t mask = 1; mask <= full; ++mask) {
      const uint32_t low = mask & (~mask + 1);
      // Groups containing the lowest part of mask.
      for (uint32_t sub = mask; sub; sub = (sub - 1) & mask)
        if ((sub & low) && good[sub] && ok[mask ^ sub]) {
          ok[mask] = 1;
          break;
        }
    }
    if (!ok[full]) {
      if (counterexample) *counterexample = s;
      return false;
    }
  }
  return true;
}

// A cluster c = {0..size-1} made of 2-3 dense groups chained by single
// edges, plus one outside vertex per group. Every group sends a few edges
// to its outside vertex, so sparse cuts along group borders are common.
// The boundary of c stays at most 6 lambda_max.
struct ClusterInstance {
  EdgeList g;
  VertexSet c;
  int64_t lambda_max = 0;
};

inline ClusterInstance random_cluster_instance(std::mt19937& rng) {
  ClusterInstance in;
  const int size = 5 + static_cast<int>(rng() % 5);
  in.lambda_max = 3 + static_cast<int64_t>(rng() % 4);
  const int groups = 2 + static_cast<int>(rng() % 2);
  in.g = EdgeList(size + groups);
  for (int v = 0; v < size; ++v) in.c.push_back(v);
  std::vector<int> group(size);
  for (int v = 0; v < size; ++v) group[v] = v * groups / size;
  for (int u = 0; u < size; ++u)
    for (int v = u + 1; v < size; ++v) {
      int copies = 0;
      if (group[u] == group[v])
        copies = 1 + static_cast<int>(rng() % 3);
      else if (v == u + 1 || rng() % 8 == 0)
        copies = 1;
      for (int k = 0; k < copies; ++k) in.g.add(u, v);
    }
  int64_t boundary = 0;
  for (int v = 0; v < size && boundary < 6 * in.lambda_max; ++v) {
    const int copies = static_cast<int>(rng() % 4);
    for (int k = 0; k < copies && boundary < 6 * in.lambda_max; ++k, ++boundary)
      in.g.add(v, size + (rng() % 5 == 0 ? static_cast<int>(rng() % groups) : group[v]));
  }
  if (boundary == 0) in.g.add(0, size);
  for (int j = 0; j + 1 < groups; ++j)
    for (int k = 0; k < 2; ++k) in.g.add(size + j, size + j + 1);
  return in;
}

}  // namespace mincut::testing
