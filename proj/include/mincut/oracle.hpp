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

// Brute-force reference implementations. Everything here favours obvious
// correctness over speed and is used as ground truth by the tests and by
// the base case of the dynamic driver.

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mincut/types.hpp"

namespace mincut {

struct OracleResult {
  bool found = false;  // false: no proper cut exists (no edges)
  int64_t value = 0;
  VertexSet witness;  // one side of the cut, sorted
};

// Minimum cut of the whole graph by Stoer-Wagner. Returns value 0 with a
// component as witness when the graph is disconnected. Needs n >= 2.
OracleResult stoer_wagner(const EdgeList& g);
// Same on a symmetric matrix of edge multiplicities (diagonal ignored).
OracleResult stoer_wagner(const std::vector<std::vector<int64_t>>& multiplicity);

// Weighted Stoer-Wagner on a dense matrix; used by the weighted front end.
struct WeightedEdge {
  int u = 0;
  int v = 0;
  double w = 0.0;
};
double weighted_min_cut(int n, const std::vector<WeightedEdge>& edges,
                        VertexSet* witness = nullptr);

// Smallest non-zero cut: Stoer-Wagner on every component with at least two
// vertices. found == false when the graph has no edges.
OracleResult min_proper_cut(const EdgeList& g);

// Global minimum cut, 0 when disconnected (n >= 2).
OracleResult global_min_cut(const EdgeList& g);

int64_t cut_size(const EdgeList& g, const VertexSet& s);
int64_t volume(const EdgeList& g, const VertexSet& s);
bool induces_connected(const EdgeList& g, const VertexSet& s);

// All S containing v with cut size <= lambda_max and volume <= nu. With
// connected_only the induced subgraph must be connected and a frontier
// recursion is used; otherwise every subset is scanned (n <= 24).
// Sorted lexicographically.
std::vector<VertexSet> enumerate_cuts(const EdgeList& g, VertexId v, int64_t lambda_max,
                                      int64_t nu, bool connected_only);

// Connected S strictly inside cluster c (connected in G[c]) with vol(S) <= nu,
// lambda_min <= w(S, c\S) <= lambda_max and (1-delta)-boundary sparse in c.
std::vector<VertexSet> enumerate_sparse_cuts(const EdgeList& g, const VertexSet& cluster,
                                             Rational delta, int64_t lambda_max, int64_t nu,
                                             int64_t lambda_min = 0);

// Direct evaluation of boundary sparsity of s inside c.
bool oracle_is_sparse(const EdgeList& g, const VertexSet& cluster, const VertexSet& s,
                      Rational delta);

// Calls visit(S) for every connected vertex set S of `allowed` (a 0/1 mask
// over vertices) containing `root` and no allowed vertex below `root` when
// `root_is_minimum`. Prunes when vol(S) > max_volume or when the edges from S
// to already excluded vertices exceed max_cut.
void for_each_connected_set(const EdgeList& g, const std::vector<char>& allowed, VertexId root,
                            bool root_is_minimum, int64_t max_volume, int64_t max_cut,
                            const std::function<void(const VertexSet&)>& visit);

}  // namespace mincut
