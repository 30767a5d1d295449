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


// Fragmenting a low-boundary cluster.
//
// The candidate family is the union of the local cuts found around every
// vertex of C incident to a boundary edge. Trim then splits recursively:
// candidates that are not (1 - delta)-boundary-sparse in the current piece
// are dropped, a candidate with internal cut at most 0.4 lambda_max is cut
// first, otherwise the most unbalanced candidate by cardinality. Each split
// recurses on both sides with the family intersected with that side.

#pragma once

#include <cstdint>
#include <vector>

#include "mincut/dyngraph.hpp"
#include "mincut/localkcut.hpp"
#include "mincut/types.hpp"

namespace mincut {

struct FragmentParams {
  int64_t lambda_min = 1;
  int64_t lambda_max = 1;
  int64_t nu = 1;
  Rational delta{1, 25};
  int beta = 8;
  // Constant of the reported fragment-count bound K / delta^2 * log2(|C|+1)^2.
  double count_constant = 1.0;
  // Check the minimum cut and boundary preconditions with the oracle.
  bool audit = true;
};

struct TrimStats {
  int low_cut_splits = 0;     // splits along a candidate with small internal cut
  int unbalanced_splits = 0;  // splits along the most unbalanced candidate
  int pruned = 0;             // candidates dropped as not sparse
  // Splits whose sides did not shrink the boundary by the expected margin.
  // These bounds assume the graph's minimum cut is at least lambda_min.
  int boundary_margin_misses = 0;
  int max_depth = 0;
};

struct FragmentResult {
  std::vector<VertexSet> parts;       // partition of C, each sorted, in lexicographic order
  std::vector<VertexSet> candidates;  // root family after restriction to C
  TrimStats stats;
  double count_bound = 0.0;
  bool within_count_bound = true;
};

// Trim on piece c with family `candidates` (subsets of c; others are
// intersected with c). Returns the pieces in lexicographic order.
std::vector<VertexSet> trim(const DynMultiGraph& g, const VertexSet& c,
                            std::vector<VertexSet> candidates, const FragmentParams& params,
                            TrimStats* stats = nullptr);

// Full fragmenting run on cluster c using `lkc` for the candidate family.
// With params.audit, throws std::invalid_argument when the minimum cut of
// G[c] is below ceil(lambda_max / beta) or the boundary exceeds
// 6 lambda_max.
FragmentResult fragment(const DynMultiGraph& g, const VertexSet& c, const LocalKCut& lkc,
                        const FragmentParams& params);

// Vertices of c incident to an edge leaving c, in increasing order.
std::vector<VertexId> boundary_vertices(const DynMultiGraph& g, const VertexSet& c);

}  // namespace mincut
