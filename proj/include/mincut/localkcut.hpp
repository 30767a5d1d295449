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


// Local cut enumeration around a vertex on a dynamic graph.
//
// A query on v returns connected vertex sets S containing v with at most
// lambda_max boundary edges and volume at most nu. Completeness is
// guaranteed for the sets whose boundary is within a factor beta of the
// minimum cut: some forest of a greedy packing crosses each of them at most
// 2 beta times, and a red-blue / green-yellow coloring pair then isolates S
// as the component of v in the blue tree edges plus the green non-tree
// edges.
//
// Two engines evaluate the query. The literal engine materializes the two
// covering families and runs one bounded search per (forest, red-blue,
// green-yellow) triple. The closed-form engine uses the families of all
// subsets of size at most 2 beta, for which the union over colorings is
// exactly the set of connected S with at most 2 beta crossing edges of the
// forest. It enumerates those sets directly. When 2 beta >= lambda_max the
// forest condition is implied by the boundary bound and no packing is kept.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mincut/dyngraph.hpp"
#include "mincut/packing.hpp"
#include "mincut/splitter.hpp"
#include "mincut/types.hpp"

namespace mincut {

struct LocalKCutConfig {
  enum class Engine : uint8_t { kClosedForm, kLiteral };
  Engine engine = Engine::kClosedForm;
  // Upper bound on the number of forests; 0 uses the full count.
  int packing_cap = 0;
  // Keep a packing even when the forest condition is implied.
  bool force_packing = false;
  // Construction of the literal engine's families.
  ColoringFamily::Construction construction = ColoringFamily::Construction::kAuto;
  // Drop the forest condition from the closed-form engine. The output is
  // then every connected set within the boundary and volume bounds, which
  // contains the filtered output. Used when lambda_max is too large for a
  // full packing.
  bool forest_filter = true;
};

class LocalKCut {
 public:
  LocalKCut(int num_vertices, int64_t lambda_max, int64_t nu, int beta,
            LocalKCutConfig config = {});

  void add_vertices(int count);

  // Replaces the graph and rebuilds the packing statically.
  void build(const std::vector<EdgeId>& ids,
             const std::vector<std::pair<VertexId, VertexId>>& ends);
  void insert(EdgeId e, VertexId u, VertexId v);
  void erase(EdgeId e);

  // Sorted, duplicate-free list of sets; each set sorted.
  std::vector<VertexSet> query(VertexId v) const;

  int64_t lambda_max() const { return lambda_max_; }
  int64_t nu() const { return nu_; }
  int beta() const { return beta_; }
  double epsilon() const { return 1.0 / (3.0 * beta_); }
  // True when every set with boundary <= lambda_max crosses every forest at
  // most 2 beta times.
  bool forest_test_implied() const { return 2 * static_cast<int64_t>(beta_) >= lambda_max_; }

  const DynMultiGraph& graph() const { return graph_; }
  const ForestPacking& packing() const { return packing_; }
  bool has_packing() const { return packing_.size() > 0; }
  const ColoringFamily& red_blue() const { return red_blue_; }
  const ColoringFamily& green_yellow() const { return green_yellow_; }

  // Number of distinct forests in the packing.
  int distinct_forests() const;
  // Boundary edges of s crossing the forest with the given distinct index.
  int crossing(const VertexSet& s, int distinct_index) const;

  // Instrumentation.
  int64_t query_work() const { return query_work_; }
  int64_t update_work() const { return update_work_; }
  int packing_rebuilds() const { return packing_rebuilds_; }

 private:
  bool wants_packing() const;
  void rebuild_packing();
  void refresh_forests() const;
  bool crosses_some_forest_lightly(const std::vector<EdgeId>& boundary) const;
  std::vector<VertexSet> closed_form(VertexId v) const;
  std::vector<VertexSet> literal(VertexId v) const;

  int64_t lambda_max_;
  int64_t nu_;
  int beta_;
  LocalKCutConfig config_;

  DynMultiGraph graph_;
  ForestPacking packing_;
  int64_t packing_epoch_edges_ = 0;
  ColoringFamily red_blue_;
  ColoringFamily green_yellow_;

  // Distinct forests as bitsets over edge ids, rebuilt lazily.
  mutable bool forests_dirty_ = true;
  mutable std::vector<std::vector<uint64_t>> forest_bits_;

  mutable int64_t query_work_ = 0;
  int64_t update_work_ = 0;
  int packing_rebuilds_ = 0;
};

}  // namespace mincut
