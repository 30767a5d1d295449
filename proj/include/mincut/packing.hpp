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


#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mincut/msf.hpp"
#include "mincut/types.hpp"

namespace mincut {

// Greedy forest packing: forest i is the unique minimum spanning forest
// under the loads left by forests 0..i-1, where the load of an edge is the
// number of earlier forests containing it. Forest indices are 0-based here,
// so forest i changes at most i+1 edges per update.
class ForestPacking {
 public:
  ForestPacking() = default;
  ForestPacking(int num_vertices, int forests);

  // ceil(6 lambda ln m / epsilon^2), at least 1; capped when cap > 0.
  static int forest_count(int64_t lambda, int64_t m, double epsilon, int cap = 0);

  // Static greedy construction, one Kruskal run per forest.
  void build(int num_vertices, const std::vector<EdgeId>& ids,
             const std::vector<std::pair<VertexId, VertexId>>& ends);

  std::vector<ChangeSet> insert(EdgeId e, VertexId u, VertexId v);
  std::vector<ChangeSet> erase(EdgeId e);

  int size() const { return static_cast<int>(forests_.size()); }
  int num_vertices() const { return num_vertices_; }
  void add_vertices(int count);
  const DynamicMsf& forest(int i) const { return forests_[i]; }
  bool in_forest(int i, EdgeId e) const { return forests_[i].in_forest(e); }

  // Number of forests 0..i containing e.
  int64_t load(EdgeId e, int i) const;

  // Forest-i edges with exactly one endpoint in s.
  int respects_count(const VertexSet& s, int i) const;

 private:
  std::vector<ChangeSet> cascade(EdgeId e, VertexId u, VertexId v, bool inserting);

  int num_vertices_ = 0;
  std::vector<DynamicMsf> forests_;
  // loads_[e][i] = number of forests 0..i containing e; empty when e is absent.
  std::vector<std::vector<int32_t>> loads_;
};

}  // namespace mincut
