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


// Dynamic minimum spanning forest with a unique optimum. Edges are ordered
// by (weight, edge id), so the forest is a function of the current edge
// set and weights alone. Updates repair the forest locally: insertions
// and weight decreases use the tree path between the endpoints, deletions
// and weight increases scan the smaller side of the split.

#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "mincut/types.hpp"

namespace mincut {

// Net change of a forest edge set across one operation.
struct ChangeSet {
  std::vector<EdgeId> entered;
  std::vector<EdgeId> left;

  // Number of swaps: max(|entered|, |left|).
  size_t size() const { return std::max(entered.size(), left.size()); }
  bool empty() const { return entered.empty() && left.empty(); }
};

class DynamicMsf {
 public:
  explicit DynamicMsf(int num_vertices = 0);

  int num_vertices() const { return static_cast<int>(comp_.size()); }
  void add_vertices(int count);

  // Replaces the contents with the given edges and weights (Kruskal).
  // weights[k] belongs to ids[k].
  void build(int num_vertices, const std::vector<EdgeId>& ids,
             const std::vector<std::pair<VertexId, VertexId>>& ends,
             const std::vector<int64_t>& weights);

  ChangeSet insert(EdgeId e, VertexId u, VertexId v, int64_t weight);
  ChangeSet erase(EdgeId e);
  ChangeSet reweight(EdgeId e, int64_t weight);

  bool contains(EdgeId e) const;
  bool in_forest(EdgeId e) const;
  int64_t weight(EdgeId e) const;
  std::pair<VertexId, VertexId> endpoints(EdgeId e) const;

  bool same_component(VertexId u, VertexId v) const;
  int component(VertexId v) const;
  int num_components() const { return num_components_; }

  // Forest edges in increasing id order.
  std::vector<EdgeId> forest_edges() const;
  const std::vector<EdgeId>& tree_adjacency(VertexId v) const { return tree_adj_[v]; }

  // Half-edge visits spent on searches, for instrumentation.
  int64_t work() const { return work_; }

 private:
  struct Edge {
    VertexId u = kNone;
    VertexId v = kNone;
    int64_t weight = 0;
    bool alive = false;
    bool tree = false;
  };

  bool less(EdgeId a, EdgeId b) const;
  void check_vertex(VertexId v) const;
  const Edge& edge(EdgeId e) const;
  void link(EdgeId e);
  void cut(EdgeId e);
  // Max-key edge on the tree path u..v (same component required).
  EdgeId path_max(VertexId u, VertexId v);
  // After cutting a tree edge between u and v: returns the smaller side.
  std::vector<VertexId> smaller_side(VertexId u, VertexId v);
  EdgeId best_crossing(const std::vector<VertexId>& side);
  void relabel(const std::vector<VertexId>& side, int label);
  std::vector<VertexId> tree_component(VertexId root);

  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> adj_;
  std::vector<std::vector<EdgeId>> tree_adj_;
  std::vector<int> comp_;
  std::vector<int> comp_size_;
  std::vector<int> free_labels_;
  int num_components_ = 0;
  std::vector<uint32_t> stamp_;
  uint32_t epoch_ = 0;
  int64_t work_ = 0;
};

}  // namespace mincut
