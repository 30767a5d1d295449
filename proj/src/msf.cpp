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


#include "mincut/msf.hpp"

#include <numeric>
#include <stdexcept>

namespace mincut {

namespace {

void erase_one(std::vector<EdgeId>& list, EdgeId e) {
  auto it = std::find(list.begin(), list.end(), e);
  if (it != list.end()) {
    *it = list.back();
    list.pop_back();
  }
}

}  // namespace

DynamicMsf::DynamicMsf(int num_vertices) { add_vertices(num_vertices); }

void DynamicMsf::add_vertices(int count) {
  for (int k = 0; k < count; ++k) {
    adj_.emplace_back();
    tree_adj_.emplace_back();
    stamp_.push_back(0);
    int label;
    if (!free_labels_.empty()) {
      label = free_labels_.back();
      free_labels_.pop_back();
    } else {
      label = static_cast<int>(comp_size_.size());
      comp_size_.push_back(0);
    }
    comp_.push_back(label);
    comp_size_[label] = 1;
    ++num_components_;
  }
}

void DynamicMsf::build(int num_vertices, const std::vector<EdgeId>& ids,
                       const std::vector<std::pair<VertexId, VertexId>>& ends,
                       const std::vector<int64_t>& weights) {
  *this = DynamicMsf(num_vertices);
  std::vector<int> order(ids.size());
  std::iota(order.begin(), order.end(), 0);
  for (size_t k = 0; k < ids.size(); ++k) {
    const EdgeId e = ids[k];
    if (e < 0) throw std::invalid_argument("negative edge id");
    check_vertex(ends[k].first);
    check_vertex(ends[k].second);
    if (static_cast<size_t>(e) >= edges_.size()) edges_.resize(e + 1);
    if (edges_[e].alive) throw std::invalid_argument("duplicate edge id");
    edges_[e] = Edge{ends[k].first, ends[k].second, weights[k], true, false};
    adj_[ends[k].first].push_back(e);
    if (ends[k].first != ends[k].second) adj_[ends[k].second].push_back(e);
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) { return less(ids[a], ids[b]); });
  std::vector<int> parent(num_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int k : order) {
    const int a = find(ends[k].first), b = find(ends[k].second);
    if (a == b) continue;
    parent[a] = b;
    Edge& ed = edges_[ids[k]];
    ed.tree = true;
    tree_adj_[ed.u].push_back(ids[k]);
    tree_adj_[ed.v].push_back(ids[k]);
  }
  std::vector<int> root_label(num_vertices, -1);
  comp_size_.assign(num_vertices, 0);
  free_labels_.clear();
  num_components_ = 0;
  for (int v = 0; v < num_vertices; ++v) {
    const int r = find(v);
    if (root_label[r] == -1) {
      root_label[r] = num_components_++;
    }
    comp_[v] = root_label[r];
    ++comp_size_[comp_[v]];
  }
  comp_size_.resize(num_components_);
}

void DynamicMsf::check_vertex(VertexId v) const {
  if (v < 0 || v >= num_vertices()) throw std::out_of_range("unknown vertex id");
}

const DynamicMsf::Edge& DynamicMsf::edge(EdgeId e) const {
  if (e < 0 || static_cast<size_t>(e) >= edges_.size() || !edges_[e].alive)
    throw std::out_of_range("unknown edge id");
  return edges_[e];
}

bool DynamicMsf::less(EdgeId a, EdgeId b) const {
  const int64_t wa = edges_[a].weight, wb = edges_[b].weight;
  return wa != wb ? wa < wb : a < b;
}

bool DynamicMsf::contains(EdgeId e) const {
  return e >= 0 && static_cast<size_t>(e) < edges_.size() && edges_[e].alive;
}

bool DynamicMsf::in_forest(EdgeId e) const { return edge(e).tree; }
int64_t DynamicMsf::weight(EdgeId e) const { return edge(e).weight; }
std::pair<VertexId, VertexId> DynamicMsf::endpoints(EdgeId e) const {
  const Edge& ed = edge(e);
  return {ed.u, ed.v};
}

bool DynamicMsf::same_component(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return comp_[u] == comp_[v];
}

int DynamicMsf::component(VertexId v) const {
  check_vertex(v);
  return comp_[v];
}

std::vector<EdgeId> DynamicMsf::forest_edges() const {
  std::vector<EdgeId> out;
  for (size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].alive && edges_[e].tree) out.push_back(static_cast<EdgeId>(e));
  return out;
}

std::vector<VertexId> DynamicMsf::tree_component(VertexId root) {
  const uint32_t mark = ++epoch_;
  std::vector<VertexId> out{root};
  stamp_[root] = mark;
  for (size_t i = 0; i < out.size(); ++i) {
    for (EdgeId t : tree_adj_[out[i]]) {
      ++work_;
      const VertexId y = edges_[t].u == out[i] ? edges_[t].v : edges_[t].u;
      if (stamp_[y] != mark) {
        stamp_[y] = mark;
        out.push_back(y);
      }
    }
  }
  return out;
}

void DynamicMsf::relabel(const std::vector<VertexId>& side, int label) {
  for (VertexId x : side) {
    --comp_size_[comp_[x]];
    comp_[x] = label;
    ++comp_size_[label];
  }
}

void DynamicMsf::link(EdgeId e) {
  Edge& ed = edges_[e];
  const int a = comp_[ed.u], b = comp_[ed.v];
  if (a != b) {
    // Relabel the smaller tree into the larger one.
    const VertexId small_root = comp_size_[a] <= comp_size_[b] ? ed.u : ed.v;
    const int keep = comp_size_[a] <= comp_size_[b] ? b : a;
    const int gone = keep == a ? b : a;
    relabel(tree_component(small_root), keep);
    free_labels_.push_back(gone);
    --num_components_;
  }
  ed.tree = true;
  tree_adj_[ed.u].push_back(e);
  tree_adj_[ed.v].push_back(e);
}

void DynamicMsf::cut(EdgeId e) {
  Edge& ed = edges_[e];
  ed.tree = false;
  erase_one(tree_adj_[ed.u], e);
  erase_one(tree_adj_[ed.v], e);
}

EdgeId DynamicMsf::path_max(VertexId u, VertexId v) {
  const uint32_t mark = ++epoch_;
  std::vector<VertexId> queue{u};
  std::vector<std::pair<VertexId, EdgeId>> via;  // parallel to queue: parent, edge
  via.emplace_back(kNone, kNone);
  stamp_[u] = mark;
  size_t found = 0;
  for (size_t i = 0; i < queue.size(); ++i) {
    if (queue[i] == v) {
      found = i;
      break;
    }
    for (EdgeId t : tree_adj_[queue[i]]) {
      ++work_;
      const VertexId y = edges_[t].u == queue[i] ? edges_[t].v : edges_[t].u;
      if (stamp_[y] == mark) continue;
      stamp_[y] = mark;
      queue.push_back(y);
      via.emplace_back(static_cast<VertexId>(i), t);
    }
  }
  if (queue[found] != v) throw std::logic_error("path_max across components");
  EdgeId best = kNone;
  for (size_t i = found; via[i].second != kNone; i = static_cast<size_t>(via[i].first)) {
    if (best == kNone || less(best, via[i].second)) best = via[i].second;
  }
  return best;
}

std::vector<VertexId> DynamicMsf::smaller_side(VertexId u, VertexId v) {
  const uint32_t mark_u = ++epoch_;
  const uint32_t mark_v = ++epoch_;
  std::vector<VertexId> qu{u}, qv{v};
  stamp_[u] = mark_u;
  stamp_[v] = mark_v;
  size_t iu = 0, iv = 0;
  auto step = [&](std::vector<VertexId>& q, size_t& i, uint32_t mark) {
    const VertexId x = q[i++];
    for (EdgeId t : tree_adj_[x]) {
      ++work_;
      const VertexId y = edges_[t].u == x ? edges_[t].v : edges_[t].u;
      if (stamp_[y] != mark) {
        stamp_[y] = mark;
        q.push_back(y);
      }
    }
  };
  while (true) {
    if (iu == qu.size()) return qu;
    if (iv == qv.size()) return qv;
    step(qu, iu, mark_u);
    step(qv, iv, mark_v);
  }
}

EdgeId DynamicMsf::best_crossing(const std::vector<VertexId>& side) {
  const uint32_t mark = ++epoch_;
  for (VertexId x : side) stamp_[x] = mark;
  EdgeId best = kNone;
  for (VertexId x : side) {
    for (EdgeId f : adj_[x]) {
      ++work_;
      const Edge& ed = edges_[f];
      const VertexId y = ed.u == x ? ed.v : ed.u;
      if (stamp_[y] == mark) continue;
      if (best == kNone || less(f, best)) best = f;
    }
  }
  return best;
}

ChangeSet DynamicMsf::insert(EdgeId e, VertexId u, VertexId v, int64_t weight) {
  check_vertex(u);
  check_vertex(v);
  if (e < 0) throw std::invalid_argument("negative edge id");
  if (static_cast<size_t>(e) >= edges_.size()) edges_.resize(e + 1);
  if (edges_[e].alive) throw std::invalid_argument("edge id already present");
  edges_[e] = Edge{u, v, weight, true, false};
  adj_[u].push_back(e);
  ChangeSet cs;
  if (u == v) return cs;
  adj_[v].push_back(e);
  if (comp_[u] != comp_[v]) {
    link(e);
    cs.entered.push_back(e);
    return cs;
  }
  const EdgeId f = path_max(u, v);
  if (less(e, f)) {
    cut(f);
    link(e);
    cs.entered.push_back(e);
    cs.left.push_back(f);
  }
  return cs;
}

ChangeSet DynamicMsf::erase(EdgeId e) {
  const Edge ed = edge(e);
  erase_one(adj_[ed.u], e);
  if (ed.u != ed.v) erase_one(adj_[ed.v], e);
  ChangeSet cs;
  if (!ed.tree) {
    edges_[e].alive = false;
    return cs;
  }
  cut(e);
  edges_[e].alive = false;
  cs.left.push_back(e);
  const std::vector<VertexId> side = smaller_side(ed.u, ed.v);
  const EdgeId r = best_crossing(side);
  if (r != kNone) {
    link(r);
    cs.entered.push_back(r);
    return cs;
  }
  int label;
  if (!free_labels_.empty()) {
    label = free_labels_.back();
    free_labels_.pop_back();
  } else {
    label = static_cast<int>(comp_size_.size());
    comp_size_.push_back(0);
  }
  relabel(side, label);
  ++num_components_;
  return cs;
}

ChangeSet DynamicMsf::reweight(EdgeId e, int64_t weight) {
  const Edge ed = edge(e);
  ChangeSet cs;
  if (weight == ed.weight) return cs;
  edges_[e].weight = weight;
  if (ed.u == ed.v) return cs;
  if (!ed.tree) {
    if (weight < ed.weight) {
      const EdgeId f = path_max(ed.u, ed.v);
      if (less(e, f)) {
        cut(f);
        link(e);
        cs.entered.push_back(e);
        cs.left.push_back(f);
      }
    }
    return cs;
  }
  if (weight < ed.weight) return cs;
  cut(e);
  const EdgeId r = best_crossing(smaller_side(ed.u, ed.v));
  link(r);
  if (r != e) {
    cs.entered.push_back(r);
    cs.left.push_back(e);
  }
  return cs;
}

}  // namespace mincut
