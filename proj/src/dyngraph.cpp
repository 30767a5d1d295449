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


#include "mincut/dyngraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mincut {

// ---------------------------------------------------------------------------
// DynMultiGraph

DynMultiGraph::DynMultiGraph(int num_vertices) { add_vertices(num_vertices); }

void DynMultiGraph::add_vertices(int count) {
  if (count < 0) throw std::invalid_argument("negative vertex count");
  adj_.resize(adj_.size() + count);
  checked_.resize(adj_.size(), 1);
  inner_volume_.resize(adj_.size(), 0);
}

VertexId DynMultiGraph::check(VertexId v) const {
  if (v < 0 || v >= num_vertices()) throw std::out_of_range("unknown vertex id");
  return v;
}

const DynMultiGraph::Edge& DynMultiGraph::edge(EdgeId e) const {
  if (e < 0 || e >= edge_capacity() || !edges_[e].alive) throw std::out_of_range("unknown edge id");
  return edges_[e];
}

EdgeId DynMultiGraph::insert_edge(VertexId u, VertexId v, EdgeLabel label, EdgeId id) {
  check(u);
  check(v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (id == kNone) id = edge_capacity();
  if (id < 0) throw std::invalid_argument("negative edge id");
  if (id >= edge_capacity()) edges_.resize(id + 1);
  if (edges_[id].alive) throw std::invalid_argument("edge id in use");
  Edge& ed = edges_[id];
  ed = Edge{u, v, label, true, static_cast<int>(adj_[u].size()), static_cast<int>(adj_[v].size())};
  adj_[u].push_back(id);
  adj_[v].push_back(id);
  ++live_;
  return id;
}

void DynMultiGraph::delete_edge(EdgeId e) {
  const Edge ed = edge(e);
  auto drop = [&](VertexId x, int pos) {
    std::vector<EdgeId>& list = adj_[x];
    const EdgeId moved = list.back();
    list[pos] = moved;
    list.pop_back();
    if (moved != e) {
      Edge& m = edges_[moved];
      if (m.u == x && m.pos_u == static_cast<int>(list.size()))
        m.pos_u = pos;
      else
        m.pos_v = pos;
    }
  };
  drop(ed.u, ed.pos_u);
  drop(ed.v, edges_[e].pos_v);
  edges_[e].alive = false;
  --live_;
}

void DynMultiGraph::set_label(EdgeId e, EdgeLabel label) {
  edge(e);
  edges_[e].label = label;
}

bool DynMultiGraph::alive(EdgeId e) const {
  return e >= 0 && e < edge_capacity() && edges_[e].alive;
}

EdgeLabel DynMultiGraph::label(EdgeId e) const { return edge(e).label; }

std::pair<VertexId, VertexId> DynMultiGraph::endpoints(EdgeId e) const {
  const Edge& ed = edge(e);
  return {ed.u, ed.v};
}

VertexId DynMultiGraph::other(EdgeId e, VertexId v) const {
  const Edge& ed = edge(e);
  return ed.u == v ? ed.v : ed.u;
}

const std::vector<EdgeId>& DynMultiGraph::incident(VertexId v) const { return adj_[check(v)]; }

std::vector<EdgeId> DynMultiGraph::live_edges() const {
  std::vector<EdgeId> out;
  out.reserve(live_);
  for (EdgeId e = 0; e < edge_capacity(); ++e)
    if (edges_[e].alive) out.push_back(e);
  return out;
}

EdgeList DynMultiGraph::to_edge_list() const {
  EdgeList out(num_vertices());
  for (EdgeId e = 0; e < edge_capacity(); ++e)
    if (edges_[e].alive) out.add(edges_[e].u, edges_[e].v);
  return out;
}

// ---------------------------------------------------------------------------
// ClusteredGraph

const char* to_string(ClusterClass c) {
  switch (c) {
    case ClusterClass::kWellConnected:
      return "well-connected";
    case ClusterClass::kPoorlyConnected:
      return "poorly-connected";
    case ClusterClass::kFragmented:
      return "fragmented";
  }
  return "?";
}

VertexSet ClusterRecord::sorted_members() const {
  VertexSet s = members;
  std::sort(s.begin(), s.end());
  return s;
}

ClusteredGraph::ClusteredGraph(int num_vertices)
    : g_(num_vertices), forest_{DynamicMsf(num_vertices), DynamicMsf(num_vertices)} {
  for (int p = 0; p < 2; ++p) {
    cid_[p].resize(num_vertices);
    pos_[p].resize(num_vertices);
    for (VertexId v = 0; v < num_vertices; ++v) {
      ClusterRecord r;
      r.id = v;
      r.part = static_cast<Part>(p);
      r.alive = true;
      r.members = {v};
      records_[p].push_back(std::move(r));
      cid_[p][v] = v;
      pos_[p][v] = 0;
    }
  }
  stamp_.assign(num_vertices, 0);
}

bool ClusteredGraph::in_part(Part p, EdgeLabel l) const {
  return p == Part::kPre ? l != EdgeLabel::kIntercluster : l == EdgeLabel::kIntracluster;
}

const ClusterRecord& ClusteredGraph::record(Part p, int c) const {
  const auto& recs = records_[idx(p)];
  if (c < 0 || c >= static_cast<int>(recs.size()) || !recs[c].alive)
    throw std::out_of_range("unknown cluster id");
  return recs[c];
}

std::vector<int> ClusteredGraph::clusters(Part p) const {
  std::vector<int> out;
  for (const auto& r : records_[idx(p)])
    if (r.alive) out.push_back(r.id);
  return out;
}

void ClusteredGraph::set_class(int pre_cluster, ClusterClass cls) {
  record(Part::kPre, pre_cluster);
  records_[0][pre_cluster].cls = cls;
}

int ClusteredGraph::new_cluster(Part p) {
  auto& recs = records_[idx(p)];
  int c;
  if (!free_ids_[idx(p)].empty()) {
    c = free_ids_[idx(p)].back();
    free_ids_[idx(p)].pop_back();
  } else {
    c = static_cast<int>(recs.size());
    recs.emplace_back();
  }
  ClusterRecord& r = recs[c];
  r = ClusterRecord{};
  r.id = c;
  r.part = p;
  r.alive = true;
  return c;
}

void ClusteredGraph::add_member(Part p, int c, VertexId v) {
  auto& r = records_[idx(p)][c];
  cid_[idx(p)][v] = c;
  pos_[idx(p)][v] = static_cast<int>(r.members.size());
  r.members.push_back(v);
}

void ClusteredGraph::remove_member(Part p, int c, VertexId v) {
  auto& r = records_[idx(p)][c];
  const int at = pos_[idx(p)][v];
  const VertexId last = r.members.back();
  r.members[at] = last;
  pos_[idx(p)][last] = at;
  r.members.pop_back();
}

void ClusteredGraph::attach_edge(EdgeId e) {
  auto [u, v] = g_.endpoints(e);
  for (int p = 0; p < 2; ++p) {
    const int cu = cid_[p][u], cv = cid_[p][v];
    if (cu == cv) {
      records_[p][cu].inner_volume += 2;
    } else {
      records_[p][cu].boundary += 1;
      records_[p][cv].boundary += 1;
      records_[p][cu].boundary_edges.insert(e);
      records_[p][cv].boundary_edges.insert(e);
    }
  }
}

void ClusteredGraph::detach_edge(EdgeId e) {
  auto [u, v] = g_.endpoints(e);
  for (int p = 0; p < 2; ++p) {
    const int cu = cid_[p][u], cv = cid_[p][v];
    if (cu == cv) {
      records_[p][cu].inner_volume -= 2;
    } else {
      records_[p][cu].boundary -= 1;
      records_[p][cv].boundary -= 1;
      records_[p][cu].boundary_edges.erase(e);
      records_[p][cv].boundary_edges.erase(e);
    }
  }
}

void ClusteredGraph::mark_moved(Part p, VertexId v) {
  auto& dirty = p == Part::kPre ? dirty_mirror_ : dirty_contracted_;
  for (EdgeId f : g_.incident(v)) dirty.insert(f);
}

int ClusteredGraph::merge(Part p, int a, int b) {
  const int k = idx(p);
  auto bigger = [&](int x, int y) {
    const auto& rx = records_[k][x];
    const auto& ry = records_[k][y];
    if (rx.volume() != ry.volume()) return rx.volume() > ry.volume();
    if (rx.members.size() != ry.members.size()) return rx.members.size() > ry.members.size();
    return x < y;
  };
  const int keep = bigger(a, b) ? a : b;
  const int small = keep == a ? b : a;
  int64_t between = 0;
  {
    ClusterRecord& rs = records_[k][small];
    ClusterRecord& rk = records_[k][keep];
    for (EdgeId f : rs.boundary_edges) {
      ++split_work_;
      auto [x, y] = g_.endpoints(f);
      const int other = cid_[k][x] == small ? cid_[k][y] : cid_[k][x];
      if (other == keep) {
        ++between;
        rk.boundary_edges.erase(f);
      } else {
        rk.boundary_edges.insert(f);
      }
    }
    rk.boundary = rk.boundary + rs.boundary - 2 * between;
    rk.inner_volume = rk.inner_volume + rs.inner_volume + 2 * between;
  }
  const std::vector<VertexId> moved = records_[k][small].members;
  for (VertexId x : moved) {
    split_work_ += g_.degree(x);
    add_member(p, keep, x);
    mark_moved(p, x);
  }
  ClusterRecord& rs = records_[k][small];
  rs = ClusterRecord{};
  rs.id = small;
  rs.part = p;
  free_ids_[k].push_back(small);
  ++merges_;
  return keep;
}

int ClusteredGraph::split(Part p, VertexId u, VertexId v) {
  const int k = idx(p);
  const int c = cid_[k][u];
  if (cid_[k][v] != c) throw std::logic_error("split endpoints in different clusters");
  // Lockstep exploration of both sides; the first side to finish is the
  // smaller one and is the only one fully explored.
  const uint32_t mu = ++epoch_, mv = ++epoch_;
  std::vector<VertexId> qu{u}, qv{v};
  stamp_[u] = mu;
  stamp_[v] = mv;
  size_t iu = 0, iv = 0;
  auto step = [&](std::vector<VertexId>& q, size_t& i, uint32_t mark) {
    const VertexId x = q[i++];
    for (EdgeId f : g_.incident(x)) {
      ++split_work_;
      if (!in_part(p, g_.label(f))) continue;
      const VertexId y = g_.other(f, x);
      if (stamp_[y] != mark) {
        stamp_[y] = mark;
        q.push_back(y);
      }
    }
  };
  const std::vector<VertexId>* side = nullptr;
  while (side == nullptr) {
    if (iu == qu.size()) {
      side = &qu;
    } else if (iv == qv.size()) {
      side = &qv;
    } else {
      step(qu, iu, mu);
      step(qv, iv, mv);
    }
  }
  const std::vector<VertexId> s = *side;
  const int fresh = new_cluster(p);
  for (VertexId x : s) {
    remove_member(p, c, x);
    add_member(p, fresh, x);
  }
  ClusterRecord& rs = records_[k][fresh];
  ClusterRecord& rc = records_[k][c];
  int64_t between = 0;
  for (VertexId x : s) {
    for (EdgeId f : g_.incident(x)) {
      ++split_work_;
      const VertexId y = g_.other(f, x);
      const int cy = cid_[k][y];
      if (cy == fresh) {
        rs.inner_volume += 1;
        continue;
      }
      rs.boundary += 1;
      rs.boundary_edges.insert(f);
      if (cy == c) {
        ++between;
        rc.boundary_edges.insert(f);
      } else {
        rc.boundary_edges.erase(f);
      }
    }
    mark_moved(p, x);
  }
  rc.boundary = rc.boundary - rs.boundary + 2 * between;
  rc.inner_volume = rc.inner_volume - rs.inner_volume - 2 * between;
  rs.cls = rc.cls;
  ++splits_;
  return fresh;
}

EdgeId ClusteredGraph::insert_edge(VertexId u, VertexId v, EdgeLabel label, EdgeId id) {
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
    throw std::out_of_range("unknown vertex id");
  if (label == EdgeLabel::kIntercluster && cid_[0][u] == cid_[0][v])
    throw std::invalid_argument("intercluster edge inside one pre-cluster");
  if (label == EdgeLabel::kFragmented && cid_[1][u] == cid_[1][v])
    throw std::invalid_argument("fragmented edge inside one cluster");
  const EdgeId e = g_.insert_edge(u, v, label, id);
  attach_edge(e);
  dirty_mirror_.insert(e);
  dirty_contracted_.insert(e);
  if (in_part(Part::kPre, label)) {
    forest_[0].insert(e, u, v, 0);
    if (cid_[0][u] != cid_[0][v]) merge(Part::kPre, cid_[0][u], cid_[0][v]);
  }
  if (in_part(Part::kCluster, label)) {
    forest_[1].insert(e, u, v, 0);
    if (cid_[1][u] != cid_[1][v]) merge(Part::kCluster, cid_[1][u], cid_[1][v]);
  }
  return e;
}

void ClusteredGraph::delete_edge(EdgeId e) {
  const EdgeLabel label = g_.label(e);
  auto [u, v] = g_.endpoints(e);
  detach_edge(e);
  dirty_mirror_.insert(e);
  dirty_contracted_.insert(e);
  g_.delete_edge(e);
  if (in_part(Part::kCluster, label)) {
    forest_[1].erase(e);
    if (!forest_[1].same_component(u, v)) split(Part::kCluster, u, v);
  }
  if (in_part(Part::kPre, label)) {
    forest_[0].erase(e);
    if (!forest_[0].same_component(u, v)) split(Part::kPre, u, v);
  }
}

ClusteredGraph::RelabelResult ClusteredGraph::relabel(
    const std::vector<std::pair<EdgeId, EdgeLabel>>& changes) {
  RelabelResult out;
  using L = EdgeLabel;
  for (auto [e, next] : changes) {
    const L prev = g_.label(e);
    if (prev == next) continue;
    auto [u, v] = g_.endpoints(e);
    if (prev == L::kIntercluster) throw std::invalid_argument("relabeling would merge pre-clusters");
    g_.set_label(e, next);
    dirty_mirror_.insert(e);
    dirty_contracted_.insert(e);
    if (prev == L::kIntracluster) {
      forest_[1].erase(e);
      if (!forest_[1].same_component(u, v)) out.new_cluster.push_back(split(Part::kCluster, u, v));
    }
    if (prev == L::kFragmented && next == L::kIntracluster) {
      forest_[1].insert(e, u, v, 0);
      if (cid_[1][u] != cid_[1][v]) merge(Part::kCluster, cid_[1][u], cid_[1][v]);
    }
    if (next == L::kIntercluster) {
      forest_[0].erase(e);
      if (!forest_[0].same_component(u, v)) out.new_pre.push_back(split(Part::kPre, u, v));
    }
  }
  return out;
}

bool ClusteredGraph::is_boundary_sparse(const VertexSet& s, int c, Rational delta) const {
  const Cut cut = make_cut(s, c);
  const int64_t rest = record(Part::kPre, c).boundary - cut.external;
  const int64_t m = std::min(cut.external, rest);
  return delta.den * cut.internal < (delta.den - delta.num) * m;
}

Cut ClusteredGraph::make_cut(const VertexSet& s, int c) const {
  const ClusterRecord& rec = record(Part::kPre, c);
  if (s.empty()) throw std::invalid_argument("empty cut");
  if (s.size() >= rec.members.size()) throw std::invalid_argument("cut must be a strict subset");
  if (!std::is_sorted(s.begin(), s.end())) throw std::invalid_argument("cut must be sorted");
  Cut cut;
  cut.vertices = s;
  cut.host = c;
  for (VertexId x : s)
    if (x < 0 || x >= num_vertices() || cid_[0][x] != c)
      throw std::invalid_argument("cut leaves its cluster");
  for (VertexId x : s) {
    for (EdgeId f : g_.incident(x)) {
      ++cut.volume;
      const VertexId y = g_.other(f, x);
      if (std::binary_search(s.begin(), s.end(), y)) continue;
      if (cid_[0][y] == c)
        ++cut.internal;
      else
        ++cut.external;
    }
  }
  return cut;
}

MirrorSnapshot ClusteredGraph::mirror_cluster(int c) const {
  const ClusterRecord& rec = record(Part::kPre, c);
  MirrorSnapshot out;
  const VertexSet members = rec.sorted_members();
  out.has_z = rec.boundary > 0;
  out.original = members;
  if (out.has_z) out.original.push_back(kNone);
  out.graph = DynMultiGraph(static_cast<int>(out.original.size()));
  const VertexId z = static_cast<VertexId>(members.size());
  auto local = [&](VertexId x) {
    return static_cast<VertexId>(std::lower_bound(members.begin(), members.end(), x) -
                                 members.begin());
  };
  std::vector<EdgeId> ids;
  for (VertexId x : members)
    for (EdgeId f : g_.incident(x)) ids.push_back(f);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (EdgeId f : ids) {
    auto [a, b] = g_.endpoints(f);
    const bool ia = cid_[0][a] == c, ib = cid_[0][b] == c;
    if (ia && ib)
      out.graph.insert_edge(local(a), local(b), g_.label(f));
    else
      out.graph.insert_edge(local(ia ? a : b), z, EdgeLabel::kIntercluster);
  }
  return out;
}

ContractedSnapshot ClusteredGraph::contracted_graph() const {
  ContractedSnapshot out;
  out.cluster = clusters(Part::kCluster);
  out.graph = DynMultiGraph(static_cast<int>(out.cluster.size()));
  std::vector<int> index(records_[1].size(), -1);
  for (size_t i = 0; i < out.cluster.size(); ++i) {
    index[out.cluster[i]] = static_cast<int>(i);
    out.graph.set_inner_volume(static_cast<VertexId>(i), records_[1][out.cluster[i]].inner_volume);
  }
  for (EdgeId f : g_.live_edges()) {
    if (g_.label(f) == EdgeLabel::kIntracluster) continue;
    auto [a, b] = g_.endpoints(f);
    out.graph.insert_edge(index[cid_[1][a]], index[cid_[1][b]], g_.label(f));
  }
  return out;
}

std::vector<EdgeOp> ClusteredGraph::drain(std::set<EdgeId>& dirty,
                                          std::map<EdgeId, std::pair<VertexId, VertexId>>& current,
                                          bool mirror) {
  std::vector<EdgeOp> deletions, insertions;
  for (EdgeId e : dirty) {
    std::vector<std::pair<EdgeId, std::pair<VertexId, VertexId>>> want;
    if (g_.alive(e)) {
      auto [u, v] = g_.endpoints(e);
      const EdgeLabel l = g_.label(e);
      if (mirror) {
        if (l != EdgeLabel::kIntercluster) {
          want.push_back({2 * e, {u, v}});
        } else {
          if (cid_[0][u] == cid_[0][v])
            throw std::logic_error("intercluster edge " + std::to_string(e) +
                                   " lies inside a pre-cluster");
          want.push_back({2 * e, {u, mirror_z(cid_[0][u])}});
          want.push_back({2 * e + 1, {v, mirror_z(cid_[0][v])}});
        }
      } else if (l != EdgeLabel::kIntracluster) {
        if (cid_[1][u] == cid_[1][v])
          throw std::logic_error("edge " + std::to_string(e) + " would be a contracted self-loop");
        want.push_back({e, {cid_[1][u], cid_[1][v]}});
      }
    }
    const std::vector<EdgeId> slots =
        mirror ? std::vector<EdgeId>{2 * e, 2 * e + 1} : std::vector<EdgeId>{e};
    for (EdgeId id : slots) {
      auto cur = current.find(id);
      const std::pair<VertexId, VertexId>* target = nullptr;
      for (auto& w : want)
        if (w.first == id) target = &w.second;
      if (cur != current.end() && (target == nullptr || *target != cur->second)) {
        deletions.push_back(EdgeOp{EdgeOp::Kind::kDelete, id, cur->second.first, cur->second.second});
        current.erase(cur);
        cur = current.end();
      }
      if (target != nullptr && cur == current.end()) {
        insertions.push_back(EdgeOp{EdgeOp::Kind::kInsert, id, target->first, target->second});
        current[id] = *target;
      }
    }
  }
  dirty.clear();
  deletions.insert(deletions.end(), insertions.begin(), insertions.end());
  return deletions;
}

std::vector<EdgeOp> ClusteredGraph::drain_mirror_ops() {
  return drain(dirty_mirror_, mirror_cur_, true);
}

std::vector<EdgeOp> ClusteredGraph::drain_contracted_ops() {
  return drain(dirty_contracted_, contracted_cur_, false);
}

void ClusteredGraph::audit() const {
  auto fail = [](const std::string& what) { throw std::logic_error("audit: " + what); };
  const int n = num_vertices();
  for (int k = 0; k < 2; ++k) {
    const Part p = static_cast<Part>(k);
    // Components of in-part edges must match cluster ids exactly.
    std::vector<int> comp(n, -1);
    for (VertexId s = 0; s < n; ++s) {
      if (comp[s] >= 0) continue;
      std::vector<VertexId> q{s};
      comp[s] = s;
      for (size_t i = 0; i < q.size(); ++i)
        for (EdgeId f : g_.incident(q[i])) {
          if (!in_part(p, g_.label(f))) continue;
          const VertexId y = g_.other(f, q[i]);
          if (comp[y] < 0) {
            comp[y] = s;
            q.push_back(y);
          }
        }
      for (VertexId x : q)
        if (cid_[k][x] != cid_[k][s]) fail("cluster is not connected-closed");
    }
    std::vector<int> rep(records_[k].size(), -1);
    for (VertexId x = 0; x < n; ++x) {
      const int c = cid_[k][x];
      if (c < 0 || c >= static_cast<int>(records_[k].size()) || !records_[k][c].alive)
        fail("vertex in dead cluster");
      if (rep[c] < 0) rep[c] = comp[x];
      if (rep[c] != comp[x]) fail("cluster is disconnected");
      const auto& m = records_[k][c].members;
      if (pos_[k][x] >= static_cast<int>(m.size()) || m[pos_[k][x]] != x)
        fail("member index broken");
    }
    for (const auto& r : records_[k]) {
      if (!r.alive) continue;
      if (r.members.empty()) fail("empty live cluster");
      int64_t boundary = 0, inner = 0;
      std::set<EdgeId> edges;
      for (VertexId x : r.members)
        for (EdgeId f : g_.incident(x)) {
          if (cid_[k][g_.other(f, x)] == r.id) {
            ++inner;
          } else {
            ++boundary;
            edges.insert(f);
          }
        }
      if (boundary != r.boundary) fail("boundary count of cluster " + std::to_string(r.id));
      if (inner != r.inner_volume) fail("inner volume of cluster " + std::to_string(r.id));
      if (edges != r.boundary_edges) fail("boundary edge list of cluster " + std::to_string(r.id));
    }
  }
  // P2 refines P1.
  for (VertexId x = 0; x < n; ++x)
    for (EdgeId f : g_.incident(x))
      if (g_.label(f) == EdgeLabel::kIntracluster && cid_[0][x] != cid_[0][g_.other(f, x)])
        fail("intracluster edge between pre-clusters");
}

}  // namespace mincut
