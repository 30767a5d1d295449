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


// Dynamic multigraph with the two-level cluster partition encoded by edge
// labels. The pre-cluster partition P1 is given by the connected components
// of intracluster and fragmented edges and the cluster partition P2 by the
// components of intracluster edges alone, so P2 always refines P1.
//
// Cluster records are maintained under edge insertions, deletions and
// relabelings. A split explores both sides in lockstep and rebuilds the
// smaller side from scratch; the larger side keeps its id and is patched
// arithmetically. Merges move the smaller cluster into the larger one. Both
// cost time proportional to the volume of the smaller side.
//
// Two derived graphs are tracked incrementally: the mirror graph G_{P1},
// which is the disjoint union of the mirror clusters of all P1 clusters,
// and the contracted graph G/P2. Each hands out net edge operations since
// the previous drain.

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "mincut/msf.hpp"
#include "mincut/types.hpp"

namespace mincut {

// Plain dynamic multigraph with stable edge ids and per-vertex flags.
class DynMultiGraph {
 public:
  explicit DynMultiGraph(int num_vertices = 0);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  void add_vertices(int count);

  // Inserts with the next unused id, or with `id` when given. Self-loops are
  // rejected.
  EdgeId insert_edge(VertexId u, VertexId v, EdgeLabel label = EdgeLabel::kIntracluster,
                     EdgeId id = kNone);
  void delete_edge(EdgeId e);
  void set_label(EdgeId e, EdgeLabel label);

  bool alive(EdgeId e) const;
  EdgeLabel label(EdgeId e) const;
  std::pair<VertexId, VertexId> endpoints(EdgeId e) const;
  VertexId other(EdgeId e, VertexId v) const;
  const std::vector<EdgeId>& incident(VertexId v) const;
  int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }
  int num_edges() const { return live_; }
  EdgeId edge_capacity() const { return static_cast<EdgeId>(edges_.size()); }
  std::vector<EdgeId> live_edges() const;
  int64_t volume() const { return 2 * static_cast<int64_t>(live_); }

  bool checked(VertexId v) const { return checked_[check(v)] != 0; }
  void set_checked(VertexId v, bool value) { checked_[check(v)] = value ? 1 : 0; }

  // Volume represented by a contracted vertex; 0 for plain vertices.
  int64_t inner_volume(VertexId v) const { return inner_volume_[check(v)]; }
  void set_inner_volume(VertexId v, int64_t value) { inner_volume_[check(v)] = value; }

  // Live edges in id order with their original endpoints.
  EdgeList to_edge_list() const;

 private:
  struct Edge {
    VertexId u = kNone;
    VertexId v = kNone;
    EdgeLabel label = EdgeLabel::kIntracluster;
    bool alive = false;
    int pos_u = -1;
    int pos_v = -1;
  };

  VertexId check(VertexId v) const;
  const Edge& edge(EdgeId e) const;

  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> adj_;
  std::vector<char> checked_;
  std::vector<int64_t> inner_volume_;
  int live_ = 0;
};

enum class Part : uint8_t { kPre = 0, kCluster = 1 };
enum class ClusterClass : uint8_t { kWellConnected, kPoorlyConnected, kFragmented };
const char* to_string(ClusterClass c);

struct ClusterRecord {
  int id = kNone;
  Part part = Part::kPre;
  bool alive = false;
  std::vector<VertexId> members;  // unordered; see sorted_members()
  int64_t boundary = 0;           // edges with exactly one endpoint inside
  int64_t inner_volume = 0;       // half-edges with both endpoints inside
  std::set<EdgeId> boundary_edges;
  ClusterClass cls = ClusterClass::kWellConnected;

  int64_t volume() const { return inner_volume + boundary; }
  VertexSet sorted_members() const;
};

// Candidate cut S inside a host cluster with cached quantities.
struct Cut {
  VertexSet vertices;
  int64_t volume = 0;    // half-edges at S in the host graph
  int64_t internal = 0;  // w(S, C \ S)
  int64_t external = 0;  // w(S, V \ C)
  int host = kNone;
};

// Net operation on a derived graph.
struct EdgeOp {
  enum class Kind : uint8_t { kInsert, kDelete };
  Kind kind = Kind::kInsert;
  EdgeId id = kNone;
  VertexId u = kNone;
  VertexId v = kNone;
};

struct MirrorSnapshot {
  DynMultiGraph graph;
  std::vector<VertexId> original;  // original vertex per mirror vertex; kNone for z
  bool has_z = false;
};

struct ContractedSnapshot {
  DynMultiGraph graph;
  std::vector<int> cluster;  // P2 cluster id per contracted vertex
};

class ClusteredGraph {
 public:
  explicit ClusteredGraph(int num_vertices = 0);

  const DynMultiGraph& graph() const { return g_; }
  int num_vertices() const { return g_.num_vertices(); }
  void set_checked(VertexId v, bool value) { g_.set_checked(v, value); }
  bool checked(VertexId v) const { return g_.checked(v); }

  // Inserts with the given label. Intracluster edges may merge clusters of
  // both partitions, fragmented edges may merge P1 clusters; an
  // intercluster edge inside one P1 cluster or a fragmented edge inside one
  // P2 cluster is rejected.
  EdgeId insert_edge(VertexId u, VertexId v, EdgeLabel label, EdgeId id = kNone);
  void delete_edge(EdgeId e);

  struct RelabelResult {
    std::vector<int> new_pre;
    std::vector<int> new_cluster;
  };
  // Applies label changes one at a time. Allowed: intracluster to
  // fragmented or intercluster, fragmented to intercluster, and fragmented
  // back to intracluster (a P2 merge inside one P1 cluster). Anything that
  // would merge P1 clusters throws.
  RelabelResult relabel(const std::vector<std::pair<EdgeId, EdgeLabel>>& changes);

  int cluster_of(Part p, VertexId v) const { return cid_[idx(p)][v]; }
  const ClusterRecord& record(Part p, int c) const;
  std::vector<int> clusters(Part p) const;
  int cluster_capacity(Part p) const { return static_cast<int>(records_[idx(p)].size()); }
  void set_class(int pre_cluster, ClusterClass cls);

  // w(S, C\S) < (1 - delta) min(w(S, V\C), w(C\S, V\C)) for S strictly
  // inside the P1 cluster c. Runs in time proportional to vol(S).
  bool is_boundary_sparse(const VertexSet& s, int c, Rational delta) const;
  Cut make_cut(const VertexSet& s, int c) const;

  MirrorSnapshot mirror_cluster(int c) const;
  ContractedSnapshot contracted_graph() const;

  // Vertex id of the super-vertex z of P1 cluster c in G_{P1}.
  VertexId mirror_z(int c) const { return num_vertices() + c; }
  int mirror_vertex_count() const { return num_vertices() + cluster_capacity(Part::kPre); }

  // Net edge operations on G_{P1} and G/P2 since the previous drain;
  // deletions first. Mirror edge 2e carries the u side of edge e and 2e+1
  // its v side when e is intercluster; an internal edge uses 2e.
  std::vector<EdgeOp> drain_mirror_ops();
  std::vector<EdgeOp> drain_contracted_ops();
  const std::map<EdgeId, std::pair<VertexId, VertexId>>& mirror_edges() const {
    return mirror_cur_;
  }
  const std::map<EdgeId, std::pair<VertexId, VertexId>>& contracted_edges() const {
    return contracted_cur_;
  }

  // Recomputes every record from adjacency and throws std::logic_error on
  // any mismatch.
  void audit() const;

  int64_t split_work() const { return split_work_; }
  int64_t splits() const { return splits_; }
  int64_t merges() const { return merges_; }

 private:
  static int idx(Part p) { return static_cast<int>(p); }
  bool in_part(Part p, EdgeLabel l) const;
  int new_cluster(Part p);
  void add_member(Part p, int c, VertexId v);
  void remove_member(Part p, int c, VertexId v);
  void attach_edge(EdgeId e);
  void detach_edge(EdgeId e);
  int merge(Part p, int a, int b);
  int split(Part p, VertexId u, VertexId v);
  void mark_moved(Part p, VertexId v);
  std::vector<EdgeOp> drain(std::set<EdgeId>& dirty,
                            std::map<EdgeId, std::pair<VertexId, VertexId>>& current,
                            bool mirror);

  DynMultiGraph g_;
  DynamicMsf forest_[2];
  std::vector<int> cid_[2];
  std::vector<int> pos_[2];
  std::vector<ClusterRecord> records_[2];
  std::vector<int> free_ids_[2];
  std::set<EdgeId> dirty_mirror_;
  std::set<EdgeId> dirty_contracted_;
  std::map<EdgeId, std::pair<VertexId, VertexId>> mirror_cur_;
  std::map<EdgeId, std::pair<VertexId, VertexId>> contracted_cur_;
  std::vector<uint32_t> stamp_;
  uint32_t epoch_ = 0;
  int64_t split_work_ = 0;
  int64_t splits_ = 0;
  int64_t merges_ = 0;
};

}  // namespace mincut
