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

// Recursive dynamic minimum proper cut driver.
//
// A LevelInstance answers "min proper cut in [lambda_min, lambda_max], or
// above" for one graph. Small graphs are solved directly. Otherwise the
// instance keeps a cluster decomposition, a mirror cut store over the
// mirror graph of its pre-clusters and a child instance on the graph
// contracted along its clusters; the answer is the cheaper of the two.
// Cuts cheaper than lambda_max / 8 are removed from the pre-clusters first
// by a ladder of smaller-range instances running on the graph without
// intercluster edges.
//
// A RangeLadder holds one instance per lambda range, creates them lazily
// and feeds them in increasing order, stopping at the first that reports a
// value. Instances above the stopping point keep a netted log of the edge
// operations they missed and replay it on their next use.
//
// DynamicMinCut is the front end: it reports 0 for disconnected graphs and
// otherwise asks a ladder over ranges up to a configurable cap.

#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mincut/clusterdec.hpp"
#include "mincut/dyngraph.hpp"
#include "mincut/localkcut.hpp"
#include "mincut/mirrorcuts.hpp"
#include "mincut/msf.hpp"
#include "mincut/params.hpp"
#include "mincut/types.hpp"

namespace mincut {

struct DriverConfig {
  std::string decomposer = "trivial";
  double phi = 0.125;
  double rho = 1.0;
  int max_depth = 8;
  int64_t lambda_cap = 32;
  // Top-level ranges ending below this value are left out of the ladder.
  int64_t lambda_floor = 1;
  // Local volume bound used when the decomposer carries no conductance
  // certificate.
  int64_t uncertified_nu = int64_t{1} << 40;
  LocalKCutConfig lkc;
  bool audit_fragment = false;
  // Audit cluster records and mirror stores after every batch.
  bool self_check = false;
  // Hard cap on cuts applied by one update-partition run.
  int64_t partition_cut_cap = 1 << 20;
};

struct LevelAnswer {
  enum class Status : uint8_t { kValue, kAbove };
  Status status = Status::kAbove;
  int64_t value = 0;
  VertexSet witness;  // one side of the cut, sorted, in level vertex ids

  bool found() const { return status == Status::kValue; }
};

struct LevelStats {
  int64_t batches = 0;
  int64_t updates = 0;
  int64_t rebuilds = 0;
  int64_t partition_cuts = 0;
  int64_t mirror_ops = 0;
  // Contracted-graph operations handed to the child over all batches, and
  // in the last batch.
  int64_t recourse = 0;
  int64_t last_recourse = 0;
};

class RangeLadder;

class LevelInstance {
 public:
  using EdgeTriple = ClusterDecomposition::EdgeTriple;

  LevelInstance(int num_vertices, Range range, const DriverConfig& config, int depth);
  ~LevelInstance();
  LevelInstance(const LevelInstance&) = delete;
  LevelInstance& operator=(const LevelInstance&) = delete;

  // Static construction from scratch.
  void build(const std::vector<EdgeTriple>& edges);
  // One batch of edge operations keyed by the caller's edge ids.
  void apply(const std::vector<EdgeOp>& batch);
  LevelAnswer answer() const;

  // A level whose graph has at least this many non-isolated vertices is
  // solved directly. Parents pass their own count, so a contraction that
  // merges nothing does not recurse on an identical graph.
  void set_parent_size(int vertices) { parent_size_ = vertices; }
  int parent_size() const { return parent_size_; }
  int non_isolated() const;

  bool base_case() const { return base_; }
  int depth() const { return depth_; }
  int num_vertices() const { return n_; }
  const Range& range() const { return range_; }
  const Params& params() const { return params_; }
  int64_t nu() const { return nu_; }
  const LevelStats& stats() const { return stats_; }
  int64_t rebuild_period() const { return rebuild_every_; }
  int64_t updates_since_build() const { return since_build_; }
  const std::map<EdgeId, std::pair<VertexId, VertexId>>& edges() const { return edges_; }
  EdgeList edge_list() const;

  // Null in the base case.
  const ClusterDecomposition* decomposition() const { return dec_.get(); }
  const MirrorCutStore* mirror_store() const { return store_.get(); }
  const LevelInstance* child() const { return child_.get(); }
  const RangeLadder* sub_ladder() const { return sub_.get(); }

  // Calls f on this instance, its descendants and every instantiated
  // sub-range instance, depth first.
  void visit(const std::function<void(const LevelInstance&)>& f) const;
  // Structural audits of this instance only; throws std::logic_error.
  void check() const;

 private:
  bool wants_base() const;
  void rebuild();
  void build_full();
  void update_partition();
  LevelAnswer base_answer() const;
  VertexSet mirror_witness(const VertexSet& members) const;
  VertexSet expand_child_witness(const VertexSet& clusters) const;

  int n_;
  Range range_;
  DriverConfig config_;
  int depth_;
  int parent_size_ = std::numeric_limits<int>::max();
  Params params_;
  int64_t nu_ = 0;
  std::map<EdgeId, std::pair<VertexId, VertexId>> edges_;
  bool base_ = true;
  std::unique_ptr<ExpanderDecomposer> decomposer_;
  std::unique_ptr<ClusterDecomposition> dec_;
  std::unique_ptr<MirrorCutStore> store_;
  std::unique_ptr<RangeLadder> sub_;
  std::unique_ptr<LevelInstance> child_;
  int64_t rebuild_every_ = 1;
  int64_t since_build_ = 0;
  LevelStats stats_;
  mutable std::optional<LevelAnswer> base_cache_;
};

class RangeLadder {
 public:
  using EdgeTriple = LevelInstance::EdgeTriple;
  using Source = std::function<std::vector<EdgeTriple>()>;

  // `source` yields the current edge set when an instance is created.
  RangeLadder(int num_vertices, std::vector<Range> ranges, const DriverConfig& config, int depth,
              Source source);
  ~RangeLadder();

  // Records operations for every instantiated instance.
  void feed(const std::vector<EdgeOp>& ops);

  struct Result {
    int index = kNone;  // position in ranges(); kNone when all report above
    LevelAnswer answer;
  };
  Result evaluate();

  const std::vector<Range>& ranges() const { return ranges_; }
  const LevelInstance* instance(int i) const { return slots_[i].instance.get(); }
  int64_t last_update(int i) const { return slots_[i].last_update; }
  int pending(int i) const { return static_cast<int>(slots_[i].log.size()); }
  int64_t time() const { return tick_; }

  // The batch that brings an instance up to date: insertions, then
  // deletions. An id whose endpoints changed is deleted right before its
  // reinsertion.
  struct Pending {
    std::optional<std::pair<VertexId, VertexId>> before;
    std::optional<std::pair<VertexId, VertexId>> now;
  };
  static std::vector<EdgeOp> catch_up_batch(const std::map<EdgeId, Pending>& log);

 private:
  struct Slot {
    std::unique_ptr<LevelInstance> instance;
    std::map<EdgeId, Pending> log;
    int64_t last_update = -1;
  };

  int n_;
  std::vector<Range> ranges_;
  DriverConfig config_;
  int depth_;
  Source source_;
  std::vector<Slot> slots_;
  int64_t tick_ = 0;
};

struct MinCutAnswer {
  enum class Kind : uint8_t { kValue, kDisconnected, kAboveCap };
  Kind kind = Kind::kAboveCap;
  int64_t value = 0;
  VertexSet witness;
  int range = kNone;  // ladder position that answered
};

class DynamicMinCut {
 public:
  explicit DynamicMinCut(int num_vertices, DriverConfig config = {});

  // Loads g with edge ids 0..m-1 and answers once.
  void build(const EdgeList& g);
  EdgeId insert(VertexId u, VertexId v);
  void erase(EdgeId e);
  // Applies a batch and answers once. Deletions remove the lowest live edge
  // id between their endpoints.
  void apply(const std::vector<Update>& batch);
  // Lowest live edge id between u and v, or kNone.
  EdgeId find_edge(VertexId u, VertexId v) const;

  const MinCutAnswer& query() const { return answer_; }
  const RangeLadder& ladder() const { return ladder_; }
  EdgeList graph() const;
  int num_vertices() const { return n_; }
  int64_t updates() const { return updates_; }

 private:
  EdgeId add_edge(VertexId u, VertexId v, std::vector<EdgeOp>* ops);
  void remove_edge(EdgeId e, std::vector<EdgeOp>* ops);
  void refresh();

  int n_;
  DriverConfig config_;
  std::map<EdgeId, std::pair<VertexId, VertexId>> edges_;
  DynamicMsf connectivity_;
  RangeLadder ladder_;
  EdgeId next_id_ = 0;
  int64_t updates_ = 0;
  MinCutAnswer answer_;
};

}  // namespace mincut
