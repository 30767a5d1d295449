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

// Pre-cluster and cluster decompositions of one hierarchy level.
//
// An expander decomposer provides the initial partition. Edges between
// expanders become intercluster edges and their endpoints unchecked. The
// decomposing loop then runs Find-and-Cut on every well-connected cluster
// that still has an unchecked vertex: each unchecked vertex is queried, the
// first boundary-sparse local cut found is cut off, and a vertex whose query
// finds nothing is marked checked. Clusters whose boundary is small are
// fragmented instead; the edges between their fragments carry the
// fragmented label, so the cluster partition P2 refines P1.
//
// Classification follows a hysteresis: a cluster becomes poorly connected
// once its boundary is at most 3 lambda_max and well connected again once
// it reaches 6 lambda_max. Fragmented overrides poorly connected.

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mincut/dyngraph.hpp"
#include "mincut/fragment.hpp"
#include "mincut/localkcut.hpp"
#include "mincut/params.hpp"
#include "mincut/types.hpp"

namespace mincut {

// Expander decomposition consumed as a black box. Implementations keep an
// expander id per vertex, split expanders on updates and report the edges
// that became inter-expander.
class ExpanderDecomposer {
 public:
  virtual ~ExpanderDecomposer() = default;

  virtual std::string name() const = 0;
  // Decomposes g from scratch.
  virtual void init(const DynMultiGraph& g) = 0;
  // Called after `op` was applied to g. Returns live edges that turned from
  // intra-expander into inter-expander, sorted. An inserted edge between
  // two expanders is reported too.
  virtual std::vector<EdgeId> apply_update(const DynMultiGraph& g, const EdgeOp& op) = 0;
  virtual int expander_of(VertexId v) const = 0;
  // True when every expander is certified to have conductance >= phi, so
  // the local volume bound 4 lambda_max / phi is sound.
  virtual bool certified() const = 0;

  // Inter-expander edges reported since construction.
  int64_t recourse() const { return recourse_; }

 protected:
  int64_t recourse_ = 0;
};

// One expander per connected component. Not certified; callers raise the
// local volume bound so local cut queries stay complete.
class TrivialDecomposer : public ExpanderDecomposer {
 public:
  std::string name() const override { return "trivial"; }
  void init(const DynMultiGraph& g) override;
  std::vector<EdgeId> apply_update(const DynMultiGraph& g, const EdgeOp& op) override;
  int expander_of(VertexId v) const override { return label_[v]; }
  bool certified() const override { return false; }

 private:
  std::vector<int> label_;
  int next_ = 0;
};

struct ConductanceConfig {
  double phi = 0.125;
  // Pieces up to this size are certified by checking every subset. Larger
  // pieces are split along the best spectral sweep cut.
  int exhaustive_limit = 12;
};

// Recursive low-conductance splitting. Conductance is measured with G
// volumes, so boundary edges count towards the volume of a piece. Every
// final piece is certified exhaustively.
class ConductanceDecomposer : public ExpanderDecomposer {
 public:
  explicit ConductanceDecomposer(ConductanceConfig config = {}) : config_(config) {}

  std::string name() const override { return "conductance"; }
  void init(const DynMultiGraph& g) override;
  std::vector<EdgeId> apply_update(const DynMultiGraph& g, const EdgeOp& op) override;
  int expander_of(VertexId v) const override { return label_[v]; }
  bool certified() const override { return true; }

  // Minimum over nonempty X strictly inside `piece` of
  // w(X, piece \ X) / min(vol(X), vol(piece \ X)); 1 for single vertices.
  static double min_conductance(const DynMultiGraph& g, const VertexSet& piece,
                                VertexSet* side = nullptr);

 private:
  void certify(const DynMultiGraph& g, VertexSet piece);
  std::vector<EdgeId> recertify(const DynMultiGraph& g, int expander);

  ConductanceConfig config_;
  std::vector<int> label_;
  int next_ = 0;
};

// Factory for the names accepted on the command line.
std::unique_ptr<ExpanderDecomposer> make_decomposer(const std::string& name, double phi);

struct DecompositionConfig {
  LocalKCutConfig lkc;
  // Run the fragment precondition audit (oracle minimum cut) on every call.
  bool audit_fragment = false;
  double fragment_count_constant = 1.0;
};

struct DecompositionStats {
  int64_t find_and_cut_calls = 0;
  int64_t queries = 0;
  int64_t sparse_cuts = 0;
  int64_t fragment_runs = 0;
  int64_t fragments_over_bound = 0;
  // Largest number of cuts caused by queries on a single vertex.
  int max_responsibility = 0;
};

class ClusterDecomposition {
 public:
  using EdgeTriple = std::tuple<EdgeId, VertexId, VertexId>;

  // nu is the local volume bound handed to LocalKCut.
  ClusterDecomposition(int num_vertices, const Params& params, int64_t nu,
                       DecompositionConfig config = {});

  // Inserts every edge as intracluster. All vertices start checked.
  void load(const std::vector<EdgeTriple>& edges);

  // An edge between two pre-clusters is intercluster, otherwise
  // intracluster. Endpoints become unchecked and affected.
  void insert_edge(EdgeId id, VertexId u, VertexId v);
  void delete_edge(EdgeId id);

  // Relabels the given edges intercluster and unchecks their endpoints.
  void separate(const std::vector<EdgeId>& edges);
  // Relabels every non-intercluster edge with exactly one endpoint in s.
  // Returns the number of edges relabeled.
  int cut_along(const VertexSet& s);

  // Static seeding: endpoints of intercluster edges unchecked, all other
  // vertices checked.
  void seed_marks();
  // Makes sure at least 2 lambda_max boundary edges of pre-cluster c (all
  // of them if fewer) have their endpoint in c unchecked.
  void uncheck_boundary(int c);

  // Runs one Find-and-Cut pass on pre-cluster c. Returns true when c was
  // cut; the update-partition hook has then run.
  bool find_and_cut(int c);
  // Find-and-Cut until no well-connected cluster has an unchecked vertex.
  void decompose_expanders();

  // Applies the hysteresis rules to pre-cluster c.
  void classify(int c);
  void classify_all();
  // Reverts the fragmented edges of c and fragments it again.
  void fragment_cluster(int c);
  // Fragments every poorly connected pre-cluster.
  void build_cluster_decomposition();

  // Pre-clusters containing a vertex touched since the last call.
  std::vector<int> take_affected();
  // Same set without clearing it.
  std::vector<int> affected_clusters() const;
  void touch(VertexId v) { affected_.insert(v); }

  // Sets S strictly inside a pre-cluster C, connected in G[C], that are
  // (1 - delta)-boundary-sparse with vol(S) <= lambda_max / phi and
  // lambda_min <= w(S, C \ S) <= lambda_max, yet have no unchecked vertex.
  // Exhaustive; meant for small graphs.
  std::vector<VertexSet> invariant_violations() const;

  // Edge operations on G' (the graph without intercluster edges) since the
  // previous drain, in application order.
  std::vector<EdgeOp> drain_local_ops() { return std::exchange(local_ops_, {}); }

  void set_update_partition_hook(std::function<void()> hook) { hook_ = std::move(hook); }

  const ClusteredGraph& clustered() const { return cg_; }
  ClusteredGraph& clustered() { return cg_; }
  const DynMultiGraph& graph() const { return cg_.graph(); }
  const LocalKCut& local_kcut() const { return lkc_; }
  const Params& params() const { return params_; }
  int64_t nu() const { return nu_; }
  const DecompositionStats& stats() const { return stats_; }
  ClusterClass cluster_class(int c) const { return cg_.record(Part::kPre, c).cls; }
  // Unchecked vertices of pre-cluster c in increasing order.
  std::vector<VertexId> unchecked(int c) const;

 private:
  void uncheck(VertexId v);
  void revert_fragments(int c);

  Params params_;
  int64_t nu_;
  DecompositionConfig config_;
  ClusteredGraph cg_;
  LocalKCut lkc_;
  std::set<VertexId> affected_;
  std::vector<EdgeOp> local_ops_;
  std::vector<int> responsibility_;
  std::function<void()> hook_;
  DecompositionStats stats_;
};

}  // namespace mincut
