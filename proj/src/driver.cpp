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

#include "mincut/driver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mincut/oracle.hpp"

namespace mincut {

namespace {

std::vector<Range> top_ranges(const DriverConfig& config) {
  std::vector<Range> out;
  for (const Range& r : ladder_ranges(config.lambda_cap))
    if (r.lambda_max >= config.lambda_floor) out.push_back(r);
  if (out.empty()) throw std::invalid_argument("no range between lambda_floor and lambda_cap");
  return out;
}

std::vector<LevelInstance::EdgeTriple> triples(const std::vector<EdgeOp>& ops) {
  std::vector<LevelInstance::EdgeTriple> out;
  for (const EdgeOp& op : ops) {
    if (op.kind != EdgeOp::Kind::kInsert)
      throw std::logic_error("initial operations must be insertions");
    out.emplace_back(op.id, op.u, op.v);
  }
  return out;
}

}  // namespace

LevelInstance::LevelInstance(int num_vertices, Range range, const DriverConfig& config, int depth)
    : n_(num_vertices),
      range_(range),
      config_(config),
      depth_(depth),
      params_(Params::for_range(range.lambda_min, range.lambda_max, config.phi, config.rho)) {
  params_.validate();
}

LevelInstance::~LevelInstance() = default;

EdgeList LevelInstance::edge_list() const {
  EdgeList g(n_);
  for (const auto& [id, ends] : edges_) g.add(ends.first, ends.second);
  return g;
}

int LevelInstance::non_isolated() const {
  std::vector<char> touched(n_, 0);
  int count = 0;
  for (const auto& [id, ends] : edges_)
    for (VertexId x : {ends.first, ends.second})
      if (!touched[x]) {
        touched[x] = 1;
        ++count;
      }
  return count;
}

bool LevelInstance::wants_base() const {
  if (depth_ >= config_.max_depth) return true;
  if (2 * static_cast<int64_t>(edges_.size()) <= params_.small_volume()) return true;
  const int count = non_isolated();
  return count <= 2 || count >= parent_size_;
}

void LevelInstance::build(const std::vector<EdgeTriple>& edges) {
  edges_.clear();
  for (const auto& [id, u, v] : edges) {
    if (!edges_.emplace(id, std::make_pair(u, v)).second)
      throw std::invalid_argument("duplicate edge id " + std::to_string(id));
  }
  rebuild();
}

void LevelInstance::rebuild() {
  ++stats_.rebuilds;
  since_build_ = 0;
  base_cache_.reset();
  decomposer_.reset();
  dec_.reset();
  store_.reset();
  sub_.reset();
  child_.reset();
  base_ = wants_base();
  rebuild_every_ = std::max<int64_t>(
      1, static_cast<int64_t>(std::ceil(static_cast<double>(edges_.size()) * params_.phi /
                                        params_.rho)));
  if (!base_) build_full();
}

void LevelInstance::build_full() {
  decomposer_ = make_decomposer(config_.decomposer, params_.phi);
  nu_ = decomposer_->certified() ? params_.nu : std::max(params_.nu, config_.uncertified_nu);
  DecompositionConfig dcfg;
  dcfg.lkc = config_.lkc;
  dcfg.audit_fragment = config_.audit_fragment;
  dec_ = std::make_unique<ClusterDecomposition>(n_, params_, nu_, dcfg);
  std::vector<EdgeTriple> all;
  for (const auto& [id, ends] : edges_) all.emplace_back(id, ends.first, ends.second);
  dec_->load(all);

  decomposer_->init(dec_->graph());
  std::vector<EdgeId> between;
  for (const auto& [id, u, v] : all)
    if (decomposer_->expander_of(u) != decomposer_->expander_of(v)) between.push_back(id);
  dec_->separate(between);
  dec_->seed_marks();
  dec_->drain_local_ops();

  const std::vector<Range> lower = sub_ranges(params_.lambda_max);
  if (!lower.empty()) {
    const ClusterDecomposition* dec = dec_.get();
    sub_ = std::make_unique<RangeLadder>(n_, lower, config_, depth_, [dec]() {
      std::vector<EdgeTriple> out;
      const DynMultiGraph& g = dec->graph();
      for (EdgeId e : g.live_edges()) {
        if (g.label(e) == EdgeLabel::kIntercluster) continue;
        auto [u, v] = g.endpoints(e);
        out.emplace_back(e, u, v);
      }
      return out;
    });
  }
  dec_->set_update_partition_hook([this]() { update_partition(); });

  update_partition();
  dec_->classify_all();
  dec_->decompose_expanders();
  dec_->build_cluster_decomposition();
  dec_->take_affected();
  if (sub_) sub_->feed(dec_->drain_local_ops());

  ClusteredGraph& cg = dec_->clustered();
  store_ = std::make_unique<MirrorCutStore>(2 * n_, n_, params_.lambda_max, nu_, params_.beta,
                                            config_.lkc);
  store_->build(cg.drain_mirror_ops());
  child_ = std::make_unique<LevelInstance>(n_, range_, config_, depth_ + 1);
  child_->set_parent_size(non_isolated());
  child_->build(triples(cg.drain_contracted_ops()));
  if (config_.self_check) check();
}

void LevelInstance::update_partition() {
  if (!sub_) return;
  for (int64_t cuts = 0;; ++cuts) {
    if (cuts > config_.partition_cut_cap)
      throw std::logic_error("update partition exceeded " +
                             std::to_string(config_.partition_cut_cap) + " cuts at depth " +
                             std::to_string(depth_));
    sub_->feed(dec_->drain_local_ops());
    const RangeLadder::Result r = sub_->evaluate();
    if (r.index == kNone) return;
    if (dec_->cut_along(r.answer.witness) == 0)
      throw std::logic_error("sub-range cut separates nothing");
    ++stats_.partition_cuts;
  }
}

void LevelInstance::apply(const std::vector<EdgeOp>& batch) {
  ++stats_.batches;
  stats_.updates += static_cast<int64_t>(batch.size());
  stats_.last_recourse = 0;
  base_cache_.reset();
  for (const EdgeOp& op : batch) {
    if (op.kind == EdgeOp::Kind::kInsert) {
      if (!edges_.emplace(op.id, std::make_pair(op.u, op.v)).second)
        throw std::invalid_argument("edge id " + std::to_string(op.id) + " already present");
    } else if (edges_.erase(op.id) == 0) {
      throw std::invalid_argument("edge id " + std::to_string(op.id) + " not present");
    }
  }
  since_build_ += static_cast<int64_t>(batch.size());
  if (wants_base() != base_ || (!base_ && since_build_ >= rebuild_every_)) {
    rebuild();
    return;
  }
  if (base_) return;

  for (const EdgeOp& op : batch) {
    if (op.kind == EdgeOp::Kind::kInsert)
      dec_->insert_edge(op.id, op.u, op.v);
    else
      dec_->delete_edge(op.id);
    dec_->separate(decomposer_->apply_update(dec_->graph(), op));
  }
  update_partition();
  for (int c : dec_->affected_clusters()) {
    dec_->classify(c);
    dec_->uncheck_boundary(c);
  }
  dec_->decompose_expanders();
  for (int c : dec_->take_affected())
    if (dec_->cluster_class(c) != ClusterClass::kWellConnected) dec_->fragment_cluster(c);
  if (sub_) sub_->feed(dec_->drain_local_ops());

  ClusteredGraph& cg = dec_->clustered();
  const std::vector<EdgeOp> mirror_ops = cg.drain_mirror_ops();
  stats_.mirror_ops += static_cast<int64_t>(mirror_ops.size());
  if (!mirror_ops.empty()) store_->batch_update(mirror_ops);
  const std::vector<EdgeOp> contracted = cg.drain_contracted_ops();
  stats_.recourse += static_cast<int64_t>(contracted.size());
  stats_.last_recourse = static_cast<int64_t>(contracted.size());
  const int size = non_isolated();
  if (!contracted.empty() || size != child_->parent_size()) {
    child_->set_parent_size(size);
    child_->apply(contracted);
  }
  if (config_.self_check) check();
}

LevelAnswer LevelInstance::base_answer() const {
  if (base_cache_) return *base_cache_;
  LevelAnswer a;
  const OracleResult r = min_proper_cut(edge_list());
  if (r.found && r.value <= params_.lambda_max) {
    a.status = LevelAnswer::Status::kValue;
    a.value = r.value;
    a.witness = r.witness;
  }
  base_cache_ = a;
  return a;
}

VertexSet LevelInstance::mirror_witness(const VertexSet& members) const {
  VertexSet real;
  bool has_z = false;
  for (VertexId x : members) {
    if (x < n_)
      real.push_back(x);
    else
      has_z = true;
  }
  if (!has_z) return real;
  // S holds the super-vertex, so the rest of its pre-cluster is the side
  // that lies inside G.
  const ClusteredGraph& cg = dec_->clustered();
  VertexSet rest;
  for (VertexId x : cg.record(Part::kPre, cg.cluster_of(Part::kPre, real.front())).sorted_members())
    if (!std::binary_search(real.begin(), real.end(), x)) rest.push_back(x);
  return rest;
}

VertexSet LevelInstance::expand_child_witness(const VertexSet& clusters) const {
  const ClusteredGraph& cg = dec_->clustered();
  VertexSet out;
  for (VertexId c : clusters) {
    const ClusterRecord& rec = cg.record(Part::kCluster, c);
    if (!rec.alive) continue;
    out.insert(out.end(), rec.members.begin(), rec.members.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

LevelAnswer LevelInstance::answer() const {
  if (base_) return base_answer();
  LevelAnswer best;
  const MirrorCutStore::Min m = store_->min();
  if (m.found) {
    best.status = LevelAnswer::Status::kValue;
    best.value = m.value;
    best.witness = mirror_witness(*m.members);
  }
  const LevelAnswer c = child_->answer();
  if (c.found() && (!best.found() || c.value < best.value)) {
    best.status = LevelAnswer::Status::kValue;
    best.value = c.value;
    best.witness = expand_child_witness(c.witness);
  }
  if (best.found() && best.value > params_.lambda_max) best = LevelAnswer{};
  return best;
}

void LevelInstance::visit(const std::function<void(const LevelInstance&)>& f) const {
  f(*this);
  if (child_) child_->visit(f);
  if (!sub_) return;
  for (int i = 0; i < static_cast<int>(sub_->ranges().size()); ++i)
    if (const LevelInstance* s = sub_->instance(i)) s->visit(f);
}

void LevelInstance::check() const {
  if (base_) return;
  const ClusteredGraph& cg = dec_->clustered();
  cg.audit();
  store_->audit();
  if (cg.mirror_vertex_count() > 2 * n_)
    throw std::logic_error("mirror graph outgrew its vertex range");
  // The child must hold exactly the contracted graph.
  std::map<EdgeId, std::pair<VertexId, VertexId>> want;
  const DynMultiGraph& g = cg.graph();
  for (EdgeId e : g.live_edges()) {
    if (g.label(e) == EdgeLabel::kIntracluster) continue;
    auto [u, v] = g.endpoints(e);
    want[e] = {cg.cluster_of(Part::kCluster, u), cg.cluster_of(Part::kCluster, v)};
  }
  if (want != child_->edges()) throw std::logic_error("child graph is not the contraction");
  if (static_cast<int>(edges_.size()) != g.num_edges())
    throw std::logic_error("level edge map out of sync");
}

// ---------------------------------------------------------------------------

RangeLadder::RangeLadder(int num_vertices, std::vector<Range> ranges, const DriverConfig& config,
                         int depth, Source source)
    : n_(num_vertices),
      ranges_(std::move(ranges)),
      config_(config),
      depth_(depth),
      source_(std::move(source)),
      slots_(ranges_.size()) {}

RangeLadder::~RangeLadder() = default;

void RangeLadder::feed(const std::vector<EdgeOp>& ops) {
  for (Slot& s : slots_) {
    if (!s.instance) continue;
    for (const EdgeOp& op : ops) {
      auto it = s.log.find(op.id);
      if (it == s.log.end()) {
        Pending p;
        if (op.kind == EdgeOp::Kind::kDelete) p.before = std::make_pair(op.u, op.v);
        it = s.log.emplace(op.id, p).first;
      }
      if (op.kind == EdgeOp::Kind::kInsert)
        it->second.now = std::make_pair(op.u, op.v);
      else
        it->second.now.reset();
      if (it->second.before == it->second.now) s.log.erase(it);
    }
  }
}

std::vector<EdgeOp> RangeLadder::catch_up_batch(const std::map<EdgeId, Pending>& log) {
  std::vector<EdgeOp> insertions, deletions;
  for (const auto& [id, p] : log) {
    if (p.before && p.now) {
      insertions.push_back({EdgeOp::Kind::kDelete, id, p.before->first, p.before->second});
      insertions.push_back({EdgeOp::Kind::kInsert, id, p.now->first, p.now->second});
    } else if (p.now) {
      insertions.push_back({EdgeOp::Kind::kInsert, id, p.now->first, p.now->second});
    } else if (p.before) {
      deletions.push_back({EdgeOp::Kind::kDelete, id, p.before->first, p.before->second});
    }
  }
  insertions.insert(insertions.end(), deletions.begin(), deletions.end());
  return insertions;
}

RangeLadder::Result RangeLadder::evaluate() {
  ++tick_;
  for (int i = 0; i < static_cast<int>(slots_.size()); ++i) {
    Slot& s = slots_[i];
    if (!s.instance) {
      s.instance = std::make_unique<LevelInstance>(n_, ranges_[i], config_, depth_);
      s.instance->build(source_());
      s.log.clear();
    } else if (!s.log.empty()) {
      s.instance->apply(catch_up_batch(s.log));
      s.log.clear();
    }
    s.last_update = tick_;
    LevelAnswer a = s.instance->answer();
    if (a.found()) return {i, std::move(a)};
  }
  return {};
}

// ---------------------------------------------------------------------------

DynamicMinCut::DynamicMinCut(int num_vertices, DriverConfig config)
    : n_(num_vertices),
      config_(config),
      connectivity_(num_vertices),
      ladder_(num_vertices, top_ranges(config), config, 0, [this]() {
        std::vector<LevelInstance::EdgeTriple> out;
        for (const auto& [id, ends] : edges_) out.emplace_back(id, ends.first, ends.second);
        return out;
      }) {
  if (num_vertices < 2) throw std::invalid_argument("need at least two vertices");
  refresh();
}

void DynamicMinCut::build(const EdgeList& g) {
  if (g.n != n_) throw std::invalid_argument("vertex count mismatch");
  if (!edges_.empty() || next_id_ != 0) throw std::logic_error("build on a non-empty instance");
  std::vector<EdgeOp> ops;
  for (const auto& [u, v] : g.edges) add_edge(u, v, &ops);
  ladder_.feed(ops);
  refresh();
}

EdgeId DynamicMinCut::add_edge(VertexId u, VertexId v, std::vector<EdgeOp>* ops) {
  if (u == v) throw std::invalid_argument("self-loops are not supported");
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
  const EdgeId id = next_id_++;
  edges_[id] = {u, v};
  connectivity_.insert(id, u, v, 0);
  ops->push_back({EdgeOp::Kind::kInsert, id, u, v});
  return id;
}

void DynamicMinCut::remove_edge(EdgeId e, std::vector<EdgeOp>* ops) {
  auto it = edges_.find(e);
  if (it == edges_.end()) throw std::out_of_range("unknown edge id");
  const auto [u, v] = it->second;
  edges_.erase(it);
  connectivity_.erase(e);
  ops->push_back({EdgeOp::Kind::kDelete, e, u, v});
}

EdgeId DynamicMinCut::insert(VertexId u, VertexId v) {
  std::vector<EdgeOp> ops;
  const EdgeId id = add_edge(u, v, &ops);
  ladder_.feed(ops);
  ++updates_;
  refresh();
  return id;
}

void DynamicMinCut::erase(EdgeId e) {
  std::vector<EdgeOp> ops;
  remove_edge(e, &ops);
  ladder_.feed(ops);
  ++updates_;
  refresh();
}

void DynamicMinCut::apply(const std::vector<Update>& batch) {
  std::vector<EdgeOp> ops;
  for (const Update& up : batch) {
    if (up.kind == Update::Kind::kInsert) {
      add_edge(up.u, up.v, &ops);
    } else {
      const EdgeId e = find_edge(up.u, up.v);
      if (e == kNone)
        throw std::invalid_argument("no edge between " + std::to_string(up.u) + " and " +
                                    std::to_string(up.v));
      remove_edge(e, &ops);
    }
  }
  ladder_.feed(ops);
  updates_ += static_cast<int64_t>(batch.size());
  refresh();
}

EdgeId DynamicMinCut::find_edge(VertexId u, VertexId v) const {
  for (const auto& [id, ends] : edges_)
    if ((ends.first == u && ends.second == v) || (ends.first == v && ends.second == u)) return id;
  return kNone;
}

EdgeList DynamicMinCut::graph() const {
  EdgeList g(n_);
  for (const auto& [id, ends] : edges_) g.add(ends.first, ends.second);
  return g;
}

void DynamicMinCut::refresh() {
  answer_ = MinCutAnswer{};
  if (connectivity_.num_components() > 1) {
    answer_.kind = MinCutAnswer::Kind::kDisconnected;
    for (VertexId x = 0; x < n_; ++x)
      if (connectivity_.same_component(0, x)) answer_.witness.push_back(x);
    return;
  }
  RangeLadder::Result r = ladder_.evaluate();
  if (r.index == kNone) return;
  answer_.kind = MinCutAnswer::Kind::kValue;
  answer_.value = r.answer.value;
  answer_.witness = std::move(r.answer.witness);
  answer_.range = r.index;
}

}  // namespace mincut
