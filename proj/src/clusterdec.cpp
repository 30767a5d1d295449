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

#include "mincut/clusterdec.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "mincut/oracle.hpp"

namespace mincut {

namespace {

// Connected components of the subgraph induced by `piece`.
std::vector<VertexSet> components_within(const DynMultiGraph& g, const VertexSet& piece) {
  std::vector<char> in(g.num_vertices(), 0), seen(g.num_vertices(), 0);
  for (VertexId x : piece) in[x] = 1;
  std::vector<VertexSet> out;
  std::vector<VertexId> stack;
  for (VertexId s : piece) {
    if (seen[s]) continue;
    VertexSet comp{s};
    seen[s] = 1;
    stack.assign(1, s);
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(x)) {
        const VertexId y = g.other(e, x);
        if (in[y] && !seen[y]) {
          seen[y] = 1;
          comp.push_back(y);
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

void grow_labels(std::vector<int>& label, int* next, int n) {
  while (static_cast<int>(label.size()) < n) label.push_back((*next)++);
}

// Edges inside `members` whose endpoints now carry different labels.
std::vector<EdgeId> newly_separated(const DynMultiGraph& g, const VertexSet& members,
                                    const std::vector<int>& label) {
  std::vector<EdgeId> out;
  std::vector<char> in(g.num_vertices(), 0);
  for (VertexId x : members) in[x] = 1;
  for (VertexId x : members)
    for (EdgeId e : g.incident(x)) {
      const VertexId y = g.other(e, x);
      if (in[y] && x < y && label[x] != label[y]) out.push_back(e);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Sweep cut along the second eigenvector of the normalized Laplacian of the
// induced subgraph; the prefix with the smallest G-conductance.
VertexSet spectral_sweep(const DynMultiGraph& g, const VertexSet& piece) {
  const int k = static_cast<int>(piece.size());
  std::map<VertexId, int> local;
  for (int i = 0; i < k; ++i) local[piece[i]] = i;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(k, k);
  Eigen::VectorXd d = Eigen::VectorXd::Zero(k);
  for (int i = 0; i < k; ++i)
    for (EdgeId e : g.incident(piece[i])) {
      auto it = local.find(g.other(e, piece[i]));
      if (it != local.end()) {
        a(i, it->second) += 1.0;
        d(i) += 1.0;
      }
    }
  Eigen::MatrixXd lap = Eigen::MatrixXd::Identity(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (a(i, j) != 0.0) lap(i, j) -= a(i, j) / std::sqrt(d(i) * d(j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
  Eigen::VectorXd f = solver.eigenvectors().col(1);
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return f(x) / std::sqrt(d(x)) < f(y) / std::sqrt(d(y));
  });
  int64_t total_vol = 0;
  for (VertexId x : piece) total_vol += g.degree(x);
  std::vector<char> in_prefix(k, 0);
  int64_t cut = 0, vol = 0;
  double best = std::numeric_limits<double>::infinity();
  int best_len = 1;
  for (int len = 1; len < k; ++len) {
    const int i = order[len - 1];
    in_prefix[i] = 1;
    vol += g.degree(piece[i]);
    for (int j = 0; j < k; ++j)
      if (j != i) cut += static_cast<int64_t>(a(i, j)) * (in_prefix[j] ? -1 : 1);
    const int64_t denom = std::min(vol, total_vol - vol);
    const double c = denom > 0 ? static_cast<double>(cut) / denom : 1.0;
    if (c < best) {
      best = c;
      best_len = len;
    }
  }
  VertexSet side;
  for (int len = 0; len < best_len; ++len) side.push_back(piece[order[len]]);
  std::sort(side.begin(), side.end());
  return side;
}

}  // namespace

void TrivialDecomposer::init(const DynMultiGraph& g) {
  label_.assign(g.num_vertices(), -1);
  next_ = 0;
  VertexSet all(g.num_vertices());
  std::iota(all.begin(), all.end(), 0);
  for (const auto& comp : components_within(g, all)) {
    for (VertexId x : comp) label_[x] = next_;
    ++next_;
  }
}

std::vector<EdgeId> TrivialDecomposer::apply_update(const DynMultiGraph& g, const EdgeOp& op) {
  grow_labels(label_, &next_, g.num_vertices());
  if (op.kind == EdgeOp::Kind::kInsert) {
    if (label_[op.u] == label_[op.v]) return {};
    ++recourse_;
    return {op.id};
  }
  if (label_[op.u] != label_[op.v]) return {};
  VertexSet members;
  for (VertexId x = 0; x < g.num_vertices(); ++x)
    if (label_[x] == label_[op.u]) members.push_back(x);
  auto comps = components_within(g, members);
  for (size_t i = 1; i < comps.size(); ++i) {
    for (VertexId x : comps[i]) label_[x] = next_;
    ++next_;
  }
  return {};
}

double ConductanceDecomposer::min_conductance(const DynMultiGraph& g, const VertexSet& piece,
                                              VertexSet* side) {
  const int k = static_cast<int>(piece.size());
  if (k < 2) {
    if (side) side->clear();
    return 1.0;
  }
  if (k > 24) throw std::invalid_argument("exhaustive conductance limited to 24 vertices");
  std::map<VertexId, int> local;
  for (int i = 0; i < k; ++i) local[piece[i]] = i;
  std::vector<std::vector<int>> w(k, std::vector<int>(k, 0));
  std::vector<int64_t> deg(k, 0);
  int64_t total = 0;
  for (int i = 0; i < k; ++i) {
    deg[i] = g.degree(piece[i]);
    total += deg[i];
    for (EdgeId e : g.incident(piece[i])) {
      auto it = local.find(g.other(e, piece[i]));
      if (it != local.end()) ++w[i][it->second];
    }
  }
  double best = std::numeric_limits<double>::infinity();
  uint32_t best_mask = 0;
  // The last vertex stays outside X; complements give the same ratio.
  for (uint32_t mask = 1; mask < (1u << (k - 1)); ++mask) {
    int64_t vol = 0, cut = 0;
    for (int i = 0; i < k; ++i) {
      if (!(mask >> i & 1u)) continue;
      vol += deg[i];
      for (int j = 0; j < k; ++j)
        if (!(mask >> j & 1u)) cut += w[i][j];
    }
    const int64_t denom = std::min(vol, total - vol);
    const double c = denom > 0 ? static_cast<double>(cut) / denom
                               : std::numeric_limits<double>::infinity();
    if (c < best) {
      best = c;
      best_mask = mask;
    }
  }
  if (side) {
    side->clear();
    for (int i = 0; i < k; ++i)
      if (best_mask >> i & 1u) side->push_back(piece[i]);
  }
  return best;
}

void ConductanceDecomposer::certify(const DynMultiGraph& g, VertexSet piece) {
  std::vector<VertexSet> work = components_within(g, piece);
  while (!work.empty()) {
    VertexSet p = std::move(work.back());
    work.pop_back();
    VertexSet side;
    bool split = false;
    if (static_cast<int>(p.size()) > config_.exhaustive_limit) {
      side = spectral_sweep(g, p);
      split = true;
    } else if (p.size() > 1 && min_conductance(g, p, &side) < config_.phi) {
      split = true;
    }
    if (!split) {
      for (VertexId x : p) label_[x] = next_;
      ++next_;
      continue;
    }
    VertexSet rest;
    std::set_difference(p.begin(), p.end(), side.begin(), side.end(), std::back_inserter(rest));
    for (auto* half : {&side, &rest})
      for (auto& comp : components_within(g, *half)) work.push_back(std::move(comp));
  }
}

void ConductanceDecomposer::init(const DynMultiGraph& g) {
  label_.assign(g.num_vertices(), -1);
  next_ = 0;
  VertexSet all(g.num_vertices());
  std::iota(all.begin(), all.end(), 0);
  certify(g, all);
}

std::vector<EdgeId> ConductanceDecomposer::recertify(const DynMultiGraph& g, int expander) {
  VertexSet members;
  for (VertexId x = 0; x < g.num_vertices(); ++x)
    if (label_[x] == expander) members.push_back(x);
  certify(g, members);
  auto out = newly_separated(g, members, label_);
  recourse_ += static_cast<int64_t>(out.size());
  return out;
}

std::vector<EdgeId> ConductanceDecomposer::apply_update(const DynMultiGraph& g,
                                                        const EdgeOp& op) {
  grow_labels(label_, &next_, g.num_vertices());
  if (label_[op.u] == label_[op.v]) return recertify(g, label_[op.u]);
  // Removing a boundary edge only raises conductance. A new one adds
  // volume on both sides and can break either expander.
  if (op.kind == EdgeOp::Kind::kDelete) return {};
  ++recourse_;
  const int a = label_[op.u], b = label_[op.v];
  std::vector<EdgeId> out = recertify(g, a);
  for (EdgeId e : recertify(g, b)) out.push_back(e);
  out.push_back(op.id);
  std::sort(out.begin(), out.end());
  return out;
}

std::unique_ptr<ExpanderDecomposer> make_decomposer(const std::string& name, double phi) {
  if (name == "trivial") return std::make_unique<TrivialDecomposer>();
  if (name == "conductance") {
    ConductanceConfig config;
    config.phi = phi;
    return std::make_unique<ConductanceDecomposer>(config);
  }
  throw std::invalid_argument("unknown decomposer: " + name);
}

ClusterDecomposition::ClusterDecomposition(int num_vertices, const Params& params, int64_t nu,
                                           DecompositionConfig config)
    : params_(params),
      nu_(nu),
      config_(config),
      cg_(num_vertices),
      lkc_(num_vertices, params.lambda_max, nu, params.beta, config.lkc),
      responsibility_(num_vertices, 0) {}

void ClusterDecomposition::load(const std::vector<EdgeTriple>& edges) {
  std::vector<EdgeId> ids;
  std::vector<std::pair<VertexId, VertexId>> ends;
  for (const auto& [id, u, v] : edges) {
    cg_.insert_edge(u, v, EdgeLabel::kIntracluster, id);
    ids.push_back(id);
    ends.emplace_back(u, v);
  }
  lkc_.build(ids, ends);
  for (VertexId x = 0; x < cg_.num_vertices(); ++x) cg_.set_checked(x, true);
}

void ClusterDecomposition::uncheck(VertexId v) {
  cg_.set_checked(v, false);
  affected_.insert(v);
}

void ClusterDecomposition::insert_edge(EdgeId id, VertexId u, VertexId v) {
  if (cg_.cluster_of(Part::kPre, u) != cg_.cluster_of(Part::kPre, v)) {
    cg_.insert_edge(u, v, EdgeLabel::kIntercluster, id);
  } else {
    cg_.insert_edge(u, v, EdgeLabel::kIntracluster, id);
    lkc_.insert(id, u, v);
    local_ops_.push_back({EdgeOp::Kind::kInsert, id, u, v});
  }
  uncheck(u);
  uncheck(v);
}

void ClusterDecomposition::delete_edge(EdgeId id) {
  auto [u, v] = cg_.graph().endpoints(id);
  if (cg_.graph().label(id) != EdgeLabel::kIntercluster) {
    lkc_.erase(id);
    local_ops_.push_back({EdgeOp::Kind::kDelete, id, u, v});
  }
  cg_.delete_edge(id);
  uncheck(u);
  uncheck(v);
}

void ClusterDecomposition::separate(const std::vector<EdgeId>& edges) {
  std::vector<std::pair<EdgeId, EdgeLabel>> changes;
  for (EdgeId e : edges) {
    if (cg_.graph().label(e) == EdgeLabel::kIntercluster) continue;
    changes.emplace_back(e, EdgeLabel::kIntercluster);
    lkc_.erase(e);
    auto [u, v] = cg_.graph().endpoints(e);
    local_ops_.push_back({EdgeOp::Kind::kDelete, e, u, v});
    uncheck(u);
    uncheck(v);
  }
  cg_.relabel(changes);
}

int ClusterDecomposition::cut_along(const VertexSet& s) {
  const DynMultiGraph& g = cg_.graph();
  std::vector<char> in(g.num_vertices(), 0);
  for (VertexId x : s) in[x] = 1;
  std::vector<EdgeId> crossing;
  for (VertexId x : s)
    for (EdgeId e : g.incident(x))
      if (!in[g.other(e, x)] && g.label(e) != EdgeLabel::kIntercluster) crossing.push_back(e);
  std::sort(crossing.begin(), crossing.end());
  crossing.erase(std::unique(crossing.begin(), crossing.end()), crossing.end());
  separate(crossing);
  return static_cast<int>(crossing.size());
}

void ClusterDecomposition::seed_marks() {
  const DynMultiGraph& g = cg_.graph();
  for (VertexId x = 0; x < g.num_vertices(); ++x) cg_.set_checked(x, true);
  for (EdgeId e : g.live_edges()) {
    if (g.label(e) != EdgeLabel::kIntercluster) continue;
    auto [u, v] = g.endpoints(e);
    uncheck(u);
    uncheck(v);
  }
}

void ClusterDecomposition::uncheck_boundary(int c) {
  const ClusterRecord& rec = cg_.record(Part::kPre, c);
  const DynMultiGraph& g = cg_.graph();
  auto inner = [&](EdgeId e) {
    auto [u, v] = g.endpoints(e);
    return cg_.cluster_of(Part::kPre, u) == c ? u : v;
  };
  int64_t have = 0;
  for (EdgeId e : rec.boundary_edges)
    if (!cg_.checked(inner(e))) ++have;
  const std::vector<EdgeId> boundary(rec.boundary_edges.begin(), rec.boundary_edges.end());
  for (EdgeId e : boundary) {
    if (have >= 2 * params_.lambda_max) break;
    const VertexId x = inner(e);
    if (!cg_.checked(x)) continue;
    uncheck(x);
    // Every boundary edge at x now has an unchecked inner endpoint.
    for (EdgeId f : g.incident(x))
      if (rec.boundary_edges.count(f)) ++have;
  }
}

std::vector<VertexId> ClusterDecomposition::unchecked(int c) const {
  std::vector<VertexId> out;
  for (VertexId x : cg_.record(Part::kPre, c).members)
    if (!cg_.checked(x)) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

bool ClusterDecomposition::find_and_cut(int c) {
  ++stats_.find_and_cut_calls;
  const size_t size = cg_.record(Part::kPre, c).members.size();
  for (VertexId v : unchecked(c)) {
    ++stats_.queries;
    for (const VertexSet& s : lkc_.query(v)) {
      if (s.size() >= size) continue;
      if (!cg_.is_boundary_sparse(s, c, params_.delta)) continue;
      ++stats_.sparse_cuts;
      stats_.max_responsibility = std::max(stats_.max_responsibility, ++responsibility_[v]);
      cut_along(s);
      if (hook_) hook_();
      return true;
    }
    cg_.set_checked(v, true);
  }
  return false;
}

void ClusterDecomposition::decompose_expanders() {
  for (;;) {
    int target = kNone;
    for (int c : cg_.clusters(Part::kPre)) {
      classify(c);
      if (cluster_class(c) == ClusterClass::kWellConnected && !unchecked(c).empty()) {
        target = c;
        break;
      }
    }
    if (target == kNone) return;
    find_and_cut(target);
  }
}

void ClusterDecomposition::revert_fragments(int c) {
  const DynMultiGraph& g = cg_.graph();
  std::vector<std::pair<EdgeId, EdgeLabel>> changes;
  for (VertexId x : cg_.record(Part::kPre, c).members)
    for (EdgeId e : g.incident(x))
      if (g.label(e) == EdgeLabel::kFragmented && g.endpoints(e).first == x)
        changes.emplace_back(e, EdgeLabel::kIntracluster);
  cg_.relabel(changes);
}

void ClusterDecomposition::classify(int c) {
  const ClusterRecord& rec = cg_.record(Part::kPre, c);
  const int64_t b = rec.boundary;
  const ClusterClass cls = rec.cls;
  if (b >= 6 * params_.lambda_max) {
    if (cls == ClusterClass::kFragmented) revert_fragments(c);
    cg_.set_class(c, ClusterClass::kWellConnected);
  } else if (b <= 3 * params_.lambda_max && cls == ClusterClass::kWellConnected) {
    cg_.set_class(c, ClusterClass::kPoorlyConnected);
  }
  if (cluster_class(c) != ClusterClass::kFragmented) revert_fragments(c);
}

void ClusterDecomposition::classify_all() {
  for (int c : cg_.clusters(Part::kPre)) classify(c);
}

void ClusterDecomposition::fragment_cluster(int c) {
  revert_fragments(c);
  VertexSet members = cg_.record(Part::kPre, c).sorted_members();
  FragmentParams fp;
  fp.lambda_min = params_.lambda_min;
  fp.lambda_max = params_.lambda_max;
  fp.nu = nu_;
  fp.delta = params_.delta;
  fp.beta = params_.beta;
  fp.count_constant = config_.fragment_count_constant;
  fp.audit = config_.audit_fragment;
  FragmentResult res = fragment(cg_.graph(), members, lkc_, fp);
  ++stats_.fragment_runs;
  if (!res.within_count_bound) ++stats_.fragments_over_bound;
  const DynMultiGraph& g = cg_.graph();
  std::vector<int> part(g.num_vertices(), -1);
  for (size_t i = 0; i < res.parts.size(); ++i)
    for (VertexId x : res.parts[i]) part[x] = static_cast<int>(i);
  std::vector<std::pair<EdgeId, EdgeLabel>> changes;
  for (VertexId x : members)
    for (EdgeId e : g.incident(x)) {
      const VertexId y = g.other(e, x);
      if (x < y && part[y] != -1 && part[x] != part[y] && g.label(e) == EdgeLabel::kIntracluster)
        changes.emplace_back(e, EdgeLabel::kFragmented);
    }
  cg_.relabel(changes);
  cg_.set_class(c, ClusterClass::kFragmented);
}

void ClusterDecomposition::build_cluster_decomposition() {
  classify_all();
  for (int c : cg_.clusters(Part::kPre))
    if (cluster_class(c) != ClusterClass::kWellConnected) fragment_cluster(c);
}

std::vector<int> ClusterDecomposition::take_affected() {
  std::set<int> out;
  for (VertexId v : affected_) out.insert(cg_.cluster_of(Part::kPre, v));
  affected_.clear();
  return {out.begin(), out.end()};
}

std::vector<int> ClusterDecomposition::affected_clusters() const {
  std::set<int> out;
  for (VertexId v : affected_) out.insert(cg_.cluster_of(Part::kPre, v));
  return {out.begin(), out.end()};
}

std::vector<VertexSet> ClusterDecomposition::invariant_violations() const {
  const EdgeList el = cg_.graph().to_edge_list();
  std::vector<VertexSet> out;
  for (int c : cg_.clusters(Part::kPre)) {
    const VertexSet members = cg_.record(Part::kPre, c).sorted_members();
    if (members.size() < 2) continue;
    for (const VertexSet& s :
         enumerate_sparse_cuts(el, members, params_.delta, params_.lambda_max,
                               params_.small_volume(), params_.lambda_min)) {
      bool any_unchecked = false;
      for (VertexId x : s) any_unchecked |= !cg_.checked(x);
      if (!any_unchecked) out.push_back(s);
    }
  }
  return out;
}

}  // namespace mincut
