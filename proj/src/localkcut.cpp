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


#include "mincut/localkcut.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mincut {

namespace {

constexpr char kUndecided = 0;
constexpr char kInside = 1;
constexpr char kOutside = 2;

// Include/exclude search over the frontier of S. Every leaf has all
// neighbours of S excluded, so each connected S is reached exactly once and
// `cut` is its boundary there.
class FrontierSearch {
 public:
  FrontierSearch(const DynMultiGraph& g, int64_t max_cut, int64_t max_volume, int64_t* work)
      : g_(g),
        max_cut_(max_cut),
        max_volume_(max_volume),
        work_(work),
        state_(g.num_vertices(), kUndecided),
        to_inside_(g.num_vertices(), 0),
        pos_(g.num_vertices(), -1) {}

  template <typename Visit>
  void run(VertexId root, Visit&& visit) {
    include(root);
    if (volume_ <= max_volume_) recurse(visit);
  }

  const std::vector<VertexId>& members() const { return inside_; }
  int64_t cut() const { return cut_; }

 private:
  void frontier_add(VertexId y) {
    pos_[y] = static_cast<int>(frontier_.size());
    frontier_.push_back(y);
  }
  void frontier_remove(VertexId y) {
    const int p = pos_[y];
    const VertexId last = frontier_.back();
    frontier_[p] = last;
    pos_[last] = p;
    frontier_.pop_back();
    pos_[y] = -1;
  }

  // Moves y into S; returns the edges from y to excluded vertices.
  int64_t include(VertexId y) {
    state_[y] = kInside;
    inside_.push_back(y);
    volume_ += g_.degree(y);
    int64_t to_outside = 0;
    for (EdgeId e : g_.incident(y)) {
      const VertexId z = g_.other(e, y);
      if (state_[z] == kOutside) ++to_outside;
      if (++to_inside_[z] == 1 && state_[z] == kUndecided) frontier_add(z);
    }
    cut_ += to_outside;
    return to_outside;
  }

  void undo_include(VertexId y, int64_t to_outside) {
    cut_ -= to_outside;
    const auto& inc = g_.incident(y);
    for (auto it = inc.rbegin(); it != inc.rend(); ++it) {
      const VertexId z = g_.other(*it, y);
      if (--to_inside_[z] == 0 && state_[z] == kUndecided) frontier_remove(z);
    }
    volume_ -= g_.degree(y);
    inside_.pop_back();
    state_[y] = kUndecided;
  }

  template <typename Visit>
  void recurse(Visit& visit) {
    ++*work_;
    if (frontier_.empty()) {
      visit(*this);
      return;
    }
    const VertexId y = frontier_.back();
    frontier_remove(y);
    state_[y] = kOutside;
    cut_ += to_inside_[y];
    if (cut_ <= max_cut_) recurse(visit);
    cut_ -= to_inside_[y];
    state_[y] = kUndecided;

    const int64_t to_outside = include(y);
    if (volume_ <= max_volume_ && cut_ <= max_cut_) recurse(visit);
    undo_include(y, to_outside);
    frontier_add(y);
  }

  const DynMultiGraph& g_;
  int64_t max_cut_;
  int64_t max_volume_;
  int64_t* work_;
  std::vector<char> state_;
  std::vector<int32_t> to_inside_;
  std::vector<int> pos_;
  std::vector<VertexId> frontier_;
  std::vector<VertexId> inside_;
  int64_t volume_ = 0;
  int64_t cut_ = 0;
};

}  // namespace

LocalKCut::LocalKCut(int num_vertices, int64_t lambda_max, int64_t nu, int beta,
                     LocalKCutConfig config)
    : lambda_max_(lambda_max), nu_(nu), beta_(beta), config_(config), graph_(num_vertices) {
  if (beta < 1) throw std::invalid_argument("beta must be positive");
  if (lambda_max < 0 || nu <= lambda_max)
    throw std::invalid_argument("need 0 <= lambda_max < nu");
  rebuild_packing();
}

void LocalKCut::add_vertices(int count) {
  graph_.add_vertices(count);
  if (has_packing()) packing_.add_vertices(count);
}

bool LocalKCut::wants_packing() const {
  return config_.force_packing || (config_.forest_filter && !forest_test_implied()) ||
         config_.engine == LocalKCutConfig::Engine::kLiteral;
}

void LocalKCut::rebuild_packing() {
  forests_dirty_ = true;
  const auto ids = graph_.live_edges();
  std::vector<std::pair<VertexId, VertexId>> ends;
  ends.reserve(ids.size());
  for (EdgeId e : ids) ends.push_back(graph_.endpoints(e));
  packing_epoch_edges_ = static_cast<int64_t>(ids.size());
  if (wants_packing()) {
    const int k = ForestPacking::forest_count(lambda_max_, packing_epoch_edges_, epsilon(),
                                              config_.packing_cap);
    packing_ = ForestPacking(graph_.num_vertices(), k);
    packing_.build(graph_.num_vertices(), ids, ends);
    update_work_ += static_cast<int64_t>(k) * static_cast<int64_t>(ids.size() + 1);
    ++packing_rebuilds_;
  }
  if (config_.engine == LocalKCutConfig::Engine::kLiteral) {
    const int64_t universe = std::max<int64_t>(
        {2, 2 * packing_epoch_edges_, 2 * static_cast<int64_t>(beta_), nu_, lambda_max_});
    red_blue_ = ColoringFamily(static_cast<int>(universe), 2 * beta_, static_cast<int>(nu_),
                               config_.construction);
    green_yellow_ = ColoringFamily(static_cast<int>(universe), 2 * beta_,
                                   static_cast<int>(lambda_max_), config_.construction);
    for (EdgeId e : ids) {
      red_blue_.assign_slot(e);
      green_yellow_.assign_slot(e);
    }
  }
}

void LocalKCut::build(const std::vector<EdgeId>& ids,
                      const std::vector<std::pair<VertexId, VertexId>>& ends) {
  if (ids.size() != ends.size()) throw std::invalid_argument("ids and ends differ in length");
  graph_ = DynMultiGraph(graph_.num_vertices());
  for (size_t j = 0; j < ids.size(); ++j)
    graph_.insert_edge(ends[j].first, ends[j].second, EdgeLabel::kIntracluster, ids[j]);
  rebuild_packing();
}

void LocalKCut::insert(EdgeId e, VertexId u, VertexId v) {
  graph_.insert_edge(u, v, EdgeLabel::kIntracluster, e);
  ++update_work_;
  forests_dirty_ = true;
  if (config_.engine == LocalKCutConfig::Engine::kLiteral) {
    red_blue_.assign_slot(e);
    green_yellow_.assign_slot(e);
  }
  if (!has_packing()) return;
  if (graph_.num_edges() > 2 * std::max<int64_t>(packing_epoch_edges_, 1)) {
    rebuild_packing();
    return;
  }
  packing_.insert(e, u, v);
  update_work_ += packing_.size();
}

void LocalKCut::erase(EdgeId e) {
  if (e < 0 || e >= graph_.edge_capacity() || !graph_.alive(e))
    throw std::out_of_range("unknown edge id");
  graph_.delete_edge(e);
  ++update_work_;
  forests_dirty_ = true;
  if (config_.engine == LocalKCutConfig::Engine::kLiteral) {
    red_blue_.free_slot(e);
    green_yellow_.free_slot(e);
  }
  if (!has_packing()) return;
  if (packing_epoch_edges_ >= 4 && 2 * graph_.num_edges() < packing_epoch_edges_) {
    rebuild_packing();
    return;
  }
  packing_.erase(e);
  update_work_ += packing_.size();
}

void LocalKCut::refresh_forests() const {
  if (!forests_dirty_) return;
  forests_dirty_ = false;
  forest_bits_.clear();
  if (!has_packing()) return;
  const size_t words = (static_cast<size_t>(graph_.edge_capacity()) + 63) / 64;
  std::set<std::vector<uint64_t>> seen;
  for (int i = 0; i < packing_.size(); ++i) {
    std::vector<uint64_t> bits(words, 0);
    for (EdgeId e : packing_.forest(i).forest_edges()) bits[e >> 6] |= uint64_t{1} << (e & 63);
    if (seen.insert(bits).second) forest_bits_.push_back(std::move(bits));
  }
}

int LocalKCut::distinct_forests() const {
  refresh_forests();
  return static_cast<int>(forest_bits_.size());
}

int LocalKCut::crossing(const VertexSet& s, int distinct_index) const {
  refresh_forests();
  const auto& bits = forest_bits_.at(distinct_index);
  std::vector<char> in(graph_.num_vertices(), 0);
  for (VertexId x : s) in[x] = 1;
  int count = 0;
  for (VertexId x : s)
    for (EdgeId e : graph_.incident(x))
      if (!in[graph_.other(e, x)] && (bits[e >> 6] >> (e & 63) & 1)) ++count;
  return count;
}

bool LocalKCut::crosses_some_forest_lightly(const std::vector<EdgeId>& boundary) const {
  for (const auto& bits : forest_bits_) {
    int64_t count = 0;
    for (EdgeId e : boundary) count += bits[e >> 6] >> (e & 63) & 1;
    if (count <= 2 * static_cast<int64_t>(beta_)) return true;
  }
  return false;
}

std::vector<VertexSet> LocalKCut::query(VertexId v) const {
  if (v < 0 || v >= graph_.num_vertices()) throw std::out_of_range("unknown vertex");
  refresh_forests();
  return config_.engine == LocalKCutConfig::Engine::kLiteral ? literal(v) : closed_form(v);
}

std::vector<VertexSet> LocalKCut::closed_form(VertexId v) const {
  const bool filter = config_.forest_filter && !forest_test_implied();
  std::vector<VertexSet> out;
  std::vector<char> in(graph_.num_vertices(), 0);
  std::vector<EdgeId> boundary;
  FrontierSearch search(graph_, lambda_max_, nu_, &query_work_);
  search.run(v, [&](const FrontierSearch& s) {
    if (filter) {
      boundary.clear();
      for (VertexId x : s.members()) in[x] = 1;
      for (VertexId x : s.members())
        for (EdgeId e : graph_.incident(x))
          if (!in[graph_.other(e, x)]) boundary.push_back(e);
      for (VertexId x : s.members()) in[x] = 0;
      if (!crosses_some_forest_lightly(boundary)) return;
    }
    VertexSet set = s.members();
    std::sort(set.begin(), set.end());
    out.push_back(std::move(set));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> LocalKCut::literal(VertexId v) const {
  const int n = graph_.num_vertices();
  std::set<VertexSet> found;
  std::vector<int> stamp(n, 0);
  std::vector<char> inside(n, 0);
  int round = 0;
  std::vector<VertexId> queue;
  for (const auto& bits : forest_bits_) {
    auto in_tree = [&](EdgeId e) { return (bits[e >> 6] >> (e & 63) & 1) != 0; };
    for (int r = 0; r < red_blue_.size(); ++r) {
      for (int gy = 0; gy < green_yellow_.size(); ++gy) {
        ++round;
        queue.assign(1, v);
        stamp[v] = round;
        int64_t volume = graph_.degree(v);
        bool aborted = volume > nu_;
        for (size_t h = 0; h < queue.size() && !aborted; ++h) {
          const VertexId x = queue[h];
          for (EdgeId e : graph_.incident(x)) {
            ++query_work_;
            const bool blue_tree = in_tree(e) && !red_blue_.contains(r, red_blue_.slot_of(e));
            const bool green = !in_tree(e) && green_yellow_.contains(gy, green_yellow_.slot_of(e));
            if (!blue_tree && !green) continue;
            const VertexId y = graph_.other(e, x);
            if (stamp[y] == round) continue;
            stamp[y] = round;
            volume += graph_.degree(y);
            if (volume > nu_) {
              aborted = true;
              break;
            }
            queue.push_back(y);
          }
        }
        if (aborted) continue;
        for (VertexId x : queue) inside[x] = 1;
        int64_t cut = 0;
        for (VertexId x : queue)
          for (EdgeId e : graph_.incident(x)) cut += !inside[graph_.other(e, x)];
        for (VertexId x : queue) inside[x] = 0;
        if (cut > lambda_max_) continue;
        VertexSet set = queue;
        std::sort(set.begin(), set.end());
        found.insert(std::move(set));
      }
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace mincut
