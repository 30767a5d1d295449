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


#include "mincut/packing.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace mincut {

ForestPacking::ForestPacking(int num_vertices, int forests)
    : num_vertices_(num_vertices), forests_(forests, DynamicMsf(num_vertices)) {
  if (forests < 1) throw std::invalid_argument("packing needs at least one forest");
}

int ForestPacking::forest_count(int64_t lambda, int64_t m, double epsilon, int cap) {
  if (epsilon <= 0.0) throw std::invalid_argument("epsilon must be positive");
  const double logm = std::log(static_cast<double>(std::max<int64_t>(m, 2)));
  const double raw = 6.0 * static_cast<double>(std::max<int64_t>(lambda, 1)) * logm /
                     (epsilon * epsilon);
  int k = static_cast<int>(std::ceil(raw - 1e-9));
  k = std::max(k, 1);
  if (cap > 0) k = std::min(k, cap);
  return k;
}

void ForestPacking::build(int num_vertices, const std::vector<EdgeId>& ids,
                          const std::vector<std::pair<VertexId, VertexId>>& ends) {
  num_vertices_ = num_vertices;
  const int k = size();
  loads_.clear();
  EdgeId max_id = -1;
  for (EdgeId e : ids) max_id = std::max(max_id, e);
  loads_.resize(max_id + 1);
  for (EdgeId e : ids) loads_[e].assign(k, 0);
  std::vector<int64_t> weights(ids.size(), 0);
  for (int i = 0; i < k; ++i) {
    forests_[i].build(num_vertices, ids, ends, weights);
    for (size_t j = 0; j < ids.size(); ++j) {
      const EdgeId e = ids[j];
      const int32_t prev = i == 0 ? 0 : loads_[e][i - 1];
      loads_[e][i] = prev + (forests_[i].in_forest(e) ? 1 : 0);
      weights[j] = loads_[e][i];
    }
  }
}

void ForestPacking::add_vertices(int count) {
  for (auto& f : forests_) f.add_vertices(count);
  num_vertices_ += count;
}

int64_t ForestPacking::load(EdgeId e, int i) const {
  if (e < 0 || static_cast<size_t>(e) >= loads_.size() || loads_[e].empty())
    throw std::out_of_range("unknown edge id");
  return loads_[e][i];
}

int ForestPacking::respects_count(const VertexSet& s, int i) const {
  std::vector<char> in(num_vertices_, 0);
  for (VertexId v : s) in[v] = 1;
  int count = 0;
  for (EdgeId e : forests_[i].forest_edges()) {
    auto [u, v] = forests_[i].endpoints(e);
    if (in[u] != in[v]) ++count;
  }
  return count;
}

std::vector<ChangeSet> ForestPacking::insert(EdgeId e, VertexId u, VertexId v) {
  if (e >= 0 && static_cast<size_t>(e) < loads_.size() && !loads_[e].empty())
    throw std::invalid_argument("edge id already present");
  return cascade(e, u, v, true);
}

std::vector<ChangeSet> ForestPacking::erase(EdgeId e) {
  if (e < 0 || static_cast<size_t>(e) >= loads_.size() || loads_[e].empty())
    throw std::out_of_range("unknown edge id");
  return cascade(e, kNone, kNone, false);
}

std::vector<ChangeSet> ForestPacking::cascade(EdgeId e, VertexId u, VertexId v, bool inserting) {
  const int k = size();
  if (inserting) {
    if (e < 0) throw std::invalid_argument("negative edge id");
    if (static_cast<size_t>(e) >= loads_.size()) loads_.resize(e + 1);
    loads_[e].assign(k, 0);
  }
  std::vector<ChangeSet> out(k);
  // Edges other than e whose load before forest i differs from the old one.
  std::vector<EdgeId> changed;
  for (int i = 0; i < k; ++i) {
    DynamicMsf& f = forests_[i];
    std::map<EdgeId, int> net;
    auto absorb = [&](const ChangeSet& cs) {
      for (EdgeId x : cs.entered) ++net[x];
      for (EdgeId x : cs.left) --net[x];
    };
    if (inserting) {
      absorb(f.insert(e, u, v, i == 0 ? 0 : loads_[e][i - 1]));
    } else {
      absorb(f.erase(e));
    }
    for (EdgeId g : changed) absorb(f.reweight(g, loads_[g][i - 1]));
    ChangeSet& cs = out[i];
    for (auto [x, d] : net) {
      if (d > 0) cs.entered.push_back(x);
      if (d < 0) cs.left.push_back(x);
    }
    // Recompute load after forest i for every edge whose value may move.
    std::vector<EdgeId> touched = changed;
    for (auto [x, d] : net)
      if (d != 0 && x != e) touched.push_back(x);
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    std::vector<EdgeId> next;
    for (EdgeId g : touched) {
      const int32_t prev = i == 0 ? 0 : loads_[g][i - 1];
      const int32_t now = prev + (f.in_forest(g) ? 1 : 0);
      if (now != loads_[g][i]) {
        loads_[g][i] = now;
        next.push_back(g);
      }
    }
    if (inserting) {
      const int32_t prev = i == 0 ? 0 : loads_[e][i - 1];
      loads_[e][i] = prev + (f.in_forest(e) ? 1 : 0);
    }
    changed = std::move(next);
  }
  if (!inserting) loads_[e].clear();
  return out;
}

}  // namespace mincut
