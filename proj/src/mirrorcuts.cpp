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

#include "mincut/mirrorcuts.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mincut {

MirrorCutStore::MirrorCutStore(int num_vertices, int num_real, int64_t lambda_max, int64_t nu,
                               int beta, LocalKCutConfig config)
    : num_real_(num_real),
      lambda_max_(lambda_max),
      nu_(nu),
      lkc_(num_vertices, lambda_max, nu, beta, config),
      cut_of_(num_real, kNone),
      containing_(num_vertices) {
  if (num_real < 0 || num_real > num_vertices)
    throw std::invalid_argument("num_real must lie in [0, num_vertices]");
}

std::pair<int64_t, int64_t> MirrorCutStore::measure(const VertexSet& s) const {
  const DynMultiGraph& g = lkc_.graph();
  std::vector<char> in(g.num_vertices(), 0);
  for (VertexId x : s) in[x] = 1;
  int64_t boundary = 0, vol = 0;
  for (VertexId x : s) {
    vol += g.degree(x);
    for (EdgeId e : g.incident(x)) boundary += !in[g.other(e, x)];
  }
  return {boundary, vol};
}

bool MirrorCutStore::valid(const VertexSet& s, int64_t boundary, int64_t volume) const {
  if (boundary <= 0 || boundary > lambda_max_ || volume > nu_) return false;
  const DynMultiGraph& g = lkc_.graph();
  std::vector<char> in(g.num_vertices(), 0), seen(g.num_vertices(), 0);
  for (VertexId x : s) in[x] = 1;
  std::vector<VertexId> stack{s[0]};
  seen[s[0]] = 1;
  size_t reached = 1;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(x)) {
      const VertexId y = g.other(e, x);
      if (in[y] && !seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == s.size();
}

int MirrorCutStore::intern(const VertexSet& s, int64_t value) {
  auto it = index_.find(s);
  if (it != index_.end()) return it->second;
  int id;
  if (!free_.empty()) {
    id = free_.back();
    free_.pop_back();
  } else {
    id = static_cast<int>(records_.size());
    records_.emplace_back();
  }
  Record& r = records_[id];
  r.members = s;
  r.owners.clear();
  r.value = value;
  r.alive = true;
  index_[s] = id;
  for (VertexId x : s) containing_[x].insert(id);
  return id;
}

void MirrorCutStore::release(VertexId u) {
  const int id = cut_of_[u];
  if (id == kNone) return;
  Record& r = records_[id];
  heap_.erase({r.value, u});
  r.owners.erase(u);
  cut_of_[u] = kNone;
  if (!r.owners.empty()) return;
  for (VertexId x : r.members) containing_[x].erase(id);
  index_.erase(r.members);
  r.alive = false;
  r.members.clear();
  free_.push_back(id);
}

void MirrorCutStore::assign(VertexId u, int record) {
  if (cut_of_[u] == record) return;
  release(u);
  Record& r = records_[record];
  r.owners.insert(u);
  cut_of_[u] = record;
  heap_.insert({r.value, u});
}

void MirrorCutStore::set_value(int record, int64_t value) {
  Record& r = records_[record];
  for (VertexId u : r.owners) {
    heap_.erase({r.value, u});
    heap_.insert({value, u});
  }
  r.value = value;
}

int64_t MirrorCutStore::value_of(VertexId v) const {
  return cut_of_[v] == kNone ? kUnbounded : records_[cut_of_[v]].value;
}

const VertexSet& MirrorCutStore::cut_of(VertexId v) const {
  if (cut_of_[v] == kNone) throw std::out_of_range("vertex has no mirror cut");
  return records_[cut_of_[v]].members;
}

void MirrorCutStore::process_vertex(VertexId v) {
  ++processed_;
  std::vector<std::pair<int64_t, VertexSet>> found;
  for (VertexSet& s : lkc_.query(v)) {
    const int64_t boundary = measure(s).first;
    if (boundary > 0) found.emplace_back(boundary, std::move(s));
  }
  // Cheapest first, then lexicographic: ties keep the first set offered.
  std::sort(found.begin(), found.end());
  for (const auto& [value, s] : found) {
    int id = kNone;
    for (VertexId u : s) {
      if (u >= num_real_ || value >= value_of(u)) continue;
      if (id == kNone) id = intern(s, value);
      assign(u, id);
    }
  }
}

void MirrorCutStore::build(const std::vector<EdgeOp>& insertions) {
  std::vector<EdgeId> ids;
  std::vector<std::pair<VertexId, VertexId>> ends;
  for (const EdgeOp& op : insertions) {
    if (op.kind != EdgeOp::Kind::kInsert) throw std::invalid_argument("build takes insertions");
    ids.push_back(op.id);
    ends.emplace_back(op.u, op.v);
  }
  lkc_.build(ids, ends);
  for (VertexId v = 0; v < num_real_; ++v) process_vertex(v);
}

void MirrorCutStore::batch_update(const std::vector<EdgeOp>& batch) {
  for (const EdgeOp& op : batch) {
    if (op.kind == EdgeOp::Kind::kDelete)
      lkc_.erase(op.id);
    else
      lkc_.insert(op.id, op.u, op.v);
  }
  // Both endpoints of every update are processed. For deletions this finds
  // cuts that got cheaper; for insertions it finds sets that just became
  // connected or proper, which do not show up as a value increase.
  std::set<VertexId> marked;
  std::set<int> touched;
  for (const EdgeOp& op : batch)
    for (VertexId x : {op.u, op.v}) {
      marked.insert(x);
      touched.insert(containing_[x].begin(), containing_[x].end());
    }
  for (int id : touched) {
    if (!records_[id].alive) continue;
    const auto [boundary, vol] = measure(records_[id].members);
    if (!valid(records_[id].members, boundary, vol)) {
      const std::set<VertexId> owners = records_[id].owners;
      for (VertexId u : owners) {
        release(u);
        marked.insert(u);
      }
      continue;
    }
    if (boundary > records_[id].value) marked.insert(records_[id].owners.begin(), records_[id].owners.end());
    if (boundary != records_[id].value) set_value(id, boundary);
  }
  for (VertexId v : marked) process_vertex(v);
}

MirrorCutStore::Min MirrorCutStore::min() const {
  Min out;
  if (heap_.empty()) return out;
  const auto& [value, owner] = *heap_.begin();
  out.found = true;
  out.value = value;
  out.owner = owner;
  out.members = &records_[cut_of_[owner]].members;
  return out;
}

void MirrorCutStore::audit() const {
  auto fail = [](const std::string& what) { throw std::logic_error("mirror cuts: " + what); };
  size_t owned = 0;
  for (size_t id = 0; id < records_.size(); ++id) {
    const Record& r = records_[id];
    if (!r.alive) continue;
    if (r.owners.empty()) fail("record without owner");
    if (!std::is_sorted(r.members.begin(), r.members.end())) fail("members unsorted");
    auto it = index_.find(r.members);
    if (it == index_.end() || it->second != static_cast<int>(id)) fail("index mismatch");
    const auto [boundary, vol] = measure(r.members);
    if (boundary != r.value) fail("stale value");
    if (!valid(r.members, boundary, vol)) fail("invalid stored cut");
    for (VertexId x : r.members)
      if (!containing_[x].count(static_cast<int>(id))) fail("missing membership pointer");
    for (VertexId u : r.owners) {
      if (cut_of_[u] != static_cast<int>(id)) fail("owner pointer mismatch");
      if (!std::binary_search(r.members.begin(), r.members.end(), u)) fail("owner outside cut");
      if (!heap_.count({r.value, u})) fail("heap entry missing");
    }
    owned += r.owners.size();
  }
  if (owned != heap_.size()) fail("heap size");
  if (index_.size() + free_.size() != records_.size()) fail("record accounting");
  for (size_t x = 0; x < containing_.size(); ++x)
    for (int id : containing_[x])
      if (!records_[id].alive ||
          !std::binary_search(records_[id].members.begin(), records_[id].members.end(),
                              static_cast<VertexId>(x)))
        fail("dangling membership pointer");
}

}  // namespace mincut
