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

// One mirror cut per vertex over the mirror graph G_{P1}.
//
// A mirror cut of v is a proper local cut of smallest value containing v
// inside v's mirror cluster: connected, at most lambda_max boundary edges,
// volume at most nu. It may contain the super-vertex z standing for the
// rest of the graph. Cuts are shared records with an owner list; a record
// dies when its last owner leaves. Owners sit in a heap keyed by value.
//
// Batches are applied to the LocalKCut graph first. Then every record
// containing an endpoint is re-evaluated. Owners whose cut got more
// expensive or stopped being a valid local proper cut are reprocessed, as
// are the endpoints of every updated edge. Processing a vertex issues one
// LocalKCut query and hands each returned cut to every member that it
// strictly improves.

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "mincut/dyngraph.hpp"
#include "mincut/localkcut.hpp"
#include "mincut/types.hpp"

namespace mincut {

class MirrorCutStore {
 public:
  // Vertices below num_real own cuts; the others are super-vertices.
  MirrorCutStore(int num_vertices, int num_real, int64_t lambda_max, int64_t nu, int beta,
                 LocalKCutConfig config = {});

  // Loads the mirror graph and processes every real vertex.
  void build(const std::vector<EdgeOp>& insertions);
  void batch_update(const std::vector<EdgeOp>& batch);
  void process_vertex(VertexId v);

  struct Min {
    bool found = false;
    int64_t value = 0;
    VertexId owner = kNone;
    const VertexSet* members = nullptr;
  };
  Min min() const;

  bool has_cut(VertexId v) const { return cut_of_[v] != kNone; }
  int64_t value_of(VertexId v) const;
  const VertexSet& cut_of(VertexId v) const;
  int live_records() const { return static_cast<int>(index_.size()); }

  // Throws std::logic_error when owner lists, membership pointers, values
  // or the heap disagree.
  void audit() const;

  const LocalKCut& local_kcut() const { return lkc_; }
  int num_real() const { return num_real_; }
  int64_t lambda_max() const { return lambda_max_; }
  int64_t nu() const { return nu_; }
  int64_t processed() const { return processed_; }

 private:
  struct Record {
    VertexSet members;
    std::set<VertexId> owners;
    int64_t value = 0;
    bool alive = false;
  };

  // Boundary and volume of s in the current mirror graph.
  std::pair<int64_t, int64_t> measure(const VertexSet& s) const;
  bool valid(const VertexSet& s, int64_t boundary, int64_t volume) const;
  int intern(const VertexSet& s, int64_t value);
  void assign(VertexId u, int record);
  void release(VertexId u);
  void set_value(int record, int64_t value);

  int num_real_;
  int64_t lambda_max_;
  int64_t nu_;
  LocalKCut lkc_;
  std::vector<Record> records_;
  std::vector<int> free_;
  std::map<VertexSet, int> index_;
  std::vector<int> cut_of_;
  std::vector<std::set<int>> containing_;
  std::set<std::pair<int64_t, VertexId>> heap_;
  int64_t processed_ = 0;
};

}  // namespace mincut
