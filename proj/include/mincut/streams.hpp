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

// Text formats and planted instances for update streams.
//
// Graph files start with "n m" followed by m lines "u v" (or "u v w" for
// weighted graphs). Stream files hold one operation per line: "I u v"
// inserts an edge ("I u v w" with a weight), "D u v" deletes one edge between u and v, and "B k"
// groups the next k operations into one batch. Lines starting with '#' are
// comments.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mincut/oracle.hpp"
#include "mincut/types.hpp"

namespace mincut {

using UpdateBatch = std::vector<Update>;

EdgeList read_graph(std::istream& in);
void write_graph(std::ostream& out, const EdgeList& g);
std::vector<WeightedEdge> read_weighted_graph(std::istream& in, int* num_vertices);
void write_weighted_graph(std::ostream& out, int n, const std::vector<WeightedEdge>& edges);

std::vector<UpdateBatch> read_stream(std::istream& in);
void write_stream(std::ostream& out, const std::vector<UpdateBatch>& stream);

EdgeList load_graph_file(const std::string& path);
std::vector<UpdateBatch> load_stream_file(const std::string& path);
std::vector<WeightedEdge> load_weighted_graph_file(const std::string& path, int* num_vertices);

// Two halves joined by exactly lambda edges, with edges added inside the
// halves until no cut is cheaper, so the minimum cut is lambda. lambda = 0
// leaves the halves disconnected. Needs n >= 4.
EdgeList planted_graph(int n, int64_t lambda, uint64_t seed);

// Random single-edge updates on g. Deletions remove a uniformly chosen
// live edge; insertions favour vertices of low degree so the minimum cut
// drifts up and down across range boundaries. Every `batch_every`-th
// position (when positive) becomes a batch of two to four operations.
std::vector<UpdateBatch> planted_stream(const EdgeList& g, int steps, uint64_t seed,
                                        int batch_every = 0);

// Insertions only, each at a vertex of minimum degree, so the minimum cut
// never decreases.
std::vector<UpdateBatch> monotone_stream(const EdgeList& g, int steps, uint64_t seed);

// Applies a batch to an edge list in place, deleting the first matching
// edge for each deletion. Throws when a deletion has no match.
void apply_updates(EdgeList& g, const UpdateBatch& batch);

}  // namespace mincut
