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

#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mincut {

using VertexId = int32_t;
using EdgeId = int32_t;

inline constexpr int32_t kNone = -1;
inline constexpr int64_t kUnbounded = std::numeric_limits<int64_t>::max() / 4;

enum class EdgeLabel : uint8_t { kIntracluster, kIntercluster, kFragmented };

const char* to_string(EdgeLabel label);

// Exact non-negative rational, used for delta so sparsity tests stay in
// integer arithmetic.
struct Rational {
  int64_t num = 0;
  int64_t den = 1;

  double value() const { return static_cast<double>(num) / den; }
};

// Plain undirected multigraph as an edge list. Used by oracles, file I/O
// and as the exchange format between modules.
struct EdgeList {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  EdgeList() = default;
  explicit EdgeList(int vertices) : n(vertices) {}

  void add(int u, int v) { edges.emplace_back(u, v); }
  int m() const { return static_cast<int>(edges.size()); }
};

// Edge update in a stream. Deletions name the endpoints; the first live
// edge with those endpoints is removed. The weight is read only by the
// weighted front end.
struct Update {
  enum class Kind : uint8_t { kInsert, kDelete };
  Kind kind = Kind::kInsert;
  int u = 0;
  int v = 0;
  double w = 1.0;
};

// Sorted vertex set with a strict weak order, used as a canonical key.
using VertexSet = std::vector<VertexId>;

}  // namespace mincut
