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

#include "mincut/streams.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace mincut {

namespace {

// Next line that is neither empty nor a comment.
bool next_line(std::istream& in, std::istringstream& line) {
  std::string text;
  while (std::getline(in, text)) {
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;
    line.clear();
    line.str(text);
    return true;
  }
  return false;
}

void check_vertex(int v, int n) {
  if (v < 0 || v >= n) throw std::runtime_error("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

EdgeList read_graph(std::istream& in) {
  std::istringstream line;
  int n = 0, m = 0;
  if (!next_line(in, line) || !(line >> n >> m) || n < 0 || m < 0)
    throw std::runtime_error("graph header must be \"n m\"");
  EdgeList g(n);
  for (int k = 0; k < m; ++k) {
    int u = 0, v = 0;
    if (!next_line(in, line) || !(line >> u >> v))
      throw std::runtime_error("expected edge line " + std::to_string(k + 1));
    check_vertex(u, n);
    check_vertex(v, n);
    if (u == v) throw std::runtime_error("self-loop on vertex " + std::to_string(u));
    g.add(u, v);
  }
  return g;
}

void write_graph(std::ostream& out, const EdgeList& g) {
  out << g.n << ' ' << g.m() << '\n';
  for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
}

std::vector<WeightedEdge> read_weighted_graph(std::istream& in, int* num_vertices) {
  std::istringstream line;
  int n = 0, m = 0;
  if (!next_line(in, line) || !(line >> n >> m) || n < 0 || m < 0)
    throw std::runtime_error("graph header must be \"n m\"");
  std::vector<WeightedEdge> edges;
  for (int k = 0; k < m; ++k) {
    WeightedEdge e;
    if (!next_line(in, line) || !(line >> e.u >> e.v >> e.w))
      throw std::runtime_error("expected weighted edge line " + std::to_string(k + 1));
    check_vertex(e.u, n);
    check_vertex(e.v, n);
    if (e.w < 0) throw std::runtime_error("negative weight");
    edges.push_back(e);
  }
  *num_vertices = n;
  return edges;
}

std::vector<UpdateBatch> read_stream(std::istream& in) {
  std::vector<UpdateBatch> out;
  std::istringstream line;
  int open = 0;
  while (next_line(in, line)) {
    std::string op;
    line >> op;
    if (op == "B") {
      int k = 0;
      if (!(line >> k) || k < 1) throw std::runtime_error("batch size must be positive");
      if (open > 0) throw std::runtime_error("nested batch");
      out.emplace_back();
      open = k;
      continue;
    }
    Update u;
    if (op == "I")
      u.kind = Update::Kind::kInsert;
    else if (op == "D")
      u.kind = Update::Kind::kDelete;
    else
      throw std::runtime_error("unknown stream operation \"" + op + "\"");
    if (!(line >> u.u >> u.v)) throw std::runtime_error("operation needs two vertices");
    double w = 0;
    if (u.kind == Update::Kind::kInsert && line >> w) u.w = w;
    if (open > 0) {
      out.back().push_back(u);
      --open;
    } else {
      out.push_back({u});
    }
  }
  if (open > 0) throw std::runtime_error("stream ends inside a batch");
  return out;
}

void write_stream(std::ostream& out, const std::vector<UpdateBatch>& stream) {
  for (const UpdateBatch& b : stream) {
    if (b.size() > 1) out << "B " << b.size() << '\n';
    for (const Update& u : b) {
      out << (u.kind == Update::Kind::kInsert ? 'I' : 'D') << ' ' << u.u << ' ' << u.v;
      if (u.kind == Update::Kind::kInsert && u.w != 1.0) out << ' ' << std::setprecision(17) << u.w;
      out << '\n';
    }
  }
}

EdgeList load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph(in);
}

std::vector<UpdateBatch> load_stream_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_stream(in);
}

std::vector<WeightedEdge> load_weighted_graph_file(const std::string& path, int* num_vertices) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_weighted_graph(in, num_vertices);
}

void write_weighted_graph(std::ostream& out, int n, const std::vector<WeightedEdge>& edges) {
  out << n << ' ' << edges.size() << '\n' << std::setprecision(17);
  for (const auto& e : edges) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

EdgeList planted_graph(int n, int64_t lambda, uint64_t seed) {
  if (lambda < 0) throw std::invalid_argument("lambda must be non-negative");
  if (n < 4) throw std::invalid_argument("need at least four vertices");
  std::mt19937_64 rng(seed);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  const int half = n / 2;
  std::vector<int> side(n);
  for (int k = 0; k < n; ++k) side[perm[k]] = k < half ? 0 : 1;
  EdgeList g(n);
  for (int k = 0; k + 1 < n; ++k)
    if (k + 1 != half) g.add(perm[k], perm[k + 1]);
  for (int64_t k = 0; k < lambda; ++k)
    g.add(perm[static_cast<int>(rng() % half)], perm[half + static_cast<int>(rng() % (n - half))]);
  if (lambda == 0) return g;
  // The split between the halves has value lambda. Any cheaper cut divides
  // a half, so an edge inside that half across it is added until none is
  // left.
  for (OracleResult r = stoer_wagner(g); r.value < lambda; r = stoer_wagner(g)) {
    std::vector<char> in(n, 0);
    for (int x : r.witness) in[x] = 1;
    std::vector<int> a[2], b[2];
    for (int x = 0; x < n; ++x) (in[x] ? a : b)[side[x]].push_back(x);
    const int h = !a[0].empty() && !b[0].empty() ? 0 : 1;
    g.add(a[h][rng() % a[h].size()], b[h][rng() % b[h].size()]);
  }
  return g;
}

void apply_updates(EdgeList& g, const UpdateBatch& batch) {
  for (const Update& u : batch) {
    if (u.kind == Update::Kind::kInsert) {
      g.add(u.u, u.v);
      continue;
    }
    auto it = std::find_if(g.edges.begin(), g.edges.end(), [&](const std::pair<int, int>& e) {
      return (e.first == u.u && e.second == u.v) || (e.first == u.v && e.second == u.u);
    });
    if (it == g.edges.end())
      throw std::runtime_error("deletion of missing edge " + std::to_string(u.u) + " " +
                               std::to_string(u.v));
    g.edges.erase(it);
  }
}

std::vector<UpdateBatch> monotone_stream(const EdgeList& g, int steps, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> deg(g.n, 0);
  for (const auto& [a, b] : g.edges) {
    ++deg[a];
    ++deg[b];
  }
  std::vector<UpdateBatch> out;
  for (int step = 0; step < steps; ++step) {
    const int low = *std::min_element(deg.begin(), deg.end());
    std::vector<int> pool;
    for (int x = 0; x < g.n; ++x)
      if (deg[x] == low) pool.push_back(x);
    Update u;
    u.u = pool[rng() % pool.size()];
    do u.v = static_cast<int>(rng() % g.n);
    while (u.v == u.u);
    ++deg[u.u];
    ++deg[u.v];
    out.push_back({u});
  }
  return out;
}

std::vector<UpdateBatch> planted_stream(const EdgeList& g, int steps, uint64_t seed,
                                        int batch_every) {
  std::mt19937_64 rng(seed);
  EdgeList cur = g;
  const int target = std::max(1, g.m());
  auto one = [&]() {
    Update u;
    std::vector<int> deg(cur.n, 0);
    for (const auto& [a, b] : cur.edges) {
      ++deg[a];
      ++deg[b];
    }
    const bool remove = cur.m() > 0 && (cur.m() > target + 10 || rng() % 2 == 0);
    if (remove) {
      const auto& e = cur.edges[rng() % cur.edges.size()];
      u.kind = Update::Kind::kDelete;
      u.u = e.first;
      u.v = e.second;
    } else {
      const int low = *std::min_element(deg.begin(), deg.end());
      std::vector<int> pool;
      for (int x = 0; x < cur.n; ++x)
        if (deg[x] <= low + 1) pool.push_back(x);
      u.kind = Update::Kind::kInsert;
      u.u = pool[rng() % pool.size()];
      do u.v = static_cast<int>(rng() % cur.n);
      while (u.v == u.u);
    }
    apply_updates(cur, {u});
    return u;
  };
  std::vector<UpdateBatch> out;
  for (int step = 1; step <= steps; ++step) {
    UpdateBatch b;
    const int size = batch_every > 0 && step % batch_every == 0 ? 2 + static_cast<int>(rng() % 3) : 1;
    for (int k = 0; k < size; ++k) b.push_back(one());
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace mincut
