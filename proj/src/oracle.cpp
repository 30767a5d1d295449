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

#include "mincut/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mincut {

namespace {

std::vector<std::vector<int>> adjacency(const EdgeList& g) {
  std::vector<std::vector<int>> adj(g.n);
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

std::vector<int> components(const EdgeList& g, int* count) {
  std::vector<int> comp(g.n, -1);
  auto adj = adjacency(g);
  int c = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = c;
    stack.assign(1, s);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x]) {
        if (comp[y] == -1) {
          comp[y] = c;
          stack.push_back(y);
        }
      }
    }
    ++c;
  }
  *count = c;
  return comp;
}

template <typename W>
W stoer_wagner_matrix(std::vector<std::vector<W>> w, VertexSet* witness) {
  const int n = static_cast<int>(w.size());
  std::vector<std::vector<int>> members(n);
  for (int i = 0; i < n; ++i) members[i] = {i};
  std::vector<char> merged(n, 0);
  W best = std::numeric_limits<W>::max();
  VertexSet best_side;
  for (int phase = 0; phase < n - 1; ++phase) {
    std::vector<W> key(n, 0);
    std::vector<char> added(n, 0);
    int prev = -1, last = -1;
    for (int step = 0; step < n - phase; ++step) {
      int pick = -1;
      for (int i = 0; i < n; ++i) {
        if (merged[i] || added[i]) continue;
        if (pick == -1 || key[i] > key[pick]) pick = i;
      }
      if (pick < 0) break;
      added[pick] = 1;
      prev = last;
      last = pick;
      for (int i = 0; i < n; ++i)
        if (!merged[i] && !added[i]) key[i] += w[pick][i];
    }
    if (key[last] < best) {
      best = key[last];
      best_side = members[last];
    }
    for (int i = 0; i < n; ++i) {
      w[prev][i] += w[last][i];
      w[i][prev] = w[prev][i];
    }
    members[prev].insert(members[prev].end(), members[last].begin(), members[last].end());
    merged[last] = 1;
  }
  std::sort(best_side.begin(), best_side.end());
  if (witness) *witness = best_side;
  return best;
}

}  // namespace

OracleResult stoer_wagner(const EdgeList& g) {
  if (g.n < 2) throw std::invalid_argument("stoer_wagner needs at least two vertices");
  std::vector<std::vector<int64_t>> w(g.n, std::vector<int64_t>(g.n, 0));
  for (const auto& [u, v] : g.edges) {
    if (u == v) continue;
    ++w[u][v];
    ++w[v][u];
  }
  OracleResult r;
  r.found = true;
  r.value = stoer_wagner_matrix(std::move(w), &r.witness);
  return r;
}

OracleResult stoer_wagner(const std::vector<std::vector<int64_t>>& multiplicity) {
  const int n = static_cast<int>(multiplicity.size());
  if (n < 2) throw std::invalid_argument("stoer_wagner needs at least two vertices");
  std::vector<std::vector<int64_t>> w = multiplicity;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(w[i].size()) != n) throw std::invalid_argument("matrix is not square");
    w[i][i] = 0;
  }
  OracleResult r;
  r.found = true;
  r.value = stoer_wagner_matrix(std::move(w), &r.witness);
  return r;
}

double weighted_min_cut(int n, const std::vector<WeightedEdge>& edges, VertexSet* witness) {
  if (n < 2) throw std::invalid_argument("weighted_min_cut needs at least two vertices");
  std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
  for (const auto& e : edges) {
    if (e.u == e.v) continue;
    w[e.u][e.v] += e.w;
    w[e.v][e.u] += e.w;
  }
  return stoer_wagner_matrix(std::move(w), witness);
}

OracleResult min_proper_cut(const EdgeList& g) {
  int count = 0;
  auto comp = components(g, &count);
  std::vector<VertexSet> groups(count);
  for (int v = 0; v < g.n; ++v) groups[comp[v]].push_back(v);
  OracleResult best;
  for (const auto& group : groups) {
    if (group.size() < 2) continue;
    std::vector<int> local(g.n, -1);
    for (size_t i = 0; i < group.size(); ++i) local[group[i]] = static_cast<int>(i);
    EdgeList sub(static_cast<int>(group.size()));
    for (const auto& [u, v] : g.edges)
      if (local[u] != -1) sub.add(local[u], local[v]);
    OracleResult r = stoer_wagner(sub);
    if (!best.found || r.value < best.value) {
      best.found = true;
      best.value = r.value;
      best.witness.clear();
      for (int x : r.witness) best.witness.push_back(group[x]);
      std::sort(best.witness.begin(), best.witness.end());
    }
  }
  return best;
}

OracleResult global_min_cut(const EdgeList& g) {
  int count = 0;
  auto comp = components(g, &count);
  if (count > 1) {
    OracleResult r;
    r.found = true;
    r.value = 0;
    for (int v = 0; v < g.n; ++v)
      if (comp[v] == 0) r.witness.push_back(v);
    return r;
  }
  return stoer_wagner(g);
}

int64_t cut_size(const EdgeList& g, const VertexSet& s) {
  std::vector<char> in(g.n, 0);
  for (int v : s) in[v] = 1;
  int64_t c = 0;
  for (const auto& [u, v] : g.edges)
    if (in[u] != in[v]) ++c;
  return c;
}

int64_t volume(const EdgeList& g, const VertexSet& s) {
  std::vector<char> in(g.n, 0);
  for (int v : s) in[v] = 1;
  int64_t vol = 0;
  for (const auto& [u, v] : g.edges) vol += in[u] + in[v];
  return vol;
}

bool induces_connected(const EdgeList& g, const VertexSet& s) {
  if (s.empty()) return false;
  std::vector<char> in(g.n, 0);
  for (int v : s) in[v] = 1;
  auto adj = adjacency(g);
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack{s[0]};
  seen[s[0]] = 1;
  size_t reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x]) {
      if (in[y] && !seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == s.size();
}

void for_each_connected_set(const EdgeList& g, const std::vector<char>& allowed, VertexId root,
                            bool root_is_minimum, int64_t max_volume, int64_t max_cut,
                            const std::function<void(const VertexSet&)>& visit) {
  auto adj = adjacency(g);
  std::vector<int> deg(g.n, 0);
  for (int v = 0; v < g.n; ++v) deg[v] = static_cast<int>(adj[v].size());
  auto usable = [&](int y) { return allowed[y] && (!root_is_minimum || y > root); };
  if (!allowed[root]) return;
  // state: 0 undecided, 1 in S, 2 excluded
  std::vector<char> state(g.n, 0);
  VertexSet s;
  int64_t vol = 0;
  int64_t to_excluded = 0;

  std::function<void()> rec = [&]() {
    if (vol > max_volume || to_excluded > max_cut) return;
    int pick = -1;
    for (int x : s)
      for (int y : adj[x])
        if (state[y] == 0 && usable(y) && (pick == -1 || y < pick)) pick = y;
    if (pick == -1) {
      VertexSet sorted = s;
      std::sort(sorted.begin(), sorted.end());
      visit(sorted);
      return;
    }
    int64_t w = 0;
    for (int y : adj[pick]) w += (state[y] == 1);
    state[pick] = 2;
    to_excluded += w;
    rec();
    to_excluded -= w;
    int64_t back = 0;
    for (int y : adj[pick]) back += (state[y] == 2);
    state[pick] = 1;
    s.push_back(pick);
    vol += deg[pick];
    to_excluded += back;
    rec();
    to_excluded -= back;
    vol -= deg[pick];
    s.pop_back();
    state[pick] = 0;
  };
  state[root] = 1;
  s.push_back(root);
  vol = deg[root];
  rec();
}

std::vector<VertexSet> enumerate_cuts(const EdgeList& g, VertexId v, int64_t lambda_max,
                                      int64_t nu, bool connected_only) {
  std::vector<VertexSet> out;
  if (connected_only) {
    std::vector<char> allowed(g.n, 1);
    for_each_connected_set(g, allowed, v, false, nu, lambda_max, [&](const VertexSet& s) {
      if (cut_size(g, s) <= lambda_max && volume(g, s) <= nu) out.push_back(s);
    });
  } else {
    if (g.n > 24) throw std::invalid_argument("subset scan limited to 24 vertices");
    for (uint32_t mask = 0; mask < (1u << g.n); ++mask) {
      if (!(mask >> v & 1u)) continue;
      VertexSet s;
      for (int x = 0; x < g.n; ++x)
        if (mask >> x & 1u) s.push_back(x);
      if (cut_size(g, s) <= lambda_max && volume(g, s) <= nu) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool oracle_is_sparse(const EdgeList& g, const VertexSet& cluster, const VertexSet& s,
                      Rational delta) {
  std::vector<char> in_c(g.n, 0), in_s(g.n, 0);
  for (int v : cluster) in_c[v] = 1;
  for (int v : s) in_s[v] = 1;
  int64_t inside = 0, s_out = 0, rest_out = 0;
  for (const auto& [u, v] : g.edges) {
    for (int k = 0; k < 2; ++k) {
      int a = k ? v : u, b = k ? u : v;
      if (!in_c[a]) continue;
      if (in_s[a] && in_c[b] && !in_s[b]) ++inside;
      if (!in_c[b]) (in_s[a] ? s_out : rest_out) += 1;
    }
  }
  const int64_t m = std::min(s_out, rest_out);
  return delta.den * inside < (delta.den - delta.num) * m;
}

std::vector<VertexSet> enumerate_sparse_cuts(const EdgeList& g, const VertexSet& cluster,
                                             Rational delta, int64_t lambda_max, int64_t nu,
                                             int64_t lambda_min) {
  std::vector<char> allowed(g.n, 0);
  for (int v : cluster) allowed[v] = 1;
  EdgeList inner(g.n);
  for (const auto& [u, v] : g.edges)
    if (allowed[u] && allowed[v]) inner.add(u, v);
  std::vector<int> full_deg(g.n, 0);
  for (const auto& [u, v] : g.edges) {
    ++full_deg[u];
    ++full_deg[v];
  }
  std::vector<VertexSet> out;
  for (int root : cluster) {
    // Volume is taken in G; the recursion runs on G[c] so its own volume
    // is only a lower bound and the exact check happens in the callback.
    for_each_connected_set(inner, allowed, root, true, nu, lambda_max, [&](const VertexSet& s) {
      if (s.size() == cluster.size()) return;
      int64_t vol = 0;
      for (int x : s) vol += full_deg[x];
      if (vol > nu) return;
      const int64_t w = cut_size(inner, s);
      if (w > lambda_max || w < lambda_min) return;
      if (oracle_is_sparse(g, cluster, s, delta)) out.push_back(s);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mincut
