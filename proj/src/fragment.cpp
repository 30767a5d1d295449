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


#include "mincut/fragment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mincut/oracle.hpp"

namespace mincut {

namespace {

// Scratch state for one Trim run: membership marks over all vertices.
class Trimmer {
 public:
  Trimmer(const DynMultiGraph& g, const FragmentParams& params, TrimStats* stats)
      : g_(g), params_(params), stats_(stats), piece_(g.num_vertices(), 0),
        inside_(g.num_vertices(), 0) {}

  void run(const VertexSet& c, std::vector<VertexSet> family, int depth,
           std::vector<VertexSet>* out) {
    stats_->max_depth = std::max(stats_->max_depth, depth);
    mark(piece_, c, 1);
    const int64_t boundary_c = boundary(c, piece_);

    // Pruning against the current piece.
    std::vector<VertexSet> kept;
    for (auto& d : family) {
      if (sparse(d, boundary_c))
        kept.push_back(std::move(d));
      else
        ++stats_->pruned;
    }

    const VertexSet* chosen = nullptr;
    bool low_cut = false;
    for (const auto& d : kept) {
      if (10 * internal_cut(d) <= 4 * params_.lambda_max) {
        chosen = &d;
        low_cut = true;
        break;
      }
    }
    if (!chosen) {
      size_t best = 0;
      for (const auto& d : kept) {
        const size_t balance = std::min(d.size(), c.size() - d.size());
        if (!chosen || balance < best) {
          chosen = &d;
          best = balance;
        }
      }
    }
    if (!chosen) {
      mark(piece_, c, 0);
      out->push_back(c);
      return;
    }

    const VertexSet d = *chosen;
    VertexSet rest;
    mark(inside_, d, 1);
    for (VertexId x : c)
      if (!inside_[x]) rest.push_back(x);
    mark(inside_, d, 0);
    mark(piece_, c, 0);
    monitor(d, rest, boundary_c, low_cut);
    (low_cut ? stats_->low_cut_splits : stats_->unbalanced_splits) += 1;

    auto restrict_to = [&](const VertexSet& side) {
      mark(inside_, side, 1);
      std::vector<VertexSet> sub;
      for (const auto& t : kept) {
        VertexSet x;
        for (VertexId v : t)
          if (inside_[v]) x.push_back(v);
        if (!x.empty() && x.size() < side.size()) sub.push_back(std::move(x));
      }
      mark(inside_, side, 0);
      std::sort(sub.begin(), sub.end());
      sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
      return sub;
    };
    auto rest_family = restrict_to(rest);
    auto d_family = restrict_to(d);
    kept.clear();
    run(rest, std::move(rest_family), depth + 1, out);
    run(d, std::move(d_family), depth + 1, out);
  }

 private:
  static void mark(std::vector<char>& flags, const VertexSet& s, char value) {
    for (VertexId x : s) flags[x] = value;
  }

  // Edges from s to vertices with flags == 0.
  int64_t boundary(const VertexSet& s, const std::vector<char>& flags) const {
    int64_t w = 0;
    for (VertexId x : s)
      for (EdgeId e : g_.incident(x)) w += flags[g_.other(e, x)] == 0;
    return w;
  }

  int64_t internal_cut(const VertexSet& d) {
    mark(inside_, d, 1);
    int64_t w = 0;
    for (VertexId x : d)
      for (EdgeId e : g_.incident(x)) {
        const VertexId y = g_.other(e, x);
        w += piece_[y] && !inside_[y];
      }
    mark(inside_, d, 0);
    return w;
  }

  // Boundary sparsity of d in the marked piece with boundary boundary_c.
  bool sparse(const VertexSet& d, int64_t boundary_c) {
    mark(inside_, d, 1);
    int64_t inner = 0, out_d = 0;
    for (VertexId x : d)
      for (EdgeId e : g_.incident(x)) {
        const VertexId y = g_.other(e, x);
        if (!piece_[y])
          ++out_d;
        else if (!inside_[y])
          ++inner;
      }
    mark(inside_, d, 0);
    const int64_t out_rest = boundary_c - out_d;
    const Rational& delta = params_.delta;
    return delta.den * inner < (delta.den - delta.num) * std::min(out_d, out_rest);
  }

  int64_t set_boundary(const VertexSet& s) {
    mark(inside_, s, 1);
    const int64_t w = boundary(s, inside_);
    mark(inside_, s, 0);
    return w;
  }

  void monitor(const VertexSet& d, const VertexSet& rest, int64_t boundary_c, bool low_cut) {
    const int64_t bd = set_boundary(d), br = set_boundary(rest);
    const int64_t lmin = params_.lambda_min;
    bool ok;
    if (low_cut) {
      ok = 100 * bd <= 100 * boundary_c - 4 * lmin && 100 * br <= 100 * boundary_c - 4 * lmin;
    } else {
      const int64_t den = params_.delta.den, num = params_.delta.num;
      ok = 10 * den * bd <= 10 * den * boundary_c - 4 * num * lmin &&
           10 * den * br <= 10 * den * boundary_c - 4 * num * lmin;
    }
    if (!ok) ++stats_->boundary_margin_misses;
  }

  const DynMultiGraph& g_;
  const FragmentParams& params_;
  TrimStats* stats_;
  std::vector<char> piece_;
  std::vector<char> inside_;
};

std::vector<VertexSet> restrict_family(std::vector<VertexSet> family, const VertexSet& c,
                                       int n) {
  std::vector<char> in(n, 0);
  for (VertexId x : c) in[x] = 1;
  std::vector<VertexSet> out;
  for (auto& t : family) {
    VertexSet x;
    for (VertexId v : t)
      if (in[v]) x.push_back(v);
    std::sort(x.begin(), x.end());
    if (!x.empty() && x.size() < c.size()) out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void audit_preconditions(const DynMultiGraph& g, const VertexSet& c,
                         const FragmentParams& params) {
  std::vector<int> local(g.num_vertices(), -1);
  for (size_t i = 0; i < c.size(); ++i) local[c[i]] = static_cast<int>(i);
  EdgeList inner(static_cast<int>(c.size()));
  int64_t boundary = 0;
  for (VertexId x : c)
    for (EdgeId e : g.incident(x)) {
      const VertexId y = g.other(e, x);
      if (local[y] < 0)
        ++boundary;
      else if (x < y)
        inner.add(local[x], local[y]);
    }
  if (boundary > 6 * params.lambda_max)
    throw std::invalid_argument("fragment: boundary " + std::to_string(boundary) +
                                " exceeds 6 lambda_max");
  if (c.size() < 2) return;
  const int64_t need = (params.lambda_max + params.beta - 1) / params.beta;
  const int64_t cut = global_min_cut(inner).value;
  if (cut < need)
    throw std::invalid_argument("fragment: minimum cut " + std::to_string(cut) +
                                " of the cluster is below lambda_max / beta");
}

}  // namespace

std::vector<VertexSet> trim(const DynMultiGraph& g, const VertexSet& c,
                            std::vector<VertexSet> candidates, const FragmentParams& params,
                            TrimStats* stats) {
  if (c.empty()) throw std::invalid_argument("trim on an empty piece");
  VertexSet sorted = c;
  std::sort(sorted.begin(), sorted.end());
  TrimStats local;
  Trimmer trimmer(g, params, stats ? stats : &local);
  std::vector<VertexSet> out;
  trimmer.run(sorted, restrict_family(std::move(candidates), sorted, g.num_vertices()), 0, &out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> boundary_vertices(const DynMultiGraph& g, const VertexSet& c) {
  std::vector<char> in(g.num_vertices(), 0);
  for (VertexId x : c) in[x] = 1;
  std::vector<VertexId> out;
  for (VertexId x : c)
    for (EdgeId e : g.incident(x))
      if (!in[g.other(e, x)]) {
        out.push_back(x);
        break;
      }
  std::sort(out.begin(), out.end());
  return out;
}

FragmentResult fragment(const DynMultiGraph& g, const VertexSet& c, const LocalKCut& lkc,
                        const FragmentParams& params) {
  VertexSet sorted = c;
  std::sort(sorted.begin(), sorted.end());
  if (params.audit) audit_preconditions(g, sorted, params);
  std::vector<VertexSet> family;
  for (VertexId v : boundary_vertices(g, sorted))
    for (auto& s : lkc.query(v)) family.push_back(std::move(s));
  FragmentResult result;
  result.candidates = restrict_family(std::move(family), sorted, g.num_vertices());
  result.parts = trim(g, sorted, result.candidates, params, &result.stats);
  const Rational& d = params.delta;
  const double inv_delta = static_cast<double>(d.den) / static_cast<double>(std::max<int64_t>(d.num, 1));
  const double log_size = std::log2(static_cast<double>(sorted.size()) + 1.0);
  result.count_bound = params.count_constant * inv_delta * inv_delta * log_size * log_size;
  result.within_count_bound = static_cast<double>(result.parts.size()) <= result.count_bound;
  return result;
}

}  // namespace mincut
