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

// Weighted minimum cut by sampling into unweighted multigraphs.
//
// Estimate i guesses the cut near lambda_i = L * 1.1^i. Each weight is
// rounded down to a multiple of 1/x_i, scaled to an integer count w_hat,
// and replaced by Y parallel edges where Y is Binomial(w_hat, p_i) cut off
// at cap + 1. Estimates are evaluated from i = 0 upward; the first whose
// sampled minimum cut lies in [lambda_min, lambda_max] answers with that
// cut scaled by 1 / (p_i x_i).
//
// This module is the only consumer of randomness. Every estimate owns a
// generator seeded from (seed, i), so runs are reproducible.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <vector>

#include "mincut/driver.hpp"
#include "mincut/msf.hpp"
#include "mincut/oracle.hpp"
#include "mincut/types.hpp"

namespace mincut {

// ceil((1 - eps)^2 * 54 ln n / eps^2) and floor(1.1 (1 + eps) * 54 ln n / eps^2).
int64_t sampled_lambda_min(int n, double epsilon);
int64_t sampled_lambda_max(int n, double epsilon);

struct SampleSpec {
  int index = 0;
  int n = 2;
  double epsilon = 0.5;
  long double lambda_i = 1;  // L * 1.1^index
  int64_t x = 1;             // ceil(n^2 / (eps lambda_i))
  long double p = 1;         // 54 ln n / (eps^2 lambda_i x), at most 1
  int64_t cap = 0;           // sampled_lambda_max; Y never exceeds cap + 1
  uint64_t seed = 0;

  static SampleSpec make(int n, double epsilon, double wmin, int index, uint64_t seed);

  // w_hat = floor(w x), or 0 for weights at most eps lambda_i / n^2.
  int64_t rounded(double w) const;
  // 1 / (p x): converts a sampled cut back to weight units.
  long double scale() const { return 1.0L / (p * static_cast<long double>(x)); }
};

// P(Y = k) for k = 0..cap and the lumped tail P(Y = cap + 1) as the last
// entry, where Y = min(Binomial(trials, p), cap + 1).
std::vector<long double> truncated_pmf(int64_t trials, long double p, int64_t cap);

// Smallest j with P(Y <= j) > rand under the distribution above. `work`
// accumulates the number of pmf terms evaluated.
int64_t inverse_cdf(int64_t trials, long double p, int64_t cap, long double rand,
                    int64_t* work = nullptr);

// Y for an edge of weight w. Throws on a negative weight.
int64_t sample_edge(double w, const SampleSpec& spec, long double rand, int64_t* work = nullptr);

// Uniform draw in [0, 1) with 64 random bits; identical on every platform.
long double unit_draw(std::mt19937_64& rng);

struct WeightedConfig {
  double epsilon = 0.5;
  double min_epsilon = 0.05;
  double wmin = 1.0;  // L
  double wmax = 1.0;  // U
  uint64_t seed = 1;
  // kStatic answers each estimate with Stoer-Wagner on the multiplicity
  // matrix. kCore runs the dynamic unweighted algorithm on the ranges
  // inside [lambda_min, lambda_max].
  enum class Backend : uint8_t { kStatic, kCore };
  Backend backend = Backend::kStatic;
  // The sub-range ladders fan out at these cut values; two levels keep
  // the core backend's memory bounded.
  DriverConfig core = [] {
    DriverConfig c;
    c.max_depth = 2;
    return c;
  }();
};

struct WeightedAnswer {
  enum class Kind : uint8_t { kValue, kDisconnected, kNoIndex };
  Kind kind = Kind::kNoIndex;
  double value = 0;
  VertexSet witness;
  int index = kNone;           // estimate that answered
  int64_t sampled_value = 0;   // cut value in the sampled graph
};

// Minimum cut of one sampled multigraph.
class Estimator {
 public:
  enum class Status : uint8_t { kValue, kDisconnected, kAbove };
  struct Estimate {
    Status status = Status::kAbove;
    int64_t value = 0;
    VertexSet witness;
  };

  virtual ~Estimator() = default;
  virtual void build(const std::vector<std::vector<int64_t>>& multiplicity) = 0;
  virtual void change(VertexId u, VertexId v, int64_t delta) = 0;
  virtual Estimate estimate() = 0;
};

std::unique_ptr<Estimator> make_estimator(int n, const WeightedConfig& config);

struct WeightedStats {
  int64_t samples = 0;
  int64_t sample_work = 0;  // pmf terms evaluated over all samples
  int64_t max_sample_work = 0;
  int64_t instances = 0;
};

class WeightedMinCut {
 public:
  WeightedMinCut(int num_vertices, WeightedConfig config);

  void build(const std::vector<WeightedEdge>& edges);
  EdgeId insert(VertexId u, VertexId v, double w);
  void erase(EdgeId e);

  const WeightedAnswer& query() const { return answer_; }
  int num_indices() const { return static_cast<int>(slots_.size()); }
  const SampleSpec& spec(int i) const { return slots_[i].spec; }
  bool instantiated(int i) const { return slots_[i].estimator != nullptr; }
  int pending(int i) const { return static_cast<int>(slots_[i].log.size()); }
  // Current multiplicity of a weighted edge in estimate i's sample.
  int64_t multiplicity(int i, EdgeId e) const;
  int64_t lambda_min() const { return lambda_min_; }
  int64_t lambda_max() const { return lambda_max_; }
  const WeightedStats& stats() const { return stats_; }
  std::vector<WeightedEdge> edges() const;

 private:
  struct Op {
    bool insert = true;
    EdgeId id = kNone;
    WeightedEdge edge;
  };
  struct Slot {
    SampleSpec spec;
    std::mt19937_64 rng;
    std::unique_ptr<Estimator> estimator;
    std::map<EdgeId, int64_t> copies;
    std::vector<Op> log;
  };

  void check_weight(double w) const;
  int64_t draw(Slot& slot, double w);
  void instantiate(Slot& slot);
  void catch_up(Slot& slot);
  void push(Op op);
  void refresh();

  int n_;
  WeightedConfig config_;
  int64_t lambda_min_;
  int64_t lambda_max_;
  std::map<EdgeId, WeightedEdge> edges_;
  DynamicMsf connectivity_;
  std::vector<Slot> slots_;
  EdgeId next_id_ = 0;
  WeightedStats stats_;
  WeightedAnswer answer_;
};

// Static convenience: builds and answers once.
WeightedAnswer weighted_ladder(int n, const std::vector<WeightedEdge>& edges,
                               const WeightedConfig& config);

}  // namespace mincut
