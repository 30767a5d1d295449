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


#include "mincut/weighted.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mincut {

namespace {

long double sample_base(int n, double epsilon) {
  return 54.0L * std::log(static_cast<long double>(n)) /
         (static_cast<long double>(epsilon) * epsilon);
}

class StaticEstimator : public Estimator {
 public:
  explicit StaticEstimator(int n) : w_(n, std::vector<int64_t>(n, 0)) {}

  void build(const std::vector<std::vector<int64_t>>& multiplicity) override { w_ = multiplicity; }

  void change(VertexId u, VertexId v, int64_t delta) override {
    w_[u][v] += delta;
    w_[v][u] += delta;
    if (w_[u][v] < 0) throw std::logic_error("negative multiplicity");
  }

  Estimate estimate() override {
    const OracleResult r = stoer_wagner(w_);
    Estimate e;
    e.status = r.value == 0 ? Status::kDisconnected : Status::kValue;
    e.value = r.value;
    e.witness = r.witness;
    return e;
  }

 private:
  std::vector<std::vector<int64_t>> w_;
};

class CoreEstimator : public Estimator {
 public:
  CoreEstimator(int n, const DriverConfig& config) : n_(n), config_(config) {}

  void build(const std::vector<std::vector<int64_t>>& multiplicity) override {
    EdgeList g(n_);
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        for (int64_t k = 0; k < multiplicity[u][v]; ++k) g.add(u, v);
    core_ = std::make_unique<DynamicMinCut>(n_, config_);
    core_->build(g);
  }

  void change(VertexId u, VertexId v, int64_t delta) override {
    if (delta == 0) return;
    const Update::Kind kind = delta > 0 ? Update::Kind::kInsert : Update::Kind::kDelete;
    std::vector<Update> batch(static_cast<size_t>(std::abs(delta)));
    for (Update& up : batch) {
      up.kind = kind;
      up.u = u;
      up.v = v;
    }
    core_->apply(batch);
  }

  Estimate estimate() override {
    const MinCutAnswer& a = core_->query();
    Estimate e;
    switch (a.kind) {
      case MinCutAnswer::Kind::kValue:
        e.status = Status::kValue;
        break;
      case MinCutAnswer::Kind::kDisconnected:
        e.status = Status::kDisconnected;
        break;
      case MinCutAnswer::Kind::kAboveCap:
        e.status = Status::kAbove;
        break;
    }
    e.value = a.value;
    e.witness = a.witness;
    return e;
  }

 private:
  int n_;
  DriverConfig config_;
  std::unique_ptr<DynamicMinCut> core_;
};

}  // namespace

int64_t sampled_lambda_min(int n, double epsilon) {
  const long double one_minus = 1.0L - epsilon;
  return static_cast<int64_t>(std::ceil(one_minus * one_minus * sample_base(n, epsilon)));
}

int64_t sampled_lambda_max(int n, double epsilon) {
  return static_cast<int64_t>(std::floor(1.1L * (1.0L + epsilon) * sample_base(n, epsilon)));
}

SampleSpec SampleSpec::make(int n, double epsilon, double wmin, int index, uint64_t seed) {
  if (n < 2) throw std::invalid_argument("need at least two vertices");
  if (!(epsilon > 0 && epsilon < 1)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (!(wmin > 0)) throw std::invalid_argument("minimum weight must be positive");
  SampleSpec s;
  s.index = index;
  s.n = n;
  s.epsilon = epsilon;
  s.seed = seed;
  s.lambda_i = static_cast<long double>(wmin) * std::pow(1.1L, index);
  const long double n2 = static_cast<long double>(n) * n;
  s.x = static_cast<int64_t>(std::ceil(n2 / (epsilon * s.lambda_i)));
  s.p = std::min(1.0L, sample_base(n, epsilon) / (s.lambda_i * static_cast<long double>(s.x)));
  s.cap = sampled_lambda_max(n, epsilon);
  return s;
}

int64_t SampleSpec::rounded(double w) const {
  const long double n2 = static_cast<long double>(n) * n;
  if (w <= epsilon * lambda_i / n2) return 0;
  return static_cast<int64_t>(std::floor(static_cast<long double>(w) * x));
}

namespace {

// Walks P(X = k) for X ~ Binomial(trials, p) in increasing k, with the log
// ratio recurrence so no factorial is formed.
class BinomialTerms {
 public:
  BinomialTerms(int64_t trials, long double p) : trials_(trials), p_(p) {
    if (trials < 0) throw std::invalid_argument("negative trials");
    if (!(p >= 0 && p <= 1)) throw std::invalid_argument("p must lie in [0, 1]");
    if (p > 0 && p < 1) {
      step_ = std::log(p) - std::log1p(-p);
      log_ = static_cast<long double>(trials) * std::log1p(-p);
    }
  }

  // P(X = k) for the next k, starting at 0.
  long double next() {
    const int64_t k = k_++;
    if (k > trials_) return 0;
    if (p_ == 0) return k == 0 ? 1 : 0;
    if (p_ == 1) return k == trials_ ? 1 : 0;
    if (k > 0)
      log_ += std::log(static_cast<long double>(trials_ - k + 1) / static_cast<long double>(k)) +
              step_;
    return std::exp(log_);
  }

 private:
  int64_t trials_;
  long double p_;
  long double step_ = 0;
  long double log_ = 0;
  int64_t k_ = 0;
};

}  // namespace

std::vector<long double> truncated_pmf(int64_t trials, long double p, int64_t cap) {
  if (cap < 0) throw std::invalid_argument("negative cap");
  BinomialTerms terms(trials, p);
  std::vector<long double> pmf(static_cast<size_t>(cap) + 2, 0.0L);
  long double head = 0;
  for (int64_t k = 0; k <= cap; ++k) {
    pmf[k] = terms.next();
    head += pmf[k];
  }
  pmf[cap + 1] = std::max(0.0L, 1.0L - head);
  return pmf;
}

int64_t inverse_cdf(int64_t trials, long double p, int64_t cap, long double rand,
                    int64_t* work) {
  if (!(rand >= 0 && rand < 1)) throw std::invalid_argument("rand must lie in [0, 1)");
  if (cap < 0) throw std::invalid_argument("negative cap");
  BinomialTerms terms(trials, p);
  long double acc = 0;
  for (int64_t j = 0; j <= cap; ++j) {
    acc += terms.next();
    if (work) ++*work;
    if (acc > rand) return j;
  }
  return cap + 1;
}

int64_t sample_edge(double w, const SampleSpec& spec, long double rand, int64_t* work) {
  if (w < 0) throw std::invalid_argument("negative weight");
  const int64_t trials = spec.rounded(w);
  if (trials == 0) return 0;
  return inverse_cdf(trials, spec.p, spec.cap, rand, work);
}

long double unit_draw(std::mt19937_64& rng) {
  return std::ldexp(static_cast<long double>(rng()), -64);
}

std::unique_ptr<Estimator> make_estimator(int n, const WeightedConfig& config) {
  if (config.backend == WeightedConfig::Backend::kStatic)
    return std::make_unique<StaticEstimator>(n);
  DriverConfig core = config.core;
  core.lambda_floor = sampled_lambda_min(n, config.epsilon);
  core.lambda_cap = sampled_lambda_max(n, config.epsilon);
  // A full packing at these values is out of reach; the unfiltered search
  // returns a superset of the filtered sets.
  core.lkc.forest_filter = false;
  return std::make_unique<CoreEstimator>(n, core);
}

WeightedMinCut::WeightedMinCut(int num_vertices, WeightedConfig config)
    : n_(num_vertices),
      config_(config),
      lambda_min_(0),
      lambda_max_(0),
      connectivity_(num_vertices) {
  if (num_vertices < 2) throw std::invalid_argument("need at least two vertices");
  if (!(config.epsilon >= config.min_epsilon && config.epsilon < 1))
    throw std::invalid_argument("epsilon outside [min_epsilon, 1)");
  if (!(config.wmin > 0 && config.wmin <= config.wmax))
    throw std::invalid_argument("need 0 < wmin <= wmax");
  lambda_min_ = sampled_lambda_min(n_, config.epsilon);
  lambda_max_ = sampled_lambda_max(n_, config.epsilon);
  const long double span = static_cast<long double>(n_) * n_ * config.wmax / config.wmin;
  const int top = static_cast<int>(std::ceil(std::log(span) / std::log(1.1L)));
  slots_.resize(top + 1);
  for (int i = 0; i <= top; ++i) {
    Slot& slot = slots_[i];
    slot.spec = SampleSpec::make(n_, config.epsilon, config.wmin, i, config.seed);
    std::seed_seq seq{static_cast<uint32_t>(config.seed), static_cast<uint32_t>(config.seed >> 32),
                      static_cast<uint32_t>(i)};
    slot.rng.seed(seq);
  }
}

void WeightedMinCut::check_weight(double w) const {
  if (w < 0) throw std::invalid_argument("negative weight");
  if (w < config_.wmin || w > config_.wmax) throw std::invalid_argument("weight outside [wmin, wmax]");
}

int64_t WeightedMinCut::draw(Slot& slot, double w) {
  int64_t work = 0;
  const int64_t y = sample_edge(w, slot.spec, unit_draw(slot.rng), &work);
  ++stats_.samples;
  stats_.sample_work += work;
  stats_.max_sample_work = std::max(stats_.max_sample_work, work);
  return y;
}

void WeightedMinCut::instantiate(Slot& slot) {
  std::vector<std::vector<int64_t>> mult(n_, std::vector<int64_t>(n_, 0));
  slot.copies.clear();
  for (const auto& [id, e] : edges_) {
    const int64_t y = draw(slot, e.w);
    slot.copies[id] = y;
    mult[e.u][e.v] += y;
    mult[e.v][e.u] += y;
  }
  slot.estimator = make_estimator(n_, config_);
  slot.estimator->build(mult);
  slot.log.clear();
  ++stats_.instances;
}

void WeightedMinCut::catch_up(Slot& slot) {
  for (const Op& op : slot.log) {
    if (op.insert) {
      const int64_t y = draw(slot, op.edge.w);
      slot.copies[op.id] = y;
      slot.estimator->change(op.edge.u, op.edge.v, y);
    } else {
      auto it = slot.copies.find(op.id);
      slot.estimator->change(op.edge.u, op.edge.v, -it->second);
      slot.copies.erase(it);
    }
  }
  slot.log.clear();
}

void WeightedMinCut::push(Op op) {
  for (Slot& slot : slots_)
    if (slot.estimator) slot.log.push_back(op);
}

void WeightedMinCut::build(const std::vector<WeightedEdge>& edges) {
  for (const auto& e : edges) {
    check_weight(e.w);
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) throw std::out_of_range("vertex out of range");
  }
  edges_.clear();
  connectivity_ = DynamicMsf(n_);
  for (Slot& slot : slots_) {
    slot.estimator.reset();
    slot.copies.clear();
    slot.log.clear();
  }
  next_id_ = 0;
  for (const auto& e : edges) {
    edges_[next_id_] = e;
    connectivity_.insert(next_id_, e.u, e.v, 0);
    ++next_id_;
  }
  refresh();
}

EdgeId WeightedMinCut::insert(VertexId u, VertexId v, double w) {
  check_weight(w);
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
  const EdgeId id = next_id_++;
  const WeightedEdge e{u, v, w};
  edges_[id] = e;
  connectivity_.insert(id, u, v, 0);
  push({true, id, e});
  refresh();
  return id;
}

void WeightedMinCut::erase(EdgeId id) {
  auto it = edges_.find(id);
  if (it == edges_.end()) throw std::invalid_argument("unknown edge id");
  push({false, id, it->second});
  connectivity_.erase(id);
  edges_.erase(it);
  refresh();
}

int64_t WeightedMinCut::multiplicity(int i, EdgeId e) const {
  const auto& copies = slots_[i].copies;
  auto it = copies.find(e);
  return it == copies.end() ? 0 : it->second;
}

std::vector<WeightedEdge> WeightedMinCut::edges() const {
  std::vector<WeightedEdge> out;
  for (const auto& [id, e] : edges_) out.push_back(e);
  return out;
}

void WeightedMinCut::refresh() {
  answer_ = WeightedAnswer{};
  if (connectivity_.num_components() > 1) {
    answer_.kind = WeightedAnswer::Kind::kDisconnected;
    for (VertexId v = 0; v < n_; ++v)
      if (connectivity_.same_component(0, v)) answer_.witness.push_back(v);
    return;
  }
  for (int i = 0; i < num_indices(); ++i) {
    Slot& slot = slots_[i];
    if (!slot.estimator)
      instantiate(slot);
    else
      catch_up(slot);
    const Estimator::Estimate e = slot.estimator->estimate();
    if (e.status != Estimator::Status::kValue) continue;
    if (e.value < lambda_min_ || e.value > lambda_max_) continue;
    answer_.kind = WeightedAnswer::Kind::kValue;
    answer_.index = i;
    answer_.sampled_value = e.value;
    answer_.value = static_cast<double>(static_cast<long double>(e.value) * slot.spec.scale());
    answer_.witness = e.witness;
    return;
  }
}

WeightedAnswer weighted_ladder(int n, const std::vector<WeightedEdge>& edges,
                               const WeightedConfig& config) {
  WeightedMinCut w(n, config);
  w.build(edges);
  return w.query();
}

}  // namespace mincut
