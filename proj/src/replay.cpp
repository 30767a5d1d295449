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


#include "mincut/replay.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>

#include "mincut/oracle.hpp"

namespace mincut {

namespace {

constexpr uint64_t kFnvOffset = 1469598103934665603ull;

using Clock = std::chrono::steady_clock;

bool audit_step(const ReplayConfig& config, int64_t step, int64_t last) {
  switch (config.audit) {
    case ReplayConfig::Audit::kFull:
      return true;
    case ReplayConfig::Audit::kOff:
      return false;
    case ReplayConfig::Audit::kSampled:
      return step == 0 || step == last || step % std::max(1, config.audit_every) == 0;
  }
  return false;
}

uint64_t fold_record(uint64_t h, const StepRecord& r, const VertexSet& witness) {
  h = fnv1a(h, &r.step, sizeof r.step);
  h = fnv1a(h, r.kind.data(), r.kind.size());
  h = fnv1a(h, &r.value, sizeof r.value);
  for (VertexId v : witness) h = fnv1a(h, &v, sizeof v);
  return h;
}

void fill_counters(const DynamicMinCut& dm, StepRecord* r) {
  const RangeLadder& ladder = dm.ladder();
  for (int i = 0; i < static_cast<int>(ladder.ranges().size()); ++i) {
    const LevelInstance* top = ladder.instance(i);
    if (!top) continue;
    top->visit([&](const LevelInstance& level) {
      r->rebuilds += level.stats().rebuilds;
      r->partition_cuts += level.stats().partition_cuts;
      r->mirror_ops += level.stats().mirror_ops;
    });
  }
  if (r->range == kNone) return;
  for (const LevelInstance* l = ladder.instance(r->range); l; l = l->child())
    r->recourse.push_back(l->stats().last_recourse);
}

void finish(RunReport* report, Clock::time_point start, const ReplayConfig& config) {
  if (config.timing) report->seconds = std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

uint64_t fnv1a(uint64_t hash, const void* data, size_t size) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < size; ++i) {
    hash ^= p[i];
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string describe(const UpdateBatch& batch) {
  std::string out;
  for (const Update& u : batch) {
    if (!out.empty()) out += "; ";
    out += u.kind == Update::Kind::kInsert ? "I " : "D ";
    out += std::to_string(u.u) + " " + std::to_string(u.v);
  }
  return out;
}

RunReport replay(const EdgeList& g, const std::vector<UpdateBatch>& stream,
                 const ReplayConfig& config) {
  const auto start = Clock::now();
  RunReport report;
  report.n = g.n;
  report.initial_edges = g.m();
  report.digest = kFnvOffset;
  DynamicMinCut dm(g.n, config.driver);
  const int64_t last = static_cast<int64_t>(stream.size());
  for (int64_t step = 0; step <= last; ++step) {
    StepRecord r;
    r.step = step;
    const auto t0 = Clock::now();
    if (step == 0) {
      r.op = "build";
      dm.build(g);
    } else {
      r.op = describe(stream[step - 1]);
      dm.apply(stream[step - 1]);
      report.updates += static_cast<int64_t>(stream[step - 1].size());
    }
    if (config.timing) r.micros = std::chrono::duration<double, std::micro>(Clock::now() - t0).count();
    const MinCutAnswer& a = dm.query();
    r.kind = a.kind == MinCutAnswer::Kind::kValue          ? "value"
             : a.kind == MinCutAnswer::Kind::kDisconnected ? "disconnected"
                                                           : "above";
    r.value = static_cast<double>(a.value);
    r.witness_size = static_cast<int64_t>(a.witness.size());
    r.range = a.range;
    fill_counters(dm, &r);
    if (audit_step(config, step, last)) {
      const EdgeList cur = dm.graph();
      const OracleResult truth = global_min_cut(cur);
      bool agree = false;
      switch (a.kind) {
        case MinCutAnswer::Kind::kValue:
          agree = a.value == truth.value && cut_size(cur, a.witness) == a.value &&
                  !a.witness.empty() && static_cast<int>(a.witness.size()) < cur.n;
          break;
        case MinCutAnswer::Kind::kDisconnected:
          agree = truth.value == 0;
          break;
        case MinCutAnswer::Kind::kAboveCap:
          agree = truth.value > config.driver.lambda_cap;
          break;
      }
      r.oracle = static_cast<double>(truth.value);
      r.agree = agree;
      ++report.audited;
      if (!agree) ++report.disagreements;
    }
    report.digest = fold_record(report.digest, r, a.witness);
    report.records.push_back(std::move(r));
  }
  finish(&report, start, config);
  return report;
}

RunReport replay_weighted(int n, const std::vector<WeightedEdge>& edges,
                          const std::vector<UpdateBatch>& stream, const ReplayConfig& config) {
  const auto start = Clock::now();
  RunReport report;
  report.weighted = true;
  report.n = n;
  report.initial_edges = static_cast<int64_t>(edges.size());
  report.digest = kFnvOffset;
  WeightedMinCut wm(n, config.weighted);
  std::map<std::pair<int, int>, std::set<EdgeId>> by_ends;
  auto key = [](int u, int v) { return std::make_pair(std::min(u, v), std::max(u, v)); };
  const double bound = std::pow(1 + config.weighted.epsilon, 4);
  const int64_t last = static_cast<int64_t>(stream.size());
  for (int64_t step = 0; step <= last; ++step) {
    StepRecord r;
    r.step = step;
    const auto t0 = Clock::now();
    if (step == 0) {
      r.op = "build";
      wm.build(edges);
      for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e)
        by_ends[key(edges[e].u, edges[e].v)].insert(e);
    } else {
      const UpdateBatch& batch = stream[step - 1];
      r.op = describe(batch);
      for (const Update& u : batch) {
        if (u.kind == Update::Kind::kInsert) {
          by_ends[key(u.u, u.v)].insert(wm.insert(u.u, u.v, u.w));
        } else {
          auto& ids = by_ends[key(u.u, u.v)];
          if (ids.empty()) throw std::runtime_error("deletion of a missing edge");
          wm.erase(*ids.begin());
          ids.erase(ids.begin());
        }
      }
      report.updates += static_cast<int64_t>(batch.size());
    }
    if (config.timing) r.micros = std::chrono::duration<double, std::micro>(Clock::now() - t0).count();
    const WeightedAnswer& a = wm.query();
    r.kind = a.kind == WeightedAnswer::Kind::kValue          ? "value"
             : a.kind == WeightedAnswer::Kind::kDisconnected ? "disconnected"
                                                             : "none";
    r.value = a.value;
    r.witness_size = static_cast<int64_t>(a.witness.size());
    r.range = a.index;
    if (audit_step(config, step, last)) {
      const double truth = weighted_min_cut(n, wm.edges());
      bool agree = false;
      if (a.kind == WeightedAnswer::Kind::kValue)
        agree = truth > 0 && a.value <= truth * bound && a.value * bound >= truth;
      else if (a.kind == WeightedAnswer::Kind::kDisconnected)
        agree = truth == 0;
      r.oracle = truth;
      r.agree = agree;
      ++report.audited;
      if (!agree) ++report.disagreements;
    }
    report.digest = fold_record(report.digest, r, a.witness);
    report.records.push_back(std::move(r));
  }
  finish(&report, start, config);
  return report;
}

nlohmann::json to_json(const RunReport& report) {
  nlohmann::json records = nlohmann::json::array();
  for (const StepRecord& r : report.records) {
    nlohmann::json j = {{"step", r.step},
                        {"op", r.op},
                        {"kind", r.kind},
                        {"value", r.value},
                        {"witness_size", r.witness_size},
                        {"range", r.range},
                        {"recourse", r.recourse},
                        {"counters",
                         {{"rebuilds", r.rebuilds},
                          {"partition_cuts", r.partition_cuts},
                          {"mirror_ops", r.mirror_ops}}},
                        {"micros", r.micros}};
    if (r.oracle) j["oracle"] = *r.oracle;
    if (r.agree) j["agree"] = *r.agree;
    records.push_back(std::move(j));
  }
  char digest[17];
  std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(report.digest));
  return {{"schema_version", RunReport::kSchemaVersion},
          {"weighted", report.weighted},
          {"n", report.n},
          {"initial_edges", report.initial_edges},
          {"summary",
           {{"steps", report.records.size()},
            {"updates", report.updates},
            {"audited", report.audited},
            {"disagreements", report.disagreements},
            {"seconds", report.seconds},
            {"digest", digest}}},
          {"records", std::move(records)}};
}

}  // namespace mincut
