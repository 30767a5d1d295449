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


// Stream replay with oracle audits, shared by the command-line tool and the
// acceptance harness.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mincut/driver.hpp"
#include "mincut/streams.hpp"
#include "mincut/weighted.hpp"

namespace mincut {

struct ReplayConfig {
  enum class Audit : uint8_t { kFull, kSampled, kOff };
  DriverConfig driver;
  Audit audit = Audit::kSampled;
  int audit_every = 10;  // sampled mode: every k-th step and the last one
  // Record wall-clock time per step. Off for byte-identical reports.
  bool timing = true;
  WeightedConfig weighted;
};

struct StepRecord {
  int64_t step = 0;  // 0 is the initial build
  std::string op;
  std::string kind;  // "value", "disconnected", "above", "none"
  double value = 0;
  std::optional<double> oracle;
  std::optional<bool> agree;
  int64_t witness_size = 0;
  int range = kNone;
  std::vector<int64_t> recourse;  // last-batch recourse per depth, answering chain
  int64_t rebuilds = 0;
  int64_t partition_cuts = 0;
  int64_t mirror_ops = 0;
  double micros = 0;
};

struct RunReport {
  static constexpr int kSchemaVersion = 1;
  bool weighted = false;
  int n = 0;
  int64_t initial_edges = 0;
  std::vector<StepRecord> records;
  int64_t updates = 0;
  int64_t audited = 0;
  int64_t disagreements = 0;
  double seconds = 0;
  // FNV-1a over every step's kind, value and witness.
  uint64_t digest = 0;
};

RunReport replay(const EdgeList& g, const std::vector<UpdateBatch>& stream,
                 const ReplayConfig& config);
RunReport replay_weighted(int n, const std::vector<WeightedEdge>& edges,
                          const std::vector<UpdateBatch>& stream, const ReplayConfig& config);

nlohmann::json to_json(const RunReport& report);
std::string describe(const UpdateBatch& batch);

// Folds bytes into a 64-bit FNV-1a hash.
uint64_t fnv1a(uint64_t hash, const void* data, size_t size);

}  // namespace mincut
