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
#include <unordered_map>
#include <vector>

#include "mincut/types.hpp"

namespace mincut {

// (a, b)-covering family over slots [0, N): for all disjoint A, B with
// |A| <= a and |B| <= b some member F has A inside F and B outside F.
//
// Three constructions are available and the smallest is used:
//   * all subsets of size <= a (take F = A);
//   * complements of all subsets of size <= b (take F = U \ B);
//   * a hashed family h_k(x) = ((k x mod p) mod s) with s = (a+b)^2 and
//     p the least prime >= N, composed with a direct table over [s].
//     For every r = |A u B| <= a+b some k in [1, p) separates A u B perfectly,
//     since the average number of colliding pairs is below r^2 / s <= 1.
//
// Slots are handed to edges through a free list. When no slot is free the
// family is rebuilt on twice the number of assigned slots; assignments
// survive the rebuild.
class ColoringFamily {
 public:
  enum class Construction : uint8_t { kAuto, kSubsets, kComplements, kHashed };

  ColoringFamily() = default;
  // `forced` pins a construction; kAuto picks the smallest.
  ColoringFamily(int universe, int a, int b, Construction forced = Construction::kAuto);

  int universe() const { return universe_; }
  int a() const { return a_; }
  int b() const { return b_; }
  int size() const { return static_cast<int>(members_.size()); }
  Construction construction() const { return construction_; }

  bool contains(int member, int slot) const {
    return (members_[member][slot >> 6] >> (slot & 63)) & 1u;
  }
  const std::vector<uint64_t>& member(int j) const { return members_[j]; }

  int assign_slot(EdgeId e);
  void free_slot(EdgeId e);
  int slot_of(EdgeId e) const;
  int assigned() const { return static_cast<int>(slot_of_.size()); }
  int rebuilds() const { return rebuilds_; }

  // Family size the builder would produce, without building.
  static int64_t planned_size(int universe, int a, int b);

 private:
  void build();

  int universe_ = 0;
  int a_ = 0;
  int b_ = 0;
  Construction forced_ = Construction::kAuto;
  Construction construction_ = Construction::kSubsets;
  std::vector<std::vector<uint64_t>> members_;
  std::vector<int> free_;
  std::unordered_map<EdgeId, int> slot_of_;
  int rebuilds_ = 0;
};

}  // namespace mincut
