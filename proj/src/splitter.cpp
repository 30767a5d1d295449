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


#include "mincut/splitter.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace mincut {

namespace {

constexpr int64_t kTooLarge = std::numeric_limits<int64_t>::max() / 8;

int64_t count_small_subsets(int n, int k) {
  // sum_{j <= k} C(n, j), saturating.
  int64_t total = 0, term = 1;
  for (int j = 0; j <= std::min(k, n); ++j) {
    total += term;
    if (total > kTooLarge) return kTooLarge;
    term = term * (n - j) / (j + 1);
    if (term > kTooLarge) term = kTooLarge;
  }
  return total;
}

bool is_prime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int64_t next_prime(int64_t n) {
  int64_t p = std::max<int64_t>(n, 2);
  while (!is_prime(p)) ++p;
  return p;
}

// Calls fn(subset) for every subset of [0, n) of size <= k.
void for_each_small_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    fn(cur);
    if (static_cast<int>(cur.size()) == k) return;
    for (int x = start; x < n; ++x) {
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

int64_t direct_size(int n, int a, int b) {
  return std::min(count_small_subsets(n, a), count_small_subsets(n, b));
}

void hashed_params(int universe, int a, int b, int64_t* p, int64_t* s) {
  *s = static_cast<int64_t>(a + b) * (a + b);
  *p = next_prime(universe);
}

}  // namespace

int64_t ColoringFamily::planned_size(int universe, int a, int b) {
  const int64_t direct = direct_size(universe, a, b);
  int64_t p, s;
  hashed_params(universe, a, b, &p, &s);
  if (s >= universe || s == 0) return direct;
  const int64_t table = direct_size(static_cast<int>(s), a, b);
  const int64_t hashed = table >= kTooLarge / p ? kTooLarge : (p - 1) * table;
  return std::min(direct, hashed);
}

ColoringFamily::ColoringFamily(int universe, int a, int b, Construction forced)
    : universe_(universe), a_(a), b_(b), forced_(forced) {
  if (universe < 0 || a < 0 || b < 0) throw std::invalid_argument("negative splitter parameter");
  if (a > universe || b > universe) throw std::invalid_argument("a and b must not exceed N");
  build();
  for (int s = universe_ - 1; s >= 0; --s) free_.push_back(s);
}

void ColoringFamily::build() {
  const int words = std::max(1, (universe_ + 63) / 64);
  const int a = std::min(a_, universe_);
  const int b = std::min(b_, universe_);
  members_.clear();
  int64_t planned = planned_size(universe_, a, b);
  int64_t hash_p, hash_s;
  hashed_params(universe_, a, b, &hash_p, &hash_s);
  const bool can_hash = hash_s > 0 && hash_s < universe_;
  const bool use_hash = forced_ == Construction::kHashed
                            ? can_hash
                            : forced_ == Construction::kAuto && planned != direct_size(universe_, a, b);
  if (forced_ != Construction::kAuto) planned = direct_size(universe_, a, b);
  if (planned >= kTooLarge || planned > (int64_t{1} << 26))
    throw std::invalid_argument("splitter family too large");

  // Direct table over [n]: subsets of size <= a, or complements of subsets
  // of size <= b, whichever is smaller. Emits word masks of length `w`.
  auto table = [&](int n, int w, bool* subsets,
                   const std::function<void(const std::vector<uint64_t>&)>& emit) {
    *subsets = count_small_subsets(n, a) <= count_small_subsets(n, b);
    if (n == universe_ && forced_ == Construction::kSubsets) *subsets = true;
    if (n == universe_ && forced_ == Construction::kComplements) *subsets = false;
    std::vector<uint64_t> mask(w);
    for_each_small_subset(n, *subsets ? a : b, [&](const std::vector<int>& sub) {
      if (*subsets) {
        std::fill(mask.begin(), mask.end(), 0);
        for (int x : sub) mask[x >> 6] |= uint64_t{1} << (x & 63);
      } else {
        std::fill(mask.begin(), mask.end(), ~uint64_t{0});
        for (int x : sub) mask[x >> 6] &= ~(uint64_t{1} << (x & 63));
        if (n % 64 != 0) mask[(n - 1) >> 6] &= (uint64_t{1} << (n % 64)) - 1;
        for (int k = (n + 63) / 64; k < w; ++k) mask[k] = 0;
      }
      emit(mask);
    });
  };

  if (!use_hash) {
    bool subsets = true;
    table(universe_, words, &subsets,
          [&](const std::vector<uint64_t>& m) { members_.push_back(m); });
    construction_ = subsets ? Construction::kSubsets : Construction::kComplements;
    return;
  }
  construction_ = Construction::kHashed;
  const int64_t p = hash_p, s = hash_s;
  std::vector<std::vector<uint64_t>> small;
  bool subsets = true;
  table(static_cast<int>(s), static_cast<int>((s + 63) / 64), &subsets,
        [&](const std::vector<uint64_t>& m) { small.push_back(m); });
  std::vector<int> h(universe_);
  for (int64_t k = 1; k < p; ++k) {
    for (int x = 0; x < universe_; ++x) h[x] = static_cast<int>((k * x % p) % s);
    for (const auto& t : small) {
      std::vector<uint64_t> m(words, 0);
      for (int x = 0; x < universe_; ++x)
        if ((t[h[x] >> 6] >> (h[x] & 63)) & 1u) m[x >> 6] |= uint64_t{1} << (x & 63);
      members_.push_back(std::move(m));
    }
  }
}

int ColoringFamily::assign_slot(EdgeId e) {
  if (slot_of_.count(e)) throw std::invalid_argument("edge already holds a slot");
  if (free_.empty()) {
    const int old = universe_;
    universe_ = 2 * (assigned() + 1);
    build();
    ++rebuilds_;
    for (int s = universe_ - 1; s >= old; --s) free_.push_back(s);
  }
  const int slot = free_.back();
  free_.pop_back();
  slot_of_[e] = slot;
  return slot;
}

void ColoringFamily::free_slot(EdgeId e) {
  auto it = slot_of_.find(e);
  if (it == slot_of_.end()) throw std::invalid_argument("edge holds no slot");
  free_.push_back(it->second);
  slot_of_.erase(it);
}

int ColoringFamily::slot_of(EdgeId e) const {
  auto it = slot_of_.find(e);
  return it == slot_of_.end() ? kNone : it->second;
}

}  // namespace mincut
