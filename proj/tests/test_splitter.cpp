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


#include <random>
#include <set>

#include <gtest/gtest.h>

#include "mincut/splitter.hpp"
#include "support/checks.hpp"

namespace mincut {
namespace {

using testing::covers_exhaustively;
using C = ColoringFamily::Construction;

TEST(ColoringFamily, SingleSlotFullSet) {
  ColoringFamily f(1, 1, 0);
  ASSERT_EQ(f.size(), 1);
  EXPECT_TRUE(f.contains(0, 0));
}

TEST(ColoringFamily, DegenerateParameters) {
  ColoringFamily none(5, 0, 3);
  ASSERT_EQ(none.size(), 1);
  for (int x = 0; x < 5; ++x) EXPECT_FALSE(none.contains(0, x));
  ColoringFamily all(5, 3, 0);
  ASSERT_EQ(all.size(), 1);
  for (int x = 0; x < 5; ++x) EXPECT_TRUE(all.contains(0, x));
}

TEST(ColoringFamily, EveryOrderedPairOnFourSlots) {
  ColoringFamily f(4, 1, 1);
  int pairs = 0;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      if (x == y) continue;
      ++pairs;
      bool split = false;
      for (int j = 0; j < f.size(); ++j) split |= f.contains(j, x) && !f.contains(j, y);
      EXPECT_TRUE(split) << x << " " << y;
    }
  EXPECT_EQ(pairs, 12);
}

TEST(ColoringFamily, TenSlotsTwoThree) {
  EXPECT_TRUE(covers_exhaustively(ColoringFamily(10, 2, 3)));
}

TEST(ColoringFamily, ExhaustiveSmallUniverses) {
  for (int n = 0; n <= 12; ++n)
    for (int a = 0; a <= std::min(n, 6); ++a)
      for (int b = 0; b <= std::min(n, 6 - a); ++b)
        EXPECT_TRUE(covers_exhaustively(ColoringFamily(n, a, b))) << n << " " << a << " " << b;
}

TEST(ColoringFamily, EachConstructionCovers) {
  for (int n = 4; n <= 12; ++n)
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; a + b <= 3 && b <= n; ++b)
        for (C c : {C::kSubsets, C::kComplements, C::kHashed}) {
          ColoringFamily f(n, a, b, c);
          EXPECT_TRUE(covers_exhaustively(f)) << n << " " << a << " " << b;
        }
  ColoringFamily hashed(12, 1, 2, C::kHashed);
  EXPECT_EQ(hashed.construction(), C::kHashed);
}

TEST(ColoringFamily, HashedWinsOnLargeUniverses) {
  ColoringFamily f(400, 2, 2);
  EXPECT_EQ(f.construction(), C::kHashed);
  EXPECT_LT(f.size(), (400 * 399) / 2);
  // Spot check random disjoint pairs.
  std::mt19937 rng(1);
  for (int t = 0; t < 300; ++t) {
    std::set<int> pick;
    while (pick.size() < 4) pick.insert(rng() % 400);
    std::vector<int> xs(pick.begin(), pick.end());
    std::shuffle(xs.begin(), xs.end(), rng);
    bool ok = false;
    for (int j = 0; j < f.size() && !ok; ++j)
      ok = f.contains(j, xs[0]) && f.contains(j, xs[1]) && !f.contains(j, xs[2]) &&
           !f.contains(j, xs[3]);
    EXPECT_TRUE(ok);
  }
}

TEST(ColoringFamily, RejectsOversizedParameters) {
  EXPECT_THROW(ColoringFamily(3, 4, 0), std::invalid_argument);
  EXPECT_THROW(ColoringFamily(3, 0, 4), std::invalid_argument);
  EXPECT_NO_THROW(ColoringFamily(3, 3, 3));
}

TEST(ColoringFamily, SlotsLastForSpareHalf) {
  // Built for N = 2m with m = 5 live edges.
  ColoringFamily f(10, 2, 3);
  for (EdgeId e = 0; e < 5; ++e) f.assign_slot(e);
  for (EdgeId e = 5; e < 10; ++e) f.assign_slot(e);
  EXPECT_EQ(f.rebuilds(), 0);
  f.assign_slot(10);
  EXPECT_EQ(f.rebuilds(), 1);
  EXPECT_EQ(f.universe(), 2 * 11);
  EXPECT_TRUE(f.slot_of(3) >= 0 && f.slot_of(3) < 10);
}

TEST(ColoringFamily, FreedSlotIsReused) {
  ColoringFamily f(4, 1, 1);
  const int s = f.assign_slot(7);
  f.free_slot(7);
  EXPECT_EQ(f.assign_slot(8), s);
  EXPECT_THROW(f.free_slot(7), std::invalid_argument);
  EXPECT_THROW(f.assign_slot(8), std::invalid_argument);
}

TEST(ColoringFamily, InterleavingsKeepBijectionAndCovering) {
  std::mt19937 rng(77);
  ColoringFamily f(12, 3, 3);
  std::set<EdgeId> live;
  EdgeId next = 0;
  for (int step = 0; step < 1000; ++step) {
    if (live.size() < 6 && (live.empty() || rng() % 2)) {
      f.assign_slot(next);
      live.insert(next++);
    } else {
      auto it = live.begin();
      std::advance(it, rng() % live.size());
      f.free_slot(*it);
      live.erase(it);
    }
    std::set<int> used;
    for (EdgeId e : live) {
      const int s = f.slot_of(e);
      ASSERT_GE(s, 0);
      ASSERT_LT(s, f.universe());
      EXPECT_TRUE(used.insert(s).second);
    }
  }
  EXPECT_EQ(f.rebuilds(), 0);
  EXPECT_TRUE(covers_exhaustively(f));
}

}  // namespace
}  // namespace mincut
