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


#include <array>
#include <cmath>

#include <gtest/gtest.h>

#include "mincut/params.hpp"

namespace mincut {
namespace {

TEST(LadderRanges, FirstRangesAreExact) {
  // Frozen from exact rational evaluation of ceil(1.2^i), floor(1.2^(i+1)).
  const std::vector<std::array<int64_t, 3>> expected = {
      {0, 1, 1},   {3, 2, 2},   {6, 3, 3},   {7, 4, 4},   {8, 5, 5},   {9, 6, 6},
      {10, 7, 7},  {11, 8, 8},  {12, 9, 10}, {13, 11, 12}, {14, 13, 15}, {15, 16, 18},
      {16, 19, 22}, {17, 23, 26}, {18, 27, 31}, {19, 32, 38}};
  const auto ranges = ladder_ranges(32);
  ASSERT_EQ(ranges.size(), expected.size());
  for (size_t k = 0; k < ranges.size(); ++k) {
    EXPECT_EQ(ranges[k].index, expected[k][0]);
    EXPECT_EQ(ranges[k].lambda_min, expected[k][1]);
    EXPECT_EQ(ranges[k].lambda_max, expected[k][2]);
  }
}

TEST(LadderRanges, CoverEveryPositiveValue) {
  const auto ranges = ladder_ranges(500);
  int64_t next = 1;
  for (const auto& r : ranges) {
    EXPECT_EQ(r.lambda_min, next);
    EXPECT_LE(5 * r.lambda_max, 6 * r.lambda_min);
    next = r.lambda_max + 1;
  }
  EXPECT_GT(next, 500);
}

TEST(SubRanges, StopAtOneEighth) {
  EXPECT_TRUE(sub_ranges(7).empty());
  ASSERT_EQ(sub_ranges(12).size(), 1u);
  EXPECT_EQ(sub_ranges(12)[0].lambda_max, 1);
  const auto r16 = sub_ranges(16);
  ASSERT_EQ(r16.size(), 2u);
  EXPECT_EQ(r16[1].lambda_min, 2);
  for (const auto& r : sub_ranges(200)) EXPECT_LE(8.0 * std::pow(1.2, r.index), 200.0);
  EXPECT_EQ(sub_ranges(200).back().index, 17);
}

TEST(Params, ForRangeSatisfiesInvariants) {
  for (const auto& r : ladder_ranges(40)) {
    Params p = Params::for_range(r.lambda_min, r.lambda_max, 0.125);
    EXPECT_NO_THROW(p.validate());
    EXPECT_EQ(p.nu, 32 * r.lambda_max);
    EXPECT_EQ(p.small_volume(), 8 * r.lambda_max);
  }
}

TEST(Params, RejectsWideRange) {
  Params p = Params::for_range(5, 7, 0.125);
  EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(Params, RejectsLargeDelta) {
  Params p = Params::for_range(20, 24, 0.125);
  p.delta = Rational{1, 25};
  EXPECT_THROW(p.validate(), std::invalid_argument);
}

}  // namespace
}  // namespace mincut
