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
#include <vector>

#include "mincut/types.hpp"

namespace mincut {

// Parameters of one cut-range instance.
struct Params {
  int64_t lambda_min = 1;
  int64_t lambda_max = 1;
  Rational delta{1, 25};
  double phi = 0.125;
  double alpha = 1.0;
  double H = 1.0;
  double rho = 1.0;
  int beta = 8;
  double epsilon = 1.0 / 24.0;
  int64_t nu = 32;
  int h = 1;
  double c = 0.25;

  // Fills delta, epsilon and nu from the range and phi:
  // delta = 1 / max(25, 2 lambda_max + 1), epsilon = 1/(3 beta),
  // nu = floor(4 lambda_max / phi).
  static Params for_range(int64_t lambda_min, int64_t lambda_max, double phi,
                          double rho = 1.0);

  // floor(lambda_max / phi): base-case volume and the volume bound of the
  // cuts tracked by the unchecked-vertex invariant.
  int64_t small_volume() const;

  // Throws std::invalid_argument when a range invariant fails.
  void validate() const;
};

struct Range {
  int index = 0;
  int64_t lambda_min = 1;
  int64_t lambda_max = 1;
};

// Integer ranges [ceil(1.2^i), floor(1.2^{i+1})] that are nonempty, for all
// i with ceil(1.2^i) <= cap.
std::vector<Range> ladder_ranges(int64_t cap);

// Nonempty ranges with 1.2^i <= lambda_max / 8, in increasing i.
std::vector<Range> sub_ranges(int64_t lambda_max);

}  // namespace mincut
