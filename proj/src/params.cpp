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

#include "mincut/params.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mincut {

const char* to_string(EdgeLabel label) {
  switch (label) {
    case EdgeLabel::kIntracluster:
      return "intracluster";
    case EdgeLabel::kIntercluster:
      return "intercluster";
    case EdgeLabel::kFragmented:
      return "fragmented";
  }
  return "?";
}

namespace {

using i128 = __int128;

// 6^i and 5^i; exact up to i = 48.
std::pair<i128, i128> power_6_5(int i) {
  if (i > 48) throw std::out_of_range("ladder index too large");
  i128 a = 1, b = 1;
  for (int k = 0; k < i; ++k) {
    a *= 6;
    b *= 5;
  }
  return {a, b};
}

int64_t ceil_pow(int i) {
  auto [a, b] = power_6_5(i);
  return static_cast<int64_t>((a + b - 1) / b);
}

int64_t floor_pow(int i) {
  auto [a, b] = power_6_5(i);
  return static_cast<int64_t>(a / b);
}

}  // namespace

Params Params::for_range(int64_t lambda_min, int64_t lambda_max, double phi,
                         double rho) {
  Params p;
  p.lambda_min = lambda_min;
  p.lambda_max = lambda_max;
  p.phi = phi;
  p.rho = rho;
  p.beta = 8;
  p.epsilon = 1.0 / (3.0 * p.beta);
  p.delta = Rational{1, std::max<int64_t>(25, 2 * lambda_max + 1)};
  p.nu = static_cast<int64_t>(std::floor(4.0 * static_cast<double>(lambda_max) / phi));
  return p;
}

int64_t Params::small_volume() const {
  return static_cast<int64_t>(std::floor(static_cast<double>(lambda_max) / phi));
}

void Params::validate() const {
  if (lambda_min < 1 || lambda_max < lambda_min)
    throw std::invalid_argument("need 1 <= lambda_min <= lambda_max");
  if (5 * lambda_max > 6 * lambda_min)
    throw std::invalid_argument("lambda_max exceeds 1.2 lambda_min");
  if (delta.den <= 0 || delta.num < 0)
    throw std::invalid_argument("delta must be a non-negative rational");
  if (25 * delta.num > delta.den) throw std::invalid_argument("delta exceeds 0.04");
  if (2 * lambda_max * delta.num >= delta.den)
    throw std::invalid_argument("delta must be below 1/(2 lambda_max)");
  if (beta != 8) throw std::invalid_argument("beta must be 8");
  if (std::abs(epsilon - 1.0 / (3.0 * beta)) > 1e-12)
    throw std::invalid_argument("epsilon must be 1/(3 beta)");
  if (!(phi > 0.0 && phi <= 1.0)) throw std::invalid_argument("phi must lie in (0, 1]");
  if (nu < lambda_max) throw std::invalid_argument("nu must be at least lambda_max");
}

std::vector<Range> ladder_ranges(int64_t cap) {
  std::vector<Range> out;
  for (int i = 0; i <= 48; ++i) {
    const int64_t lo = ceil_pow(i);
    if (lo > cap) break;
    const int64_t hi = floor_pow(i + 1);
    if (lo <= hi) out.push_back(Range{i, lo, hi});
  }
  return out;
}

std::vector<Range> sub_ranges(int64_t lambda_max) {
  std::vector<Range> out;
  for (int i = 0; i <= 47; ++i) {
    auto [a, b] = power_6_5(i);
    if (8 * a > static_cast<i128>(lambda_max) * b) break;
    const int64_t lo = ceil_pow(i);
    const int64_t hi = floor_pow(i + 1);
    if (lo <= hi) out.push_back(Range{i, lo, hi});
  }
  return out;
}

}  // namespace mincut
