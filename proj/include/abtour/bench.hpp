// Copyright 2026 The abtour Authors
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

#ifndef ABTOUR_BENCH_HPP_
#define ABTOUR_BENCH_HPP_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <random>
#include <vector>

#include "abtour/core.hpp"

namespace abtour::bench {

// n scores drawn uniformly from [0, d_max], sorted.
inline ScoreSequence random_scores(std::size_t n, Score d_max,
                                   std::mt19937_64& rng) {
  std::uniform_int_distribution<Score> dist(0, d_max);
  std::vector<Score> scores(n);
  for (Score& s : scores) s = dist(rng);
  std::sort(scores.begin(), scores.end());
  return ScoreSequence(std::move(scores));
}

// Median wall time of `reps` calls, in seconds.
template <typename Fn>
double median_seconds(int reps, Fn&& fn) {
  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(reps));
  for (int r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    samples.push_back(std::chrono::duration<double>(stop - start).count());
  }
  std::nth_element(samples.begin(), samples.begin() + reps / 2, samples.end());
  return samples[static_cast<std::size_t>(reps / 2)];
}

// Keeps the optimizer from discarding a benchmarked result.
template <typename T>
inline void keep(const T& value) {
  asm volatile("" : : "g"(&value) : "memory");
}

}  // namespace abtour::bench

#endif  // ABTOUR_BENCH_HPP_
