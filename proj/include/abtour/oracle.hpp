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

// Ground truth for small instances: exhaustive enumeration of realizations
// and the classical characterizations for a == b.

#ifndef ABTOUR_ORACLE_HPP_
#define ABTOUR_ORACLE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "abtour/core.hpp"

namespace abtour {

inline constexpr std::uint64_t kDefaultOracleBudget = 100'000'000;
inline constexpr std::size_t kMaxOraclePlayers = 6;

// Smallest and largest pair total of one realization.
struct PairTotalRange {
  Score min_total = 0;  // G
  Score max_total = 0;  // F

  friend bool operator==(const PairTotalRange&, const PairTotalRange&) = default;
};

struct OracleResult {
  bool realizable = false;
  std::uint64_t count = 0;
  std::optional<Score> min_F;
  std::optional<Score> max_G;
  std::optional<Score> min_E;
  // First realization in enumeration order.
  std::optional<PointMatrix> witness;
  // Pareto frontier of (G, F) over all realizations found: no other
  // realization has both a larger G and a smaller F. Sorted by G.
  std::vector<PairTotalRange> frontier;
  // Number of (pair, total, split) states visited.
  std::uint64_t states = 0;

  // True iff some enumerated realization has all pair totals in [a, b].
  // Only meaningful for b <= the pair cap the search ran with.
  bool admits(Score a, Score b) const;
};

// Enumerates every realization of `d` whose pair totals lie in
// [a_floor, pair_cap] by depth-first search over pairs (i < j) in
// lexicographic order, totals ascending, then m_ij ascending.
//
// Throws kInvalidParams unless 0 <= a_floor <= pair_cap and
// pair_cap >= ceil(d_n/(n-1)); throws kOracleBudgetExceeded for more than
// kMaxOraclePlayers players or when more than `budget` states are visited.
OracleResult enumerate_extremes(const ScoreSequence& d, Score pair_cap,
                                Score a_floor = 0,
                                std::uint64_t budget = kDefaultOracleBudget);

// S_n == B_n and S_k >= B_k for every k (score sequences of ordinary
// tournaments).
bool landau_test(const ScoreSequence& d);

// S_n == c*B_n and S_k >= c*B_k for every k. Throws kInvalidParams for c < 1.
bool moon_test(const ScoreSequence& d, Score c);

// Calls fn for every nondecreasing sequence of length n over [0, d_max], in
// lexicographic order.
void for_each_nondecreasing(std::size_t n, Score d_max,
                            const std::function<void(const ScoreSequence&)>& fn);

struct SweepReport {
  // sequences_by_length[n] = number of sequences of length n checked.
  std::vector<std::uint64_t> sequences_by_length;
  std::uint64_t sequences = 0;
  std::vector<std::string> mismatches;
};

// Compares the analysis module (and mini_max) against enumerate_extremes and
// the Landau/Moon tests on every nondecreasing sequence with 2 <= n <= n_max
// and entries in [0, d_max]. The pair cap per sequence is
// 2*ceil(d_n/(n-1)). Work is split over `threads` workers (0 = hardware
// concurrency); the report does not depend on the worker count.
SweepReport sweep(std::size_t n_max, Score d_max, unsigned threads = 0,
                  std::uint64_t budget = kDefaultOracleBudget);

}  // namespace abtour

#endif  // ABTOUR_ORACLE_HPP_
