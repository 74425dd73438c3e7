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

// Witness constructors for score sequences.

#ifndef ABTOUR_CONSTRUCT_HPP_
#define ABTOUR_CONSTRUCT_HPP_

#include <span>
#include <vector>

#include "abtour/core.hpp"

namespace abtour {

// m[n-1][0] = d_n and m[i][i+1] = d_i, everything else zero. Accepts unsorted
// input; the largest entry is at most max(d).
PointMatrix naive_construct(std::span<const Score> raw);

// Every player spreads its score over its n-1 opponents as evenly as
// possible, walking the opponents cyclically from i+1. The largest entry is
// at most ceil(d_n/(n-1)) and every pair total at most twice that.
PointMatrix pigeonhole_construct(const ScoreSequence& d);

// Working state of the minimax reconstruction. Players [0, k) are still
// open; player k-1 is the next one whose matches get settled.
struct SlicingState {
  // Provisional scores of the open players, nondecreasing. Its size is k.
  std::vector<Score> provisional;
  PointMatrix matrix;
  // Points the settled player still had to shed when the last call returned
  // (always 0 after a successful call).
  Score missing = 0;
  // Additional points A_1..A_{k-1} left at the end of the last call:
  // A_i = P_i - a*B_i over the provisional prefix sums P_i.
  std::vector<Score> additional;

  std::size_t k() const noexcept { return provisional.size(); }
};

// Initial state: provisional scores = d, and m[i][j] = b for i > j, zero
// elsewhere, so each open player starts by winning every earlier match 'b:0'.
SlicingState initial_slicing_state(const ScoreSequence& d, Score b);

// Settles every match of player k-1 against players [0, k-1) and returns the
// state for k-1 open players. Afterwards row k-1 sums to its provisional
// score, every settled pair total lies in [a, b], and the reduced provisional
// prefix is nondecreasing and still realizable with (a, b).
//
// Player k-1 concedes points to the strongest open players first (slicing
// equal-score blocks level by level), and then gives up the remaining
// surplus by lowering pair totals towards a. A first slicing round capped at
// a per opponent runs when player k-1 cannot otherwise reach the pair
// minimum on its own.
//
// Throws kInfeasiblePrefix when the preconditions do not hold: k >= 3, the
// row/column of player k-1 as left by initial_slicing_state, a nondecreasing
// provisional prefix that passes interval_test with `params`.
SlicingState score_slicing(SlicingState state, const IntervalParams& params);

struct MiniMaxResult {
  ExtremalSummary summary;
  PointMatrix matrix;
};

// Builds a realization of `d` whose largest pair total is f and whose
// smallest pair total is g. O(d_n n^2).
MiniMaxResult mini_max(const ScoreSequence& d);

}  // namespace abtour

#endif  // ABTOUR_CONSTRUCT_HPP_
