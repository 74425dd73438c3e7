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

// Realizability test for (a,b,n)-tournament score sequences and the
// extremal parameters e (min largest entry), f (min largest pair total) and
// g (max smallest pair total) over all realizations of a sequence.

#ifndef ABTOUR_ANALYSIS_HPP_
#define ABTOUR_ANALYSIS_HPP_

#include <utility>
#include <vector>

#include "abtour/core.hpp"

namespace abtour {

struct LossTable {
  Score b = 0;
  // loss[0] = 0 and loss[k] = max(loss[k-1], b*B_k - S_k). Values beyond the
  // Score range saturate at its maximum.
  std::vector<Score> loss;
};

LossTable loss_table(const ScoreSequence& d, Score b, const PrefixTables& t);

// True iff `d` is the score sequence of some (a,b,n)-tournament, i.e. for
// every k: a*B_k <= S_k <= b*B_n - L_k - (n-k)*d_k. Linear in n.
bool interval_test(const ScoreSequence& d, const PrefixTables& t,
                   const IntervalParams& params);
bool interval_test(const ScoreSequence& d, const IntervalParams& params);

// ceil(d_n / (n-1)): the least possible largest single entry.
Score bound_e(const ScoreSequence& d);

struct SearchWindow {
  Score lo = 0;
  Score hi = 0;
};

// lo = max(ceil(S_n/B_n), ceil(d_n/(n-1))), hi = 2*ceil(d_n/(n-1)).
// The least feasible upper bound f always lies in [lo, hi].
SearchWindow f_search_interval(const ScoreSequence& d, const PrefixTables& t);

// Smallest b with interval_test(d, (0, b)), by binary search over the
// f_search_interval window. O(n log(d_n / n)).
Score min_f(const ScoreSequence& d);

// Largest a with interval_test(d, (a, f)), computed in closed form as
// min over k >= 2 of floor(S_k / B_k). Throws kInvalidParams if (0, f) is
// itself infeasible.
Score max_g(const ScoreSequence& d, Score f);

ExtremalSummary extremal_summary(const ScoreSequence& d);

// Cross-check routes, not used by extremal_summary.

// f = max over 0 <= j <= k <= n, j < n of
//     ceil((S_k + (n-k)*d_k - S_j) / (B_n - B_j)), floored at 0. O(n^2).
Score min_f_closed_form(const ScoreSequence& d);

// Largest a in [0, f] with interval_test(d, (a, f)), by binary search.
Score max_g_search(const ScoreSequence& d, Score f);

}  // namespace abtour

#endif  // ABTOUR_ANALYSIS_HPP_
