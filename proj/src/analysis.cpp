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

#include "abtour/analysis.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "abtour/search.hpp"

namespace abtour {
namespace {

__extension__ using Wide = __int128;

Score saturate(Wide v) {
  constexpr Wide kMax = std::numeric_limits<Score>::max();
  return v > kMax ? std::numeric_limits<Score>::max() : static_cast<Score>(v);
}

}  // namespace

LossTable loss_table(const ScoreSequence& d, Score b, const PrefixTables& t) {
  const std::size_t n = d.size();
  LossTable table{b, std::vector<Score>(n + 1, 0)};
  Wide loss = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    loss = std::max(loss, Wide{b} * t.binomial[k] - t.sums[k]);
    table.loss[k] = saturate(loss);
  }
  return table;
}

bool interval_test(const ScoreSequence& d, const PrefixTables& t,
                   const IntervalParams& params) {
  const std::size_t n = d.size();
  const Wide a = params.a();
  const Wide b = params.b();
  const Wide capacity = b * t.binomial[n];
  Wide loss = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    const Wide sum = t.sums[k];
    loss = std::max(loss, b * t.binomial[k] - sum);
    if (sum < a * t.binomial[k]) return false;
    if (sum > capacity - loss - Wide(n - k) * d[k - 1]) return false;
  }
  return true;
}

bool interval_test(const ScoreSequence& d, const IntervalParams& params) {
  return interval_test(d, prefix_tables(d), params);
}

Score bound_e(const ScoreSequence& d) {
  return ceil_div(d.back(), static_cast<Score>(d.size() - 1));
}

SearchWindow f_search_interval(const ScoreSequence& d, const PrefixTables& t) {
  const std::size_t n = d.size();
  const Score h = bound_e(d);
  return {std::max(ceil_div(t.sums[n], t.binomial[n]), h), 2 * h};
}

Score min_f(const ScoreSequence& d) {
  const PrefixTables t = prefix_tables(d);
  const SearchWindow window = f_search_interval(d, t);
  const Score f = first_true(window.lo, window.hi, [&](Score b) {
    return interval_test(d, t, IntervalParams(0, b));
  });
  if (f > window.hi) {
    throw std::logic_error("no feasible upper bound inside the f window");
  }
  return f;
}

Score max_g(const ScoreSequence& d, Score f) {
  const PrefixTables t = prefix_tables(d);
  if (f < 0 || !interval_test(d, t, IntervalParams(0, f))) {
    throw Error(ErrorCode::kInvalidParams,
                "max_g needs a feasible upper bound, got f=" +
                    std::to_string(f));
  }
  Score g = f;
  for (std::size_t k = 2; k <= d.size(); ++k) {
    g = std::min(g, t.sums[k] / t.binomial[k]);
  }
  return g;
}

ExtremalSummary extremal_summary(const ScoreSequence& d) {
  const SearchWindow window = f_search_interval(d, prefix_tables(d));
  ExtremalSummary s;
  s.e = bound_e(d);
  s.f = min_f(d);
  s.g = max_g(d, s.f);
  s.f_search_lo = window.lo;
  s.f_search_hi = window.hi;
  return s;
}

Score min_f_closed_form(const ScoreSequence& d) {
  const std::size_t n = d.size();
  const PrefixTables t = prefix_tables(d);
  Score f = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    const Score top = t.sums[k] + static_cast<Score>(n - k) * d[k - 1];
    for (std::size_t j = 0; j <= std::min(k, n - 1); ++j) {
      f = std::max(f, ceil_div(top - t.sums[j],
                               t.binomial[n] - t.binomial[j]));
    }
  }
  return f;
}

Score max_g_search(const ScoreSequence& d, Score f) {
  const PrefixTables t = prefix_tables(d);
  // Feasibility in a is downward closed, so search for the first infeasible a.
  const Score first_bad = first_true(Score{0}, f, [&](Score a) {
    return !interval_test(d, t, IntervalParams(a, f));
  });
  if (first_bad == 0) {
    throw Error(ErrorCode::kInvalidParams,
                "max_g_search needs a feasible upper bound, got f=" +
                    std::to_string(f));
  }
  return first_bad - 1;
}

}  // namespace abtour
