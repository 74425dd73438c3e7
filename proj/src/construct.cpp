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

#include "abtour/construct.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "abtour/analysis.hpp"

namespace abtour {
namespace {

constexpr Score kUnlimited = std::numeric_limits<Score>::max();

[[noreturn]] void infeasible(const std::string& what) {
  throw Error(ErrorCode::kInfeasiblePrefix, what);
}

// Settles the matches of one player against all lower-indexed open players.
class Slicer {
 public:
  Slicer(SlicingState& state, const IntervalParams& params)
      : p_(state.provisional),
        m_(state.matrix),
        a_(params.a()),
        b_(params.b()),
        top_(state.k() - 1) {
    // additional_[i] = A_{i+1} = (p_0 + ... + p_i) - a*B_{i+1}.
    additional_.resize(top_);
    Score prefix = 0;
    for (std::size_t i = 0; i < top_; ++i) {
      prefix += p_[i];
      additional_[i] = prefix - a_ * static_cast<Score>(i * (i + 1) / 2);
    }
    const Score opponents = static_cast<Score>(top_);
    missing_ = opponents * b_ - p_[top_];
    deficit_ = opponents * a_ - p_[top_];
  }

  void run() {
    if (a_ < b_) slice(a_, &deficit_);
    slice(b_, nullptr);
    release_surplus();
  }

  Score missing() const { return missing_; }
  const std::vector<Score>& additional() const { return additional_; }

 private:
  Score suffix_min_additional(std::size_t from) const {
    return *std::min_element(additional_.begin() + static_cast<std::ptrdiff_t>(from),
                             additional_.end());
  }

  // Moves points from the top player's row into the column entries of the
  // strongest opponents whose column entry is below `cap`, one block of equal
  // provisional scores at a time. `limit`, when given, bounds the total moved
  // in this round and is decremented.
  void slice(Score cap, Score* limit) {
    std::ptrdiff_t x = static_cast<std::ptrdiff_t>(top_) - 1;
    while (missing_ > 0 && additional_[top_ - 1] > 0 &&
           (limit == nullptr || *limit > 0)) {
      while (x >= 0 && m_(static_cast<std::size_t>(x), top_) >= cap) --x;
      if (x < 0) return;

      // Block [x - freq + 1, x] of equal provisional scores.
      std::ptrdiff_t freq = 1;
      while (x - freq >= 0 && p_[x - freq + 1] == p_[x - freq]) ++freq;
      const Score below = x - freq >= 0 ? p_[x - freq] : 0;
      const Score gap = p_[x - freq + 1] - below;
      const Score budget = std::min(missing_, limit ? *limit : kUnlimited);
      const Score slice_cap =
          std::min({cap, gap, ceil_div(additional_[x], freq),
                    ceil_div(budget, freq)});

      Score moved = 0;
      for (std::ptrdiff_t idx = x - freq + 1; idx <= x; ++idx) {
        const auto i = static_cast<std::size_t>(idx);
        Score y = std::min({cap - m_(i, top_), slice_cap, missing_,
                            suffix_min_additional(i), p_[i]});
        if (limit != nullptr) y = std::min(y, *limit);
        if (y <= 0) continue;
        m_.add(i, top_, y);
        m_.add(top_, i, -y);
        p_[i] -= y;
        missing_ -= y;
        if (limit != nullptr) *limit -= y;
        for (std::size_t j = i; j < top_; ++j) additional_[j] -= y;
        moved += y;
      }
      if (moved == 0) return;
    }
  }

  // Lowers the top player's wins, highest opponent first, without taking any
  // pair total below a.
  void release_surplus() {
    while (missing_ > 0) {
      Score released = 0;
      for (std::size_t i = top_; i-- > 0;) {
        const Score y = std::min(
            {m_(top_, i), missing_, m_(top_, i) + m_(i, top_) - a_});
        if (y <= 0) continue;
        m_.add(top_, i, -y);
        missing_ -= y;
        released += y;
      }
      if (released == 0) {
        infeasible("player " + std::to_string(top_ + 1) + " keeps " +
                   std::to_string(missing_) + " points it cannot shed");
      }
    }
  }

  std::vector<Score>& p_;
  PointMatrix& m_;
  const Score a_;
  const Score b_;
  const std::size_t top_;
  Score missing_ = 0;
  Score deficit_ = 0;
  std::vector<Score> additional_;
};

void check_slicing_preconditions(const SlicingState& state,
                                 const IntervalParams& params) {
  const std::size_t k = state.k();
  if (k < 3) infeasible("score slicing needs at least 3 open players");
  if (k > state.matrix.size()) infeasible("more open players than matrix rows");
  const std::size_t top = k - 1;
  for (std::size_t i = 0; i < top; ++i) {
    if (state.matrix(top, i) != params.b() || state.matrix(i, top) != 0) {
      infeasible("row/column " + std::to_string(k) +
                 " is not in its initial b:0 state");
    }
  }
  for (Score s : state.provisional) {
    if (s < 0) infeasible("negative provisional score");
  }
  if (!std::is_sorted(state.provisional.begin(), state.provisional.end())) {
    infeasible("provisional scores are not nondecreasing");
  }
  if (!interval_test(ScoreSequence(state.provisional), params)) {
    infeasible("provisional prefix of " + std::to_string(k) +
               " players is not realizable with a=" +
               std::to_string(params.a()) + ", b=" +
               std::to_string(params.b()));
  }
}

}  // namespace

PointMatrix naive_construct(std::span<const Score> raw) {
  validate_raw_scores(raw);
  const std::size_t n = raw.size();
  PointMatrix m(n);
  m.set(n - 1, 0, raw[n - 1]);
  for (std::size_t i = 0; i + 1 < n; ++i) m.set(i, i + 1, raw[i]);
  return m;
}

PointMatrix pigeonhole_construct(const ScoreSequence& d) {
  const std::size_t n = d.size();
  const auto opponents = static_cast<Score>(n - 1);
  PointMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Score base = d[i] / opponents;
    const auto larger = static_cast<std::size_t>(d[i] % opponents);
    for (std::size_t j = 1; j < n; ++j) {
      m.set(i, (i + j) % n, j <= larger ? base + 1 : base);
    }
  }
  return m;
}

SlicingState initial_slicing_state(const ScoreSequence& d, Score b) {
  const std::size_t n = d.size();
  SlicingState state{std::vector<Score>(d.scores().begin(), d.scores().end()),
                     PointMatrix(n), 0, {}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) state.matrix.set(i, j, b);
  }
  return state;
}

SlicingState score_slicing(SlicingState state, const IntervalParams& params) {
  check_slicing_preconditions(state, params);
  Slicer slicer(state, params);
  slicer.run();
  state.missing = slicer.missing();
  state.additional = slicer.additional();
  state.provisional.pop_back();

  // The settled prefix must stay sorted and realizable.
  if (!std::is_sorted(state.provisional.begin(), state.provisional.end()) ||
      (state.k() >= 2 &&
       !interval_test(ScoreSequence(state.provisional), params))) {
    infeasible("slicing left an unrealizable prefix of " +
               std::to_string(state.k()) + " players");
  }
  return state;
}

MiniMaxResult mini_max(const ScoreSequence& d) {
  const ExtremalSummary summary = extremal_summary(d);
  const IntervalParams params(summary.g, summary.f);
  SlicingState state = initial_slicing_state(d, summary.f);
  while (state.k() >= 3) state = score_slicing(std::move(state), params);
  state.matrix.set(0, 1, state.provisional[0]);
  state.matrix.set(1, 0, state.provisional[1]);
  return {summary, std::move(state.matrix)};
}

}  // namespace abtour
