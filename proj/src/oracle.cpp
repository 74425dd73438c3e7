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

#include "abtour/oracle.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <sstream>
#include <thread>

#include "abtour/analysis.hpp"
#include "abtour/construct.hpp"

namespace abtour {
namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
};

class Enumerator {
 public:
  Enumerator(const ScoreSequence& d, Score cap, Score floor,
             std::uint64_t budget)
      : n_(d.size()),
        cap_(cap),
        floor_(floor),
        budget_(budget),
        remaining_(d.scores().begin(), d.scores().end()),
        open_pairs_(n_, static_cast<Score>(n_ - 1)),
        entries_(n_ * n_, 0),
        seen_(static_cast<std::size_t>((cap + 1) * (cap + 1)), false) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) pairs_.push_back({i, j});
    }
  }

  OracleResult run() {
    visit(0, 0, 0, std::numeric_limits<Score>::max());
    result_.realizable = result_.count > 0;
    if (result_.realizable) build_frontier();
    result_.states = states_;
    return std::move(result_);
  }

 private:
  // A player with `open` unassigned pairs must be able to absorb what it
  // still needs.
  bool can_finish(std::size_t p) const {
    return remaining_[p] <= open_pairs_[p] * cap_ &&
           (open_pairs_[p] > 0 || remaining_[p] == 0);
  }

  void visit(std::size_t depth, Score max_entry, Score max_total,
             Score min_total) {
    if (depth == pairs_.size()) {
      record(max_entry, max_total, min_total);
      return;
    }
    const auto [i, j] = pairs_[depth];
    --open_pairs_[i];
    --open_pairs_[j];
    for (Score total = floor_; total <= cap_; ++total) {
      for (Score mij = 0; mij <= total; ++mij) {
        const Score mji = total - mij;
        if (mij > remaining_[i] || mji > remaining_[j]) continue;
        if (++states_ > budget_) {
          throw Error(ErrorCode::kOracleBudgetExceeded,
                      "oracle budget of " + std::to_string(budget_) +
                          " states exceeded");
        }
        remaining_[i] -= mij;
        remaining_[j] -= mji;
        if (can_finish(i) && can_finish(j)) {
          entries_[i * n_ + j] = mij;
          entries_[j * n_ + i] = mji;
          visit(depth + 1, std::max({max_entry, mij, mji}),
                std::max(max_total, total), std::min(min_total, total));
        }
        remaining_[i] += mij;
        remaining_[j] += mji;
      }
    }
    ++open_pairs_[i];
    ++open_pairs_[j];
  }

  void record(Score max_entry, Score max_total, Score min_total) {
    ++result_.count;
    if (!result_.witness) {
      std::vector<std::vector<Score>> rows(n_, std::vector<Score>(n_));
      for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) rows[i][j] = entries_[i * n_ + j];
      }
      result_.witness = PointMatrix(rows);
    }
    result_.min_F = std::min(result_.min_F.value_or(max_total), max_total);
    result_.max_G = std::max(result_.max_G.value_or(min_total), min_total);
    result_.min_E = std::min(result_.min_E.value_or(max_entry), max_entry);
    seen_[static_cast<std::size_t>(min_total * (cap_ + 1) + max_total)] = true;
  }

  void build_frontier() {
    // Walk G downwards; keep a (G, F) point only if F beats every larger G.
    Score best_f = std::numeric_limits<Score>::max();
    for (Score g = cap_; g >= 0; --g) {
      for (Score f = g; f <= cap_ && f < best_f; ++f) {
        if (seen_[static_cast<std::size_t>(g * (cap_ + 1) + f)]) {
          result_.frontier.push_back({g, f});
          best_f = f;
          break;
        }
      }
    }
    std::reverse(result_.frontier.begin(), result_.frontier.end());
  }

  const std::size_t n_;
  const Score cap_;
  const Score floor_;
  const std::uint64_t budget_;
  std::vector<Score> remaining_;
  std::vector<Score> open_pairs_;
  std::vector<Score> entries_;
  std::vector<bool> seen_;
  std::vector<Pair> pairs_;
  std::uint64_t states_ = 0;
  OracleResult result_;
};

// S_k for k = 0..n, computed here so the oracle does not share code paths
// with the analysis module.
std::vector<Score> running_sums(const ScoreSequence& d) {
  std::vector<Score> sums(d.size() + 1, 0);
  for (std::size_t k = 0; k < d.size(); ++k) sums[k + 1] = sums[k] + d[k];
  return sums;
}

Score pairs_among(std::size_t k) {
  const auto players = static_cast<Score>(k);
  return players * (players - 1) / 2;
}

std::string describe(const ScoreSequence& d) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < d.size(); ++i) out << (i ? "," : "") << d[i];
  out << ")";
  return out.str();
}

void check_sequence(const ScoreSequence& d, std::uint64_t budget,
                    std::vector<std::string>& out) {
  auto mismatch = [&](const std::string& what) {
    out.push_back(describe(d) + ": " + what);
  };
  const Score h = ceil_div(d.back(), static_cast<Score>(d.size() - 1));
  const Score cap = 2 * h;
  const OracleResult truth = enumerate_extremes(d, cap, 0, budget);
  if (!truth.realizable) {
    mismatch("no realization with pair totals <= " + std::to_string(cap));
    return;
  }
  for (Score b = 0; b <= cap; ++b) {
    for (Score a = 0; a <= b; ++a) {
      if (interval_test(d, IntervalParams(a, b)) != truth.admits(a, b)) {
        mismatch("interval_test(" + std::to_string(a) + "," +
                 std::to_string(b) + ") disagrees with enumeration");
      }
    }
  }
  const Score f = min_f(d);
  const Score g = max_g(d, f);
  if (f != *truth.min_F) {
    mismatch("min_f " + std::to_string(f) + " != " +
             std::to_string(*truth.min_F));
  }
  if (g != *truth.max_G) {
    mismatch("max_g " + std::to_string(g) + " != " +
             std::to_string(*truth.max_G));
  }
  if (bound_e(d) != *truth.min_E) {
    mismatch("bound_e " + std::to_string(bound_e(d)) + " != " +
             std::to_string(*truth.min_E));
  }
  if (min_f_closed_form(d) != f) mismatch("closed-form f disagrees");
  if (max_g_search(d, f) != g) mismatch("binary-search g disagrees");
  if (!truth.admits(g, f)) mismatch("(g, f) not jointly attained");
  if (landau_test(d) != interval_test(d, IntervalParams(1, 1))) {
    mismatch("landau_test disagrees with interval_test(1,1)");
  }
  for (Score c = 1; c <= 3; ++c) {
    if (moon_test(d, c) != interval_test(d, IntervalParams(c, c))) {
      mismatch("moon_test disagrees with interval_test(c,c), c=" +
               std::to_string(c));
    }
  }
  const MiniMaxResult built = mini_max(d);
  const MatrixStats stats = matrix_stats(built.matrix);
  if (!verify_realization(built.matrix, d, IntervalParams(g, f)).valid() ||
      stats.max_pair_total != f || stats.min_pair_total != g) {
    mismatch("mini_max does not attain (g, f)");
  }
}

}  // namespace

bool OracleResult::admits(Score a, Score b) const {
  return std::any_of(frontier.begin(), frontier.end(),
                     [&](const PairTotalRange& r) {
                       return r.min_total >= a && r.max_total <= b;
                     });
}

OracleResult enumerate_extremes(const ScoreSequence& d, Score pair_cap,
                                Score a_floor, std::uint64_t budget) {
  if (d.size() > kMaxOraclePlayers) {
    throw Error(ErrorCode::kOracleBudgetExceeded,
                "the oracle handles at most " +
                    std::to_string(kMaxOraclePlayers) + " players, got " +
                    std::to_string(d.size()));
  }
  const Score h = ceil_div(d.back(), static_cast<Score>(d.size() - 1));
  if (a_floor < 0 || pair_cap < a_floor || pair_cap < h) {
    throw Error(ErrorCode::kInvalidParams,
                "oracle needs 0 <= a_floor <= pair_cap and pair_cap >= " +
                    std::to_string(h));
  }
  // No pair can exchange more than d_{n-1} + d_n points.
  const std::size_t n = d.size();
  const Score cap = std::min(pair_cap, d[n - 2] + d[n - 1]);
  if (a_floor > cap) return {};
  return Enumerator(d, cap, a_floor, budget).run();
}

bool landau_test(const ScoreSequence& d) {
  const std::size_t n = d.size();
  Score sum = 0;
  for (std::size_t k = 1; k < n; ++k) {
    sum += d[k - 1];
    if (sum < pairs_among(k)) return false;
  }
  return sum + d[n - 1] == pairs_among(n);
}

bool moon_test(const ScoreSequence& d, Score c) {
  if (c < 1) {
    throw Error(ErrorCode::kInvalidParams,
                "moon_test needs c >= 1, got " + std::to_string(c));
  }
  const std::size_t n = d.size();
  const std::vector<Score> sums = running_sums(d);
  for (std::size_t k = 1; k < n; ++k) {
    if (sums[k] < c * pairs_among(k)) return false;
  }
  return sums[n] == c * pairs_among(n);
}

void for_each_nondecreasing(
    std::size_t n, Score d_max,
    const std::function<void(const ScoreSequence&)>& fn) {
  std::vector<Score> current(n, 0);
  while (true) {
    fn(ScoreSequence(current));
    // Next nondecreasing sequence: bump the last entry below d_max and reset
    // everything after it to the same value.
    std::size_t pos = n;
    while (pos > 0 && current[pos - 1] == d_max) --pos;
    if (pos == 0) return;
    const Score v = current[pos - 1] + 1;
    std::fill(current.begin() + static_cast<std::ptrdiff_t>(pos - 1),
              current.end(), v);
  }
}

SweepReport sweep(std::size_t n_max, Score d_max, unsigned threads,
                  std::uint64_t budget) {
  if (n_max < 2 || n_max > 5 || d_max < 0 || d_max > 6) {
    throw Error(ErrorCode::kInvalidParams,
                "sweep needs 2 <= n_max <= 5 and 0 <= d_max <= 6");
  }
  std::vector<ScoreSequence> work;
  SweepReport report;
  report.sequences_by_length.assign(n_max + 1, 0);
  for (std::size_t n = 2; n <= n_max; ++n) {
    for_each_nondecreasing(n, d_max, [&](const ScoreSequence& d) {
      work.push_back(d);
      ++report.sequences_by_length[n];
    });
  }
  report.sequences = work.size();

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(work.size(), 1)));
  // Strided partition; each sequence's messages land in its own slot so the
  // merged order is the enumeration order.
  std::vector<std::vector<std::string>> per_sequence(work.size());
  std::vector<std::future<void>> jobs;
  for (unsigned t = 0; t < threads; ++t) {
    jobs.push_back(std::async(std::launch::async, [&, t] {
      for (std::size_t i = t; i < work.size(); i += threads) {
        check_sequence(work[i], budget, per_sequence[i]);
      }
    }));
  }
  for (auto& job : jobs) job.get();
  for (auto& messages : per_sequence) {
    for (auto& m : messages) report.mismatches.push_back(std::move(m));
  }
  return report;
}

}  // namespace abtour
