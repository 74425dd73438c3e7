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

#include "abtour/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace abtour {
namespace {

constexpr std::size_t kMaxReportedViolations = 16;

void note_violation(VerificationReport& report, std::size_t& count,
                    const std::string& message) {
  if (count++ < kMaxReportedViolations) report.violations.push_back(message);
}

}  // namespace

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInputTooShort: return "InputTooShort";
    case ErrorCode::kNegativeScore: return "NegativeScore";
    case ErrorCode::kValueTooLarge: return "ValueTooLarge";
    case ErrorCode::kNotSorted: return "NotSorted";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kMalformedMatrix: return "MalformedMatrix";
    case ErrorCode::kInfeasiblePrefix: return "InfeasiblePrefix";
    case ErrorCode::kOracleBudgetExceeded: return "OracleBudgetExceeded";
  }
  return "Unknown";
}

void validate_raw_scores(std::span<const Score> raw) {
  if (raw.size() < 2) {
    throw Error(ErrorCode::kInputTooShort,
                "a score sequence needs at least 2 players, got " +
                    std::to_string(raw.size()));
  }
  if (static_cast<Score>(raw.size()) > kMaxPlayers) {
    throw Error(ErrorCode::kValueTooLarge, "too many players");
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] < 0) {
      throw Error(ErrorCode::kNegativeScore,
                  "score at position " + std::to_string(i + 1) +
                      " is negative (" + std::to_string(raw[i]) + ")");
    }
    if (raw[i] > kMaxScore) {
      throw Error(ErrorCode::kValueTooLarge,
                  "score at position " + std::to_string(i + 1) +
                      " exceeds " + std::to_string(kMaxScore));
    }
  }
}

ScoreSequence::ScoreSequence(std::vector<Score> scores)
    : scores_(std::move(scores)) {
  validate_raw_scores(scores_);
  if (!std::is_sorted(scores_.begin(), scores_.end())) {
    throw Error(ErrorCode::kNotSorted, "scores must be nondecreasing");
  }
}

Score ScoreSequence::total() const noexcept {
  return std::accumulate(scores_.begin(), scores_.end(), Score{0});
}

NormalizedScores normalize_sequence(std::span<const Score> raw) {
  validate_raw_scores(raw);
  std::vector<std::size_t> order(raw.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t r) { return raw[l] < raw[r]; });
  std::vector<Score> sorted;
  sorted.reserve(raw.size());
  for (std::size_t idx : order) sorted.push_back(raw[idx]);
  return {ScoreSequence(std::move(sorted)), std::move(order)};
}

IntervalParams::IntervalParams(Score a, Score b) : a_(a), b_(b) {
  if (a < 0 || b < a) {
    throw Error(ErrorCode::kInvalidParams,
                "interval parameters need 0 <= a <= b, got a=" +
                    std::to_string(a) + ", b=" + std::to_string(b));
  }
}

PointMatrix::PointMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {
  if (n < 2) {
    throw Error(ErrorCode::kInputTooShort, "a point matrix needs n >= 2");
  }
}

PointMatrix::PointMatrix(const std::vector<std::vector<Score>>& rows)
    : n_(rows.size()) {
  if (n_ < 2) {
    throw Error(ErrorCode::kInputTooShort, "a point matrix needs n >= 2");
  }
  entries_.reserve(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) {
      throw Error(ErrorCode::kMalformedMatrix,
                  "row " + std::to_string(i + 1) + " has " +
                      std::to_string(rows[i].size()) + " entries, expected " +
                      std::to_string(n_));
    }
    for (std::size_t j = 0; j < n_; ++j) {
      entries_.push_back(0);
      set(i, j, rows[i][j]);
    }
  }
}

void PointMatrix::set(std::size_t i, std::size_t j, Score value) {
  if (value < 0) {
    throw Error(ErrorCode::kMalformedMatrix,
                "negative entry at (" + std::to_string(i + 1) + "," +
                    std::to_string(j + 1) + ")");
  }
  if (i == j && value != 0) {
    throw Error(ErrorCode::kMalformedMatrix,
                "nonzero diagonal entry at row " + std::to_string(i + 1));
  }
  entries_[i * n_ + j] = value;
}

std::vector<Score> PointMatrix::row_sums() const {
  std::vector<Score> sums(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) sums[i] += (*this)(i, j);
  }
  return sums;
}

std::vector<std::vector<Score>> PointMatrix::rows() const {
  std::vector<std::vector<Score>> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    out[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
  }
  return out;
}

MatrixStats matrix_stats(const PointMatrix& m) {
  const std::size_t n = m.size();
  MatrixStats stats;
  stats.row_sums = m.row_sums();
  stats.min_pair_total = m(0, 1) + m(1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      stats.max_entry = std::max(stats.max_entry, m(i, j));
      if (i < j) {
        const Score total = m(i, j) + m(j, i);
        stats.max_pair_total = std::max(stats.max_pair_total, total);
        stats.min_pair_total = std::min(stats.min_pair_total, total);
      }
    }
  }
  return stats;
}

PrefixTables prefix_tables(const ScoreSequence& d) {
  const std::size_t n = d.size();
  PrefixTables t;
  t.binomial.resize(n + 1);
  t.sums.resize(n + 1);
  t.binomial[0] = 0;
  t.sums[0] = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    t.binomial[i] = t.binomial[i - 1] + static_cast<Score>(i - 1);
    t.sums[i] = t.sums[i - 1] + d[i - 1];
  }
  return t;
}

VerificationReport verify_realization(const PointMatrix& m,
                                      const ScoreSequence& d,
                                      const IntervalParams& params) {
  const std::size_t n = m.size();
  if (n != d.size()) {
    throw Error(ErrorCode::kShapeMismatch,
                "matrix has " + std::to_string(n) + " players but " +
                    std::to_string(d.size()) + " scores were given");
  }
  VerificationReport report;
  std::size_t count = 0;

  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) != 0) {
      report.zero_diagonal = false;
      note_violation(report, count,
                     "diagonal entry " + std::to_string(i + 1) + " is nonzero");
    }
  }

  std::vector<Score> sums = m.row_sums();
  std::vector<Score> sorted_sums = sums;
  std::sort(sorted_sums.begin(), sorted_sums.end());
  if (!std::equal(sorted_sums.begin(), sorted_sums.end(), d.scores().begin())) {
    report.row_sums_match = false;
    std::ostringstream msg;
    msg << "row sums (";
    for (std::size_t i = 0; i < n; ++i) msg << (i ? "," : "") << sums[i];
    msg << ") do not match the score sequence";
    note_violation(report, count, msg.str());
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Score total = m(i, j) + m(j, i);
      if (total < params.a() || total > params.b()) {
        report.pair_totals_in_range = false;
        note_violation(report, count,
                       "pair (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ") total " +
                           std::to_string(total) + " outside [" +
                           std::to_string(params.a()) + "," +
                           std::to_string(params.b()) + "]");
      }
    }
  }
  return report;
}

}  // namespace abtour
