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

#ifndef ABTOUR_CORE_HPP_
#define ABTOUR_CORE_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace abtour {

// Points won, pair totals and every derived sum are carried as 64-bit
// signed integers. Products of the form b * B_k are evaluated in 128 bits.
using Score = std::int64_t;

// Largest accepted player count and largest accepted single score.
inline constexpr Score kMaxPlayers = 1'000'000'000;
inline constexpr Score kMaxScore = 1'000'000'000;

enum class ErrorCode {
  kInputTooShort,
  kNegativeScore,
  kValueTooLarge,
  kNotSorted,
  kInvalidParams,
  kShapeMismatch,
  kMalformedMatrix,
  kInfeasiblePrefix,
  kOracleBudgetExceeded,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// A nondecreasing sequence of n >= 2 nonnegative scores. Indices are 0-based;
// element i is the score of player P_{i+1}.
class ScoreSequence {
 public:
  // Throws kNotSorted if `scores` is not nondecreasing, plus every error of
  // validate_raw_scores.
  explicit ScoreSequence(std::vector<Score> scores);
  ScoreSequence(std::initializer_list<Score> scores)
      : ScoreSequence(std::vector<Score>(scores)) {}

  std::size_t size() const noexcept { return scores_.size(); }
  Score operator[](std::size_t i) const { return scores_[i]; }
  Score back() const { return scores_.back(); }
  std::span<const Score> scores() const noexcept { return scores_; }
  Score total() const noexcept;

  friend bool operator==(const ScoreSequence&, const ScoreSequence&) = default;

 private:
  std::vector<Score> scores_;
};

// Throws kInputTooShort, kNegativeScore or kValueTooLarge.
void validate_raw_scores(std::span<const Score> raw);

struct NormalizedScores {
  ScoreSequence sequence;
  // permutation[i] is the original position of sequence[i].
  std::vector<std::size_t> permutation;
};

// Stable nondecreasing sort of `raw`.
NormalizedScores normalize_sequence(std::span<const Score> raw);

// Bounds on the points divided in every match.
class IntervalParams {
 public:
  // Throws kInvalidParams unless 0 <= a <= b.
  IntervalParams(Score a, Score b);

  Score a() const noexcept { return a_; }
  Score b() const noexcept { return b_; }

  friend bool operator==(const IntervalParams&, const IntervalParams&) = default;

 private:
  Score a_;
  Score b_;
};

// n x n match-result matrix. Entry (i, j) is the number of points player i
// won against player j. Entries are nonnegative and the diagonal is zero.
class PointMatrix {
 public:
  // All-zero matrix. Throws kInputTooShort for n < 2.
  explicit PointMatrix(std::size_t n);
  // Throws kMalformedMatrix on ragged rows, negative entries or a nonzero
  // diagonal, and kInputTooShort for fewer than two rows.
  explicit PointMatrix(const std::vector<std::vector<Score>>& rows);

  std::size_t size() const noexcept { return n_; }
  Score operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }
  // Throws kMalformedMatrix for negative values or a nonzero diagonal entry.
  void set(std::size_t i, std::size_t j, Score value);
  void add(std::size_t i, std::size_t j, Score delta) {
    set(i, j, (*this)(i, j) + delta);
  }

  std::vector<Score> row_sums() const;
  std::vector<std::vector<Score>> rows() const;

  friend bool operator==(const PointMatrix&, const PointMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<Score> entries_;
};

struct MatrixStats {
  Score max_entry = 0;       // E
  Score max_pair_total = 0;  // F, over i < j
  Score min_pair_total = 0;  // G, over i < j
  std::vector<Score> row_sums;
};

MatrixStats matrix_stats(const PointMatrix& m);

struct ExtremalSummary {
  Score e = 0;
  Score f = 0;
  Score g = 0;
  Score f_search_lo = 0;
  Score f_search_hi = 0;

  friend bool operator==(const ExtremalSummary&,
                         const ExtremalSummary&) = default;
};

struct PrefixTables {
  std::vector<Score> binomial;  // B_0..B_n, B_i = i(i-1)/2
  std::vector<Score> sums;      // S_0..S_n
};

PrefixTables prefix_tables(const ScoreSequence& d);

struct VerificationReport {
  bool zero_diagonal = true;
  bool row_sums_match = true;
  bool pair_totals_in_range = true;
  std::vector<std::string> violations;

  bool valid() const noexcept {
    return zero_diagonal && row_sums_match && pair_totals_in_range;
  }
};

// Checks that `m` realizes `d` as an (a,b,n)-tournament. Row sums are
// compared as a multiset, since the score sequence of a tournament is its
// sorted out-degree vector. Throws kShapeMismatch if sizes differ.
VerificationReport verify_realization(const PointMatrix& m,
                                      const ScoreSequence& d,
                                      const IntervalParams& params);

// ceil(num / den) for den > 0.
constexpr Score ceil_div(Score num, Score den) {
  return num / den + (num % den != 0 && num > 0 ? 1 : 0);
}

// floor(num / den) for den > 0.
constexpr Score floor_div(Score num, Score den) {
  return num / den - (num % den != 0 && num < 0 ? 1 : 0);
}

}  // namespace abtour

#endif  // ABTOUR_CORE_HPP_
