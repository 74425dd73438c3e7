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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "abtour/analysis.hpp"
#include "abtour/io.hpp"
#include "brute.hpp"

namespace abtour {
namespace {

const ScoreSequence kSample{9, 9, 19, 20, 32, 34};

PointMatrix load_golden(const char* name) {
  return io::parse_matrix_csv(
      io::read_file(std::string(ABTOUR_TESTDATA_DIR) + "/" + name));
}

ScoreSequence random_sequence(std::mt19937_64& rng, std::size_t n_max,
                              Score d_max) {
  std::uniform_int_distribution<std::size_t> len(2, n_max);
  std::uniform_int_distribution<Score> val(0, d_max);
  std::vector<Score> v(len(rng));
  for (Score& s : v) s = val(rng);
  std::sort(v.begin(), v.end());
  return ScoreSequence(std::move(v));
}

TEST(NaiveConstructTest, Examples) {
  const std::vector<Score> d{1, 2, 3};
  const PointMatrix m = naive_construct(d);
  EXPECT_EQ(m, PointMatrix({{0, 1, 0}, {0, 0, 2}, {3, 0, 0}}));

  const std::vector<Score> zeros{0, 0};
  EXPECT_EQ(naive_construct(zeros), PointMatrix(2));

  const std::vector<Score> fives{5, 5};
  EXPECT_EQ(naive_construct(fives), PointMatrix({{0, 5}, {5, 0}}));
}

TEST(NaiveConstructTest, UnsortedInputKeepsOrder) {
  const std::vector<Score> d{4, 0, 7, 2};
  EXPECT_EQ(naive_construct(d).row_sums(), d);
  const std::vector<Score> bad{4, -1};
  EXPECT_THROW(naive_construct(bad), Error);
}

TEST(PigeonholeConstructTest, Examples) {
  const PointMatrix m = pigeonhole_construct(ScoreSequence{3, 3, 3});
  EXPECT_EQ(m.row_sums(), (std::vector<Score>{3, 3, 3}));
  EXPECT_EQ(matrix_stats(m).max_entry, 2);
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<Score> row;
    for (std::size_t j = 0; j < 3; ++j) {
      if (i != j) row.push_back(m(i, j));
    }
    std::sort(row.begin(), row.end());
    EXPECT_EQ(row, (std::vector<Score>{1, 2}));
  }

  const ScoreSequence d{2, 2, 4};
  const PointMatrix p = pigeonhole_construct(d);
  EXPECT_EQ(matrix_stats(p).max_entry, 2);
  EXPECT_TRUE(verify_realization(p, d, IntervalParams(0, 4)).valid());

  EXPECT_EQ(pigeonhole_construct(ScoreSequence{0, 0}), PointMatrix(2));
}

TEST(ConstructorPropertyTest, NaiveAndPigeonhole) {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 1000; ++it) {
    const ScoreSequence d = random_sequence(rng, 15, 60);
    const Score h = bound_e(d);
    const PointMatrix naive = naive_construct(d.scores());
    EXPECT_TRUE(verify_realization(naive, d,
                                   IntervalParams(0, d[d.size() - 2] + d.back()))
                    .valid());
    EXPECT_LE(matrix_stats(naive).max_entry, d.back());

    const PointMatrix pig = pigeonhole_construct(d);
    EXPECT_TRUE(verify_realization(pig, d, IntervalParams(0, 2 * h)).valid());
    EXPECT_LE(matrix_stats(pig).max_entry, h);
  }
}

TEST(ScoreSlicingTest, FirstTwoSteps) {
  SlicingState s = initial_slicing_state(kSample, 9);
  s = score_slicing(std::move(s), IntervalParams(8, 9));
  EXPECT_EQ(s.provisional, (std::vector<Score>{9, 9, 19, 20, 23}));
  EXPECT_EQ(s.missing, 0);
  EXPECT_EQ(s.matrix(4, 5), 9);
  EXPECT_EQ(s.matrix(5, 4), 0);
  EXPECT_EQ(s.matrix(5, 3), 8);
  EXPECT_EQ(s.matrix(5, 2), 8);
  EXPECT_EQ(s.matrix(5, 1), 9);
  EXPECT_EQ(s.matrix(5, 0), 9);

  s = score_slicing(std::move(s), IntervalParams(8, 9));
  EXPECT_EQ(s.provisional, (std::vector<Score>{9, 9, 15, 15}));
  EXPECT_EQ(s.matrix(4, 3), 3);
  EXPECT_EQ(s.matrix(4, 2), 4);
  EXPECT_EQ(s.matrix(4, 1), 8);
  EXPECT_EQ(s.matrix(4, 0), 8);
}

TEST(ScoreSlicingTest, ZeroCase) {
  SlicingState s = initial_slicing_state(ScoreSequence{0, 0, 0}, 0);
  s = score_slicing(std::move(s), IntervalParams(0, 0));
  EXPECT_EQ(s.provisional, (std::vector<Score>{0, 0}));
  EXPECT_EQ(s.matrix, PointMatrix(3));
}

TEST(ScoreSlicingTest, RejectsBrokenPreconditions) {
  SlicingState two = initial_slicing_state(ScoreSequence{1, 1}, 2);
  EXPECT_THROW(score_slicing(two, IntervalParams(0, 2)), Error);

  SlicingState infeasible = initial_slicing_state(kSample, 9);
  try {
    score_slicing(infeasible, IntervalParams(9, 9));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasiblePrefix);
  }

  SlicingState touched = initial_slicing_state(kSample, 9);
  touched.matrix.set(5, 0, 3);
  EXPECT_THROW(score_slicing(touched, IntervalParams(8, 9)), Error);
}

TEST(MiniMaxTest, SampleSequence) {
  const MiniMaxResult r = mini_max(kSample);
  EXPECT_EQ(r.summary.f, 9);
  EXPECT_EQ(r.summary.g, 8);
  EXPECT_EQ(r.matrix, load_golden("minimax_8_9.csv"));
  const MatrixStats s = matrix_stats(r.matrix);
  EXPECT_EQ(s.max_pair_total, 9);
  EXPECT_EQ(s.min_pair_total, 8);
}

TEST(MiniMaxTest, SmallCases) {
  const MiniMaxResult two = mini_max(ScoreSequence{2, 2});
  EXPECT_EQ(two.matrix, PointMatrix({{0, 2}, {2, 0}}));
  EXPECT_EQ(two.summary.f, 4);
  EXPECT_EQ(two.summary.g, 4);

  const MiniMaxResult zero = mini_max(ScoreSequence{0, 0});
  EXPECT_EQ(zero.matrix, PointMatrix(2));

  const MiniMaxResult ones = mini_max(ScoreSequence{1, 1, 1});
  EXPECT_EQ(ones.summary.f, 1);
  EXPECT_EQ(ones.summary.g, 1);
  const MatrixStats s = matrix_stats(ones.matrix);
  EXPECT_EQ(s.max_entry, 1);
  EXPECT_EQ(s.max_pair_total, 1);
  EXPECT_EQ(s.min_pair_total, 1);
}

TEST(MiniMaxTest, ZeroHeavySequence) {
  const ScoreSequence d{0, 0, 0, 40, 40, 40};
  const MiniMaxResult r = mini_max(d);
  EXPECT_TRUE(verify_realization(r.matrix, d, IntervalParams(0, 10)).valid());
  EXPECT_EQ(matrix_stats(r.matrix).max_pair_total, 10);
  EXPECT_TRUE(
      verify_realization(load_golden("zero_heavy_f10.csv"), d, IntervalParams(0, 10))
          .valid());
}

TEST(MiniMaxTest, AttainsBothExtremes) {
  std::mt19937_64 rng(43);
  for (int it = 0; it < 3000; ++it) {
    const ScoreSequence d = random_sequence(rng, 14, 40);
    const MiniMaxResult r = mini_max(d);
    const VerificationReport rep =
        verify_realization(r.matrix, d, IntervalParams(r.summary.g, r.summary.f));
    ASSERT_TRUE(rep.valid()) << rep.violations.front();
    const MatrixStats s = matrix_stats(r.matrix);
    EXPECT_EQ(s.max_pair_total, r.summary.f);
    EXPECT_EQ(s.min_pair_total, r.summary.g);
  }
}

TEST(MiniMaxTest, ExhaustiveTinySequences) {
  for (Score d_max = 0; d_max <= 6; ++d_max) {
    std::vector<Score> v(4, 0);
    // All nondecreasing 4-tuples with last entry d_max.
    for (v[0] = 0; v[0] <= d_max; ++v[0]) {
      for (v[1] = v[0]; v[1] <= d_max; ++v[1]) {
        for (v[2] = v[1]; v[2] <= d_max; ++v[2]) {
          v[3] = d_max;
          const ScoreSequence d(v);
          const MiniMaxResult r = mini_max(d);
          const testing::BruteExtremes ref =
              testing::brute_extremes(v, 2 * bound_e(d));
          const MatrixStats s = matrix_stats(r.matrix);
          EXPECT_EQ(s.max_pair_total, ref.min_f);
          EXPECT_EQ(s.min_pair_total, ref.max_g);
          EXPECT_EQ(s.row_sums, v);
        }
      }
    }
  }
}

}  // namespace
}  // namespace abtour
