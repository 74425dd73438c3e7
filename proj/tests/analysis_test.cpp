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

#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <random>
#include <vector>

#include "abtour/search.hpp"
#include "brute.hpp"

namespace abtour {
namespace {

const ScoreSequence kSample{9, 9, 19, 20, 32, 34};
const ScoreSequence kZeroHeavy{0, 0, 0, 40, 40, 40};

std::vector<Score> to_vector(const ScoreSequence& d) {
  return {d.scores().begin(), d.scores().end()};
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

TEST(FirstTrueTest, FindsBoundary) {
  EXPECT_EQ(first_true(0, 10, [](int x) { return x >= 7; }), 7);
  EXPECT_EQ(first_true(0, 10, [](int) { return true; }), 0);
  EXPECT_EQ(first_true(0, 10, [](int) { return false; }), 11);
  EXPECT_EQ(first_true(5, 5, [](int x) { return x == 5; }), 5);
}

TEST(LossTableTest, Examples) {
  const ScoreSequence ones{1, 1, 1};
  EXPECT_EQ(loss_table(ones, 1, prefix_tables(ones)).loss,
            (std::vector<Score>{0, 0, 0, 0}));

  const LossTable t = loss_table(kZeroHeavy, 10, prefix_tables(kZeroHeavy));
  EXPECT_EQ(t.loss[3], 30);
  EXPECT_EQ(t.b, 10);

  const LossTable zero = loss_table(kSample, 0, prefix_tables(kSample));
  for (Score v : zero.loss) EXPECT_EQ(v, 0);
}

TEST(LossTableTest, NondecreasingAndNonnegative) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    const ScoreSequence d = random_sequence(rng, 20, 60);
    const LossTable t = loss_table(d, 7, prefix_tables(d));
    ASSERT_EQ(t.loss.size(), d.size() + 1);
    EXPECT_EQ(t.loss[0], 0);
    for (std::size_t k = 1; k < t.loss.size(); ++k) {
      EXPECT_GE(t.loss[k], t.loss[k - 1]);
    }
  }
}

TEST(IntervalTestTest, SampleSequence) {
  EXPECT_TRUE(interval_test(kSample, IntervalParams(0, 9)));
  EXPECT_FALSE(interval_test(kSample, IntervalParams(9, 9)));
  EXPECT_TRUE(interval_test(kSample, IntervalParams(8, 9)));
  EXPECT_FALSE(interval_test(kSample, IntervalParams(0, 8)));
  EXPECT_FALSE(interval_test(ScoreSequence{0, 0}, IntervalParams(1, 1)));
}

TEST(IntervalTestTest, HugeValuesDoNotOverflow) {
  const ScoreSequence d{kMaxScore - 1, kMaxScore};
  EXPECT_TRUE(interval_test(d, IntervalParams(0, 2 * kMaxScore)));
  EXPECT_FALSE(interval_test(d, IntervalParams(0, 2 * kMaxScore - 2)));
  EXPECT_TRUE(interval_test(
      d, IntervalParams(0, std::numeric_limits<Score>::max() / 2)));
  EXPECT_TRUE(interval_test(ScoreSequence{0, 0, 0},
                            IntervalParams(0, std::numeric_limits<Score>::max())))
      << "only zero pair totals realize (0,0,0); b is an upper bound";
}

TEST(IntervalTestTest, AgreesWithReferenceEnumeration) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 300; ++it) {
    const ScoreSequence d = random_sequence(rng, 4, 5);
    const std::vector<Score> v = to_vector(d);
    for (Score b = 0; b <= 4; ++b) {
      for (Score a = 0; a <= b; ++a) {
        EXPECT_EQ(interval_test(d, IntervalParams(a, b)),
                  testing::brute_admits(v, a, b))
            << "a=" << a << " b=" << b << " n=" << d.size();
      }
    }
  }
}

TEST(IntervalTestTest, Monotone) {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 300; ++it) {
    const ScoreSequence d = random_sequence(rng, 10, 40);
    const PrefixTables t = prefix_tables(d);
    for (Score b = 0; b <= 20; ++b) {
      for (Score a = 0; a <= b; ++a) {
        if (!interval_test(d, t, IntervalParams(a, b))) continue;
        if (a > 0) EXPECT_TRUE(interval_test(d, t, IntervalParams(a - 1, b)));
        EXPECT_TRUE(interval_test(d, t, IntervalParams(a, b + 1)));
      }
    }
  }
}

TEST(BoundETest, Examples) {
  EXPECT_EQ(bound_e(kSample), 7);
  EXPECT_EQ(bound_e(ScoreSequence{0, 0, 0}), 0);
  EXPECT_EQ(bound_e(kZeroHeavy), 8);
}

TEST(SearchWindowTest, Examples) {
  const SearchWindow w1 = f_search_interval(kZeroHeavy, prefix_tables(kZeroHeavy));
  EXPECT_EQ(w1.lo, 8);
  EXPECT_EQ(w1.hi, 16);
  const SearchWindow w2 = f_search_interval(kSample, prefix_tables(kSample));
  EXPECT_EQ(w2.lo, 9);
  EXPECT_EQ(w2.hi, 14);
  const ScoreSequence zeros{0, 0};
  const SearchWindow w3 = f_search_interval(zeros, prefix_tables(zeros));
  EXPECT_EQ(w3.lo, 0);
  EXPECT_EQ(w3.hi, 0);
}

TEST(SearchWindowTest, UpperEndAlwaysFeasible) {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 2000; ++it) {
    const ScoreSequence d = random_sequence(rng, 30, 200);
    const SearchWindow w = f_search_interval(d, prefix_tables(d));
    EXPECT_LE(w.lo, w.hi);
    EXPECT_TRUE(interval_test(d, IntervalParams(0, w.hi)));
  }
}

TEST(MinFTest, Examples) {
  EXPECT_EQ(min_f(kSample), 9);
  EXPECT_EQ(min_f(kZeroHeavy), 10);
  EXPECT_EQ(min_f(ScoreSequence{1, 1, 1}), 1);
  EXPECT_EQ(min_f(ScoreSequence{0, 0}), 0);
  EXPECT_EQ(min_f(ScoreSequence{3, 5}), 8);
}

TEST(MaxGTest, Examples) {
  EXPECT_EQ(max_g(kSample, 9), 8);
  EXPECT_EQ(max_g(kZeroHeavy, 10), 0);
  EXPECT_EQ(max_g(ScoreSequence{1, 1, 1}, 1), 1);
  EXPECT_EQ(max_g(ScoreSequence{3, 5}, 8), 8);
  EXPECT_THROW(max_g(kSample, 8), Error);
}

TEST(ExtremalSummaryTest, Examples) {
  const ExtremalSummary s = extremal_summary(kSample);
  EXPECT_EQ(s.e, 7);
  EXPECT_EQ(s.f, 9);
  EXPECT_EQ(s.g, 8);
  EXPECT_EQ(s.f_search_lo, 9);
  EXPECT_EQ(s.f_search_hi, 14);

  EXPECT_EQ(extremal_summary(ScoreSequence{0, 0}), (ExtremalSummary{0, 0, 0, 0, 0}));

  const ExtremalSummary one = extremal_summary(kZeroHeavy);
  EXPECT_EQ(one.e, 8);
  EXPECT_EQ(one.f, 10);
  EXPECT_EQ(one.g, 0);
}

TEST(ExtremalSummaryTest, MatchesReferenceEnumeration) {
  std::mt19937_64 rng(29);
  for (int it = 0; it < 150; ++it) {
    const ScoreSequence d = random_sequence(rng, 4, 6);
    const ExtremalSummary s = extremal_summary(d);
    const testing::BruteExtremes ref =
        testing::brute_extremes(to_vector(d), 2 * bound_e(d));
    ASSERT_TRUE(ref.any);
    EXPECT_EQ(s.f, ref.min_f);
    EXPECT_EQ(s.g, ref.max_g);
    EXPECT_EQ(s.e, ref.min_e);
  }
}

TEST(ExtremalSummaryTest, Invariants) {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 2000; ++it) {
    const ScoreSequence d = random_sequence(rng, 40, 300);
    const ExtremalSummary s = extremal_summary(d);
    const PrefixTables t = prefix_tables(d);
    const Score n = static_cast<Score>(d.size());
    const Score bn = n * (n - 1) / 2;
    EXPECT_LE(0, s.g);
    EXPECT_LE(s.g, t.sums.back() / bn);
    EXPECT_LE(ceil_div(t.sums.back(), bn), s.f);
    EXPECT_LE(s.e, s.f);
    EXPECT_LE(s.f_search_lo, s.f);
    EXPECT_LE(s.f, s.f_search_hi);
    EXPECT_TRUE(interval_test(d, IntervalParams(s.g, s.f)));
    if (s.g < s.f) EXPECT_FALSE(interval_test(d, IntervalParams(s.g + 1, s.f)));
    if (s.f > 0) EXPECT_FALSE(interval_test(d, IntervalParams(0, s.f - 1)));
  }
}

TEST(CrossCheckTest, ClosedFormsAgreeWithSearch) {
  std::mt19937_64 rng(37);
  for (int it = 0; it < 3000; ++it) {
    const ScoreSequence d = random_sequence(rng, 50, 200);
    const Score f = min_f(d);
    EXPECT_EQ(min_f_closed_form(d), f);
    EXPECT_EQ(max_g_search(d, f), max_g(d, f));
  }
}

}  // namespace
}  // namespace abtour
