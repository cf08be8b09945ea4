#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "intsel/interval.hpp"
#include "intsel/random.hpp"
#include "intsel/solution_state.hpp"
#include "test_support.hpp"

namespace intsel {
namespace {

using testing::iv;

TEST(Interval, RejectsEmptyReversedAndNonFinite) {
  EXPECT_THROW(Interval::make(0, 3, 3), std::invalid_argument);
  EXPECT_THROW(Interval::make(0, 4, 3), std::invalid_argument);
  EXPECT_THROW(Interval::make(0, std::numeric_limits<double>::quiet_NaN(), 3),
               std::invalid_argument);
  EXPECT_THROW(Interval::make(0, 0, std::numeric_limits<double>::infinity()),
               std::invalid_argument);
  EXPECT_NO_THROW(Interval::make(0, -2, -1));
}

TEST(Interval, WeightModels) {
  const Interval a = iv(0, 2, 7.5);
  EXPECT_EQ(weight(a, WeightModel::Unit), 1.0);
  EXPECT_EQ(weight(a, WeightModel::Proportional), 5.5);
  EXPECT_EQ(parse_weight_model("unit"), WeightModel::Unit);
  EXPECT_EQ(parse_weight_model("proportional"), WeightModel::Proportional);
  EXPECT_THROW(parse_weight_model("linear"), std::invalid_argument);
}

TEST(Instance, RequiresDenseIds) {
  EXPECT_THROW(Instance({iv(1, 0, 1)}, WeightModel::Unit), std::invalid_argument);
  EXPECT_THROW(Instance({iv(0, 0, 1), iv(0, 2, 3)}, WeightModel::Unit), std::invalid_argument);
  const Instance inst = testing::spans({{0, 1}, {0, 1}, {5, 9}}, WeightModel::Proportional);
  EXPECT_EQ(inst.size(), 3u);
  EXPECT_EQ(inst[2].id, 2u);
  EXPECT_EQ(inst.weight_of(2), 4.0);
  EXPECT_EQ(inst.with_weight_model(WeightModel::Unit).weight_of(2), 1.0);
}

TEST(Conflicts, Examples) {
  EXPECT_FALSE(conflicts(iv(0, 1, 3), iv(1, 3, 5)));
  EXPECT_TRUE(conflicts(iv(0, 0, 4), iv(1, 2, 3)));
  EXPECT_TRUE(conflicts(iv(0, 0, 4), iv(1, 2, 6)));
}

TEST(ClassifyConflict, Examples) {
  EXPECT_EQ(classify_conflict(iv(0, 0, 10), iv(1, 2, 5)), ConflictKind::OldSubsumesNew);
  EXPECT_EQ(classify_conflict(iv(0, 2, 5), iv(1, 0, 10)), ConflictKind::NewSubsumesOld);
  EXPECT_EQ(classify_conflict(iv(0, 0, 4), iv(1, 0, 4)), ConflictKind::Equal);
}

TEST(ClassifyConflict, SharedEndpointNestingIsProper) {
  EXPECT_EQ(classify_conflict(iv(0, 0, 10), iv(1, 0, 5)), ConflictKind::OldSubsumesNew);
  EXPECT_EQ(classify_conflict(iv(0, 0, 10), iv(1, 5, 10)), ConflictKind::OldSubsumesNew);
  EXPECT_EQ(classify_conflict(iv(0, 5, 10), iv(1, 0, 10)), ConflictKind::NewSubsumesOld);
  EXPECT_EQ(classify_conflict(iv(0, 0, 4), iv(1, 2, 6)), ConflictKind::Partial);
  EXPECT_EQ(classify_conflict(iv(0, 0, 4), iv(1, 4, 6)), ConflictKind::Disjoint);
}

// Compares against a direct endpoint enumeration on a small integer grid.
TEST(ClassifyConflict, SymmetryAndAgreementWithConflicts) {
  for (int a = 0; a < 6; ++a) {
    for (int b = a + 1; b <= 6; ++b) {
      for (int c = 0; c < 6; ++c) {
        for (int d = c + 1; d <= 6; ++d) {
          const Interval x = iv(0, a, b);
          const Interval y = iv(1, c, d);
          EXPECT_EQ(conflicts(x, y), conflicts(y, x));
          const ConflictKind k = classify_conflict(x, y);
          EXPECT_EQ(k == ConflictKind::Disjoint, !conflicts(x, y));
          ConflictKind expected = ConflictKind::Partial;
          if (!(a < d && c < b)) {
            expected = ConflictKind::Disjoint;
          } else if (a == c && b == d) {
            expected = ConflictKind::Equal;
          } else if (a <= c && d <= b) {
            expected = ConflictKind::OldSubsumesNew;
          } else if (c <= a && b <= d) {
            expected = ConflictKind::NewSubsumesOld;
          }
          EXPECT_EQ(k, expected) << a << ' ' << b << ' ' << c << ' ' << d;
          const ConflictKind mirrored = classify_conflict(y, x);
          if (k == ConflictKind::OldSubsumesNew) {
            EXPECT_EQ(mirrored, ConflictKind::NewSubsumesOld);
          }
          if (k == ConflictKind::Partial || k == ConflictKind::Equal) {
            EXPECT_EQ(mirrored, k);
          }
        }
      }
    }
  }
}

TEST(DistinctLengths, Examples) {
  EXPECT_EQ(distinct_lengths(Instance{}), 0u);
  EXPECT_EQ(distinct_lengths(testing::spans({{0, 1}, {3, 4}, {7, 8}})), 1u);
  EXPECT_EQ(distinct_lengths(testing::spans({{0, 1}, {3, 5}, {7, 11}, {2, 3}})), 3u);
}

TEST(SolutionState, ConflictSetExamples) {
  SolutionState s(WeightModel::Unit);
  EXPECT_TRUE(s.conflict_set(iv(9, 0, 100)).empty());
  s.insert(iv(0, 0, 2));
  s.insert(iv(1, 4, 6));
  s.insert(iv(2, 8, 10));
  const auto got = s.conflict_set(iv(3, 3, 9));
  ASSERT_EQ(got.size(), 2u);
  EXPECT_EQ(got[0], iv(1, 4, 6));
  EXPECT_EQ(got[1], iv(2, 8, 10));

  SolutionState t(WeightModel::Unit);
  t.insert(iv(0, 0, 4));
  EXPECT_TRUE(t.conflict_set(iv(1, 4, 8)).empty());
}

TEST(SolutionState, InsertEraseReplace) {
  SolutionState s(WeightModel::Proportional);
  s.insert(iv(0, 0, 2));
  s.insert(iv(1, 2, 5));
  EXPECT_THROW(s.insert(iv(2, 1, 3)), std::logic_error);
  EXPECT_EQ(s.total_weight(), 5.0);
  EXPECT_TRUE(s.contains(iv(1, 2, 5)));
  EXPECT_THROW(s.erase(iv(3, 7, 8)), std::logic_error);

  const std::vector<Interval> displaced = s.conflict_set(iv(4, 1, 3));
  s.replace(displaced, iv(4, 1, 3));
  EXPECT_EQ(s.member_ids(), std::vector<IntervalId>{4});
  EXPECT_EQ(s.total_weight(), 2.0);
  EXPECT_TRUE(s.is_disjoint());
}

// conflict_set against a linear scan on random disjoint states.
TEST(SolutionState, ConflictSetMatchesLinearScan) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    SolutionState s(WeightModel::Proportional);
    std::vector<Interval> members;
    IntervalId id = 0;
    for (int k = 0; k < 40; ++k) {
      const double a = std::floor(rng.uniform_real(0, 200));
      const Interval cand = iv(id++, a, a + 1 + std::floor(rng.uniform_real(0, 8)));
      if (std::none_of(members.begin(), members.end(),
                       [&](const Interval& m) { return conflicts(m, cand); })) {
        s.insert(cand);
        members.push_back(cand);
      }
    }
    std::sort(members.begin(), members.end(),
              [](const Interval& x, const Interval& y) { return x.start < y.start; });
    ASSERT_TRUE(s.is_disjoint());
    double w = 0.0;
    for (const Interval& m : members) w += m.length();
    EXPECT_EQ(s.total_weight(), w);
    for (int q = 0; q < 50; ++q) {
      const double a = std::floor(rng.uniform_real(-5, 210));
      const Interval query = iv(999, a, a + 0.5 + std::floor(rng.uniform_real(0, 30)));
      std::vector<Interval> expect;
      for (const Interval& m : members) {
        if (conflicts(m, query)) expect.push_back(m);
      }
      EXPECT_EQ(s.conflict_set(query), expect);
    }
  }
}

}  // namespace
}  // namespace intsel
