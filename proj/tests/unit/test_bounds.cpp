#include <gtest/gtest.h>

#include <algorithm>

#include "hyperlab/bounds/bounds.hpp"
#include "hyperlab/hypercore.hpp"

using namespace hyperlab;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

}  // namespace

TEST(Bounds, HandComputedThresholds) {
  // C(3,2) = 3: 3 - 1 - 2/3 + 2(5/3)/5.
  EXPECT_EQ(min_obeying_threshold(3, 4), q(2));
  // C(4,2) = 6: 6 - 1 - 1/2 - 1/3.
  EXPECT_EQ(min_violating_threshold(3, 5), q(25, 6));
  EXPECT_THROW(min_obeying_threshold(3, 3), DomainError);
  EXPECT_THROW(min_violating_threshold(3, 4), DomainError);
}

TEST(Bounds, Candidates) {
  const auto [lo, hi] = max_spectrum_candidates(3, 5);
  EXPECT_EQ(lo, q(25, 13));
  EXPECT_EQ(hi, q(27, 14));
  EXPECT_EQ(near_top_alpha(3, 5, 5), q(25, 13));
}

TEST(Bounds, LimitPointBounds) {
  EXPECT_EQ(limit_point_lower_bound(3, 9), q(7, 4));
  EXPECT_EQ(limit_point_upper_bound(3, 5), q(15, 8));
  EXPECT_EQ(min_limit_point_bound(3, 14), q(1, 3));
  EXPECT_THROW(limit_point_lower_bound(3, 6), DomainError);
  EXPECT_THROW(min_limit_point_bound(3, 12), DomainError);
}

TEST(Bounds, ExceptionalSetMembership) {
  for (int s = 3; s <= 4; ++s)
    for (int k = s + 1; k <= s + 6; ++k) {
      for (const auto& a : fractional_obeying_set(s, k, 8)) EXPECT_TRUE(in_exceptional_set(s, k, a));
      for (const auto& a : integer_violating_set(s, k)) EXPECT_TRUE(in_exceptional_set(s, k, a));
    }
  EXPECT_FALSE(in_exceptional_set(3, 5, q(1)));
  EXPECT_FALSE(in_exceptional_set(3, 5, q(2)));
}

TEST(Bounds, SetsAreSortedAndDisjoint) {
  for (int s = 3; s <= 4; ++s)
    for (int k = s + 1; k <= s + 8; ++k) {
      const auto obey = fractional_obeying_set(s, k, 16);
      const auto viol = integer_violating_set(s, k);
      EXPECT_TRUE(std::is_sorted(obey.begin(), obey.end()));
      EXPECT_TRUE(std::adjacent_find(obey.begin(), obey.end()) == obey.end());
      for (const auto& a : viol) EXPECT_FALSE(std::binary_search(obey.begin(), obey.end(), a));
      if (!viol.empty()) {
        EXPECT_EQ(viol.back(), max_spectrum_candidates(s, k).first);
      }
      const auto report = check_consistency(s, k, 16);
      EXPECT_TRUE(report.ok()) << "s=" << s << " k=" << k;
    }
}

TEST(Bounds, EarlierSetInsideLaterSet) {
  for (int s = 3; s <= 4; ++s)
    for (int k = s + 4; k <= s + 8; ++k) {
      const auto later = integer_violating_set(s, k);
      for (const auto& a : earlier_violating_set(s, k))
        EXPECT_TRUE(std::find(later.begin(), later.end(), a) != later.end());
    }
  EXPECT_THROW(earlier_violating_set(3, 6), DomainError);
}

TEST(Bounds, TableRowsRespectRanges) {
  const auto small = bound_table(3, 4);
  const auto large = bound_table(3, 13);
  EXPECT_LT(small.size(), large.size());
  for (const auto& row : large) {
    EXPECT_EQ(row.s, 3);
    EXPECT_EQ(row.k, 13);
    EXPECT_TRUE(row.quantity == "alpha" || row.quantity == "inverse_alpha");
  }
  for (const auto& row : small) EXPECT_NE(row.kind, BoundKind::MinLimitPoints);
  EXPECT_EQ(to_string(BoundKind::MaxCandidates), "max_Sk_candidates");
}
