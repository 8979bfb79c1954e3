// Copyright 2026 The cyclat Authors
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

#include "cyclat/oracle.h"

#include <numeric>

#include <gtest/gtest.h>

#include "cyclat/admitted.h"
#include "cyclat/poset.h"

namespace cyclat::oracle {
namespace {

TEST(ClosureTest, TinyDiagram) {
  const auto d = Build(3);
  const auto order = OrderByClosure(d);
  EXPECT_EQ(order.ComparablePairs(), 3);
  EXPECT_TRUE(order.Leq(d.bottom(), d.top()));
  EXPECT_FALSE(order.Leq(d.top(), d.bottom()));
}

TEST(ClosureTest, PartialOrderAxiomsOnFive) {
  const auto d = Build(5);
  const auto order = OrderByClosure(d);
  for (int x = 0; x < d.size(); ++x) {
    EXPECT_TRUE(order.Leq(x, x));
    for (int y = 0; y < d.size(); ++y) {
      if (x != y && order.Leq(x, y)) EXPECT_FALSE(order.Leq(y, x));
      for (int z = 0; z < d.size(); ++z) {
        if (order.Leq(x, y) && order.Leq(y, z)) ASSERT_TRUE(order.Leq(x, z));
      }
    }
  }
}

TEST(SearchTest, JoinMeetOnFive) {
  const auto d = Build(5);
  const auto order = OrderByClosure(d);
  const int a = d.IndexOf(CircularPermutation::Parse("(14235)"));
  const int b = d.IndexOf(CircularPermutation::Parse("(13425)"));
  EXPECT_EQ(d.node(JoinBySearch(order, a, b)),
            CircularPermutation::Parse("(13542)"));
  EXPECT_EQ(d.node(MeetBySearch(order, a, b)),
            CircularPermutation::Parse("(14253)"));
  for (int x = 0; x < d.size(); ++x) {
    EXPECT_EQ(JoinBySearch(order, x, d.bottom()), x);
    EXPECT_EQ(MeetBySearch(order, x, d.top()), x);
    for (int y = 0; y < d.size(); ++y) {
      ASSERT_EQ(JoinBySearch(order, x, y),
                d.IndexOf(Join(d.vector(x), d.vector(y))));
      ASSERT_EQ(MeetBySearch(order, x, y),
                d.IndexOf(Meet(d.vector(x), d.vector(y))));
    }
  }
}

TEST(ScanTest, Descents) {
  EXPECT_EQ(DescentsByScan(3), (std::vector<std::uint64_t>{1, 4, 1, 0}));
  for (int n = 1; n <= 7; ++n) {
    const auto h = DescentsByScan(n);
    std::uint64_t total = std::accumulate(h.begin(), h.end(), std::uint64_t{0});
    std::uint64_t factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= k;
    EXPECT_EQ(total, factorial);
    EXPECT_EQ(h, EulerianByScan(n));
  }
}

TEST(AffineOracleTest, Lengths) {
  EXPECT_EQ(AffineLengthByEnumeration({1, 2, 3, 4}), 0);
  EXPECT_EQ(AffineLengthByEnumeration({-2, 1, 4, 7}), 4);
  EXPECT_EQ(AffineLengthByBfs({1, 2, 3, 4}, 3), 0);
  EXPECT_EQ(AffineLengthByBfs({2, 1, 3, 4}, 3), 1);
  EXPECT_EQ(AffineLengthByBfs({-2, 1, 4, 7}, 6), 4);
  EXPECT_FALSE(AffineLengthByBfs({-2, 1, 4, 7}, 3).has_value());
}

TEST(AdmittedOracleTest, SmallCounts) {
  EXPECT_EQ(AdmittedVectorsByBruteForce(1).size(), 1u);
  EXPECT_EQ(AdmittedVectorsByBruteForce(3).size(), 2u);
  EXPECT_EQ(AdmittedVectorsByBruteForce(4).size(), 6u);
}

}  // namespace
}  // namespace cyclat::oracle
