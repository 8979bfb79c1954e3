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

#include "cyclat/admitted.h"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "cyclat/error.h"
#include "cyclat/oracle.h"
#include "cyclat/perm_core.h"

namespace cyclat {
namespace {

CircularPermutation Cyc(const char* text) {
  return CircularPermutation::Parse(text);
}

AdmittedVector Vec(int n, std::vector<std::vector<int>> rows) {
  return AdmittedVector::Validate(TriangularVector::FromRows(n, rows));
}

std::vector<AdmittedVector> AllVectors(int n) {
  std::vector<AdmittedVector> out;
  ForEachCircularPermutation(
      n, [&](const CircularPermutation& s) { out.push_back(ToVector(s)); });
  return out;
}

// v_ij = -gamma_ij + sum_{i<=k<j} gamma_{k,k+1}, scanning the canonical word.
TriangularVector VectorByScan(const CircularPermutation& sigma) {
  const int n = sigma.n();
  std::vector<int> pos(n + 1);
  for (int p = 0; p < n; ++p) pos[sigma[p]] = p;
  auto gamma = [&](int i, int j) { return pos[j] < pos[i] ? 1 : 0; };
  TriangularVector v(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      int value = -gamma(i, j);
      for (int k = i; k < j; ++k) value += gamma(k, k + 1);
      v.at(i, j) = value;
    }
  }
  return v;
}

TEST(TriangularVectorTest, RowsRoundTrip) {
  const auto t = TriangularVector::FromRows(4, {{0, 1, 2}, {0, 1}, {0}});
  EXPECT_EQ(t.at(1, 4), 2);
  EXPECT_EQ(t.at(2, 4), 1);
  EXPECT_EQ(t.Rows(), (std::vector<std::vector<int>>{{0, 1, 2}, {0, 1}, {0}}));
  EXPECT_EQ(t.ToString(), "[[0,1,2],[0,1],[0]]");
  EXPECT_EQ(t.Sum(), 4);
  EXPECT_THROW(TriangularVector::FromRows(4, {{0, 1}, {0, 1}, {0}}), Error);
  EXPECT_THROW(TriangularVector::FromRows(4, {{0, 1, 2}, {0, 1}}), Error);
}

TEST(ValidateTest, Examples) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(AdmittedVector::Zero(n).Rank(), 0);
    EXPECT_EQ(AdmittedVector::Max(n).Rank(), TopRank(n));
  }
  try {
    Vec(3, {{0, 2}, {0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDeltaOutOfRange);
    EXPECT_NE(std::string(e.what()).find("(1,2,3)"), std::string::npos)
        << e.what();
  }
  try {
    Vec(3, {{1, 1}, {0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAdjacentNonzero);
  }
  const auto violation =
      FindViolation(TriangularVector::FromRows(4, {{0, 1, 0}, {0, 0}, {0}}));
  ASSERT_TRUE(violation.has_value());
  EXPECT_EQ(violation->code, ErrorCode::kDeltaOutOfRange);
  EXPECT_FALSE(AdmittedVector::TryValidate(
                   TriangularVector::FromRows(3, {{0, -1}, {0}}))
                   .has_value());
}

TEST(ValidateTest, MaxIsUniqueMaximumAndCountMatchesBruteForce) {
  for (int n = 1; n <= 6; ++n) {
    const auto brute = oracle::AdmittedVectorsByBruteForce(n);
    std::int64_t factorial = 1;
    for (int k = 2; k < n; ++k) factorial *= k;
    EXPECT_EQ(static_cast<std::int64_t>(brute.size()), factorial) << n;
    std::set<AdmittedVector> from_cycles;
    for (const auto& v : AllVectors(n)) from_cycles.insert(v);
    std::set<AdmittedVector> from_brute;
    for (const auto& rows : brute) from_brute.insert(Vec(n, rows));
    EXPECT_EQ(from_cycles, from_brute) << n;
    for (const auto& v : from_brute) EXPECT_TRUE(Leq(v, AdmittedVector::Max(n)));
  }
}

TEST(DeltaTest, Examples) {
  const int n = 6;
  const auto zero = AdmittedVector::Zero(n);
  const auto max = AdmittedVector::Max(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      for (int k = j; k <= n; ++k) {
        EXPECT_EQ(Delta(zero, i, j, k), 0);
        if (i < j && j < k) EXPECT_EQ(Delta(max, i, j, k), 1);
        if (i == j || j == k) EXPECT_EQ(Delta(max, i, j, k), 0);
      }
    }
  }
  EXPECT_THROW(Delta(zero, 3, 2, 4), Error);
  EXPECT_THROW(Delta(zero, 1, 2, 7), Error);
}

TEST(DeltaTest, PtolemyHoldsUpToSix) {
  for (int n = 4; n <= 6; ++n) {
    for (const auto& v : AllVectors(n)) {
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int k = j + 1; k <= n; ++k)
            for (int l = k + 1; l <= n; ++l)
              ASSERT_EQ(Delta(v, i, j, k) + Delta(v, i, k, l),
                        Delta(v, i, j, l) + Delta(v, j, k, l));
    }
  }
}

TEST(ToVectorTest, Examples) {
  EXPECT_EQ(ToVector(CircularPermutation::Bottom(5)), AdmittedVector::Zero(5));
  EXPECT_EQ(ToVector(CircularPermutation::Top(5)), AdmittedVector::Max(5));
  EXPECT_EQ(ToCycle(AdmittedVector::Zero(5)), CircularPermutation::Bottom(5));
  EXPECT_EQ(ToCycle(AdmittedVector::Max(7)), CircularPermutation::Top(7));
}

// The vector of (1,6,4,2,3,5), derived twice: from the defining formula and
// by adding e_rs along a saturated chain from the bottom.
TEST(ToVectorTest, SixCycleAgreesWithFormulaAndChain) {
  const auto sigma = Cyc("(1,6,4,2,3,5)");
  const auto v = ToVector(sigma);
  EXPECT_EQ(v.raw(), VectorByScan(sigma));

  // Walk down to the bottom, then replay the labels upward.
  std::vector<DescentLabel> labels;
  auto current = sigma;
  while (true) {
    const auto down = CoversDown(current);
    if (down.empty()) break;
    labels.push_back(down.front().label);
    current = down.front().target;
  }
  EXPECT_EQ(current, CircularPermutation::Bottom(6));
  TriangularVector sum(6);
  for (const auto& l : labels) ++sum.at(l.r, l.s);
  EXPECT_EQ(v.raw(), sum);
  EXPECT_EQ(static_cast<std::int64_t>(labels.size()), RankN(sigma));
  EXPECT_EQ(v.ToString(), sum.ToString());
}

TEST(ToVectorTest, BijectionAndGradingUpToSeven) {
  for (int n = 1; n <= 7; ++n) {
    std::set<AdmittedVector> seen;
    ForEachCircularPermutation(n, [&](const CircularPermutation& s) {
      const auto v = ToVector(s);
      ASSERT_EQ(v.raw(), VectorByScan(s));
      ASSERT_EQ(ToCycle(v), s);
      ASSERT_EQ(v.Rank(), RankN(s));
      seen.insert(v);
    });
    std::int64_t factorial = 1;
    for (int k = 2; k < n; ++k) factorial *= k;
    EXPECT_EQ(static_cast<std::int64_t>(seen.size()), factorial);
  }
}

TEST(ToVectorTest, CoverTransportUpToSix) {
  for (int n = 3; n <= 6; ++n) {
    ForEachCircularPermutation(n, [&](const CircularPermutation& s) {
      const auto v = ToVector(s);
      for (const auto& c : CoversUp(s)) {
        TriangularVector expected = v.raw();
        ++expected.at(c.label.r, c.label.s);
        ASSERT_EQ(ToVector(c.target).raw(), expected);
      }
    });
  }
}

TEST(IncrementTest, MatchesDirectValidationUpToSix) {
  for (int n = 3; n <= 6; ++n) {
    for (const auto& v : AllVectors(n)) {
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 2; j <= n; ++j) {
          auto up = v.raw();
          ++up.at(i, j);
          const bool can_up = AdmittedVector::TryValidate(up).has_value();
          ASSERT_EQ(CanIncrement(v, i, j), can_up);
          if (can_up) {
            EXPECT_EQ(Incremented(v, i, j).raw(), up);
          } else {
            EXPECT_THROW(Incremented(v, i, j), Error);
          }
          auto down = v.raw();
          --down.at(i, j);
          const bool can_down = AdmittedVector::TryValidate(down).has_value();
          ASSERT_EQ(CanDecrement(v, i, j), can_down);
          if (!can_down) EXPECT_THROW(Decremented(v, i, j), Error);
        }
      }
    }
  }
}

TEST(InversionSetTest, Examples) {
  EXPECT_EQ(WordFromInversionSet(5, {}).ToString(), "12345");
  InversionSet all;
  for (int i = 2; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) all.insert({i, j});
  const auto w = WordFromInversionSet(5, all);
  EXPECT_EQ(w.ToString(), "15432");
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      EXPECT_EQ(Gamma(w, i, j), all.count({i, j}) ? 1 : 0);
  const auto w4 = WordFromInversionSet(4, {{2, 3}});
  EXPECT_EQ(w4.ToString(), "1324");
  EXPECT_EQ(Gamma(w4, 2, 3), 1);
  // (1,2),(2,3) without (1,3) breaks transitivity.
  EXPECT_THROW(WordFromInversionSet(3, {{1, 2}, {2, 3}}), Error);
  // (1,3) alone breaks the complement condition.
  EXPECT_THROW(WordFromInversionSet(3, {{1, 3}}), Error);
}

TEST(InversionSetTest, RoundTripAllWordsOfSix) {
  std::vector<int> letters{1, 2, 3, 4, 5, 6};
  do {
    const PermWord w(letters);
    InversionSet set;
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j)
        if (Gamma(w, i, j)) set.insert({i, j});
    ASSERT_EQ(WordFromInversionSet(6, set), w);
  } while (std::next_permutation(letters.begin(), letters.end()));
}

TEST(LatticeTest, NonModularPair) {
  const auto u = ToVector(Cyc("(14235)"));
  const auto v = ToVector(Cyc("(13425)"));
  EXPECT_EQ(ToCycle(Join(u, v)), Cyc("(13542)"));
  EXPECT_EQ(ToCycle(Meet(u, v)), Cyc("(14253)"));
  EXPECT_EQ(u.Rank(), 4);
  EXPECT_EQ(v.Rank(), 4);
  EXPECT_EQ(Join(u, v).Rank(), 6);
  EXPECT_EQ(Meet(u, v).Rank(), 3);
}

TEST(LatticeTest, AxiomsUpToFive) {
  for (int n = 1; n <= 5; ++n) {
    const auto all = AllVectors(n);
    const auto zero = AdmittedVector::Zero(n);
    const auto max = AdmittedVector::Max(n);
    for (const auto& a : all) {
      EXPECT_EQ(Join(a, zero), a);
      EXPECT_EQ(Meet(a, max), a);
      EXPECT_EQ(Join(a, a), a);
      EXPECT_EQ(Meet(a, a), a);
      for (const auto& b : all) {
        const auto j = Join(a, b);
        const auto m = Meet(a, b);
        ASSERT_EQ(j, Join(b, a));
        ASSERT_EQ(m, Meet(b, a));
        ASSERT_TRUE(Leq(a, j) && Leq(b, j));
        ASSERT_TRUE(Leq(m, a) && Leq(m, b));
        ASSERT_EQ(Join(a, Meet(a, b)), a);
        ASSERT_EQ(Meet(a, Join(a, b)), a);
        // Least upper bound among all vectors.
        for (const auto& c : all) {
          if (Leq(a, c) && Leq(b, c)) ASSERT_TRUE(Leq(j, c));
          if (Leq(c, a) && Leq(c, b)) ASSERT_TRUE(Leq(c, m));
        }
      }
    }
    if (n == 4) {
      for (const auto& a : all)
        for (const auto& b : all)
          for (const auto& c : all) {
            ASSERT_EQ(Join(Join(a, b), c), Join(a, Join(b, c)));
            ASSERT_EQ(Meet(Meet(a, b), c), Meet(a, Meet(b, c)));
          }
    }
  }
}

TEST(LatticeTest, AssociativeOnRandomTriplesOfSix) {
  const auto all = AllVectors(6);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int t = 0; t < 3000; ++t) {
    const auto& a = all[pick(rng)];
    const auto& b = all[pick(rng)];
    const auto& c = all[pick(rng)];
    ASSERT_EQ(Join(Join(a, b), c), Join(a, Join(b, c)));
    ASSERT_EQ(Meet(Meet(a, b), c), Meet(a, Meet(b, c)));
  }
}

TEST(AntiAutomorphismTest, MatchPermutationSide) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(AntiInv(AdmittedVector::Zero(n)), AdmittedVector::Max(n));
    EXPECT_EQ(AntiConj(AdmittedVector::Zero(n)), AdmittedVector::Max(n));
    ForEachCircularPermutation(n, [&](const CircularPermutation& s) {
      const auto v = ToVector(s);
      ASSERT_EQ(AntiInv(v), ToVector(Invert(s)));
      ASSERT_EQ(AntiConj(v), ToVector(ConjugateW0(s)));
      ASSERT_EQ(AntiInv(AntiInv(v)), v);
      ASSERT_EQ(AntiConj(AntiConj(v)), v);
      ASSERT_EQ(AntiInv(AntiConj(v)), Mirror(v));
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          ASSERT_EQ(Mirror(v).at(i, j), v.at(n + 1 - j, n + 1 - i));
    });
  }
  const auto all = AllVectors(5);
  for (const auto& a : all)
    for (const auto& b : all) {
      ASSERT_EQ(Leq(a, b), Leq(AntiInv(b), AntiInv(a)));
      ASSERT_EQ(Leq(a, b), Leq(AntiConj(b), AntiConj(a)));
    }
}

TEST(DeltaSequenceTest, Examples) {
  for (int n = 1; n <= 7; ++n) {
    DeltaSequence zero(n);
    EXPECT_EQ(FromDeltaSequence(zero), AdmittedVector::Zero(n));
    DeltaSequence ones(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) ones.set(i, j, k, true);
    EXPECT_EQ(FromDeltaSequence(ones), AdmittedVector::Max(n));
  }
  DeltaSequence bad(4);
  bad.set(1, 2, 3, true);  // 1 + 0 != 0 + 0
  try {
    FromDeltaSequence(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPtolemyViolation);
  }
}

TEST(DeltaSequenceTest, RoundTripAndAnyIntermediate) {
  for (int n = 3; n <= 6; ++n) {
    for (const auto& v : AllVectors(n)) {
      const auto a = ToDeltaSequence(v);
      ASSERT_EQ(FromDeltaSequence(a), v);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
          for (int p = i + 1; p < j; ++p)
            ASSERT_EQ(v.at(i, j), v.at(i, p) + v.at(p, j) + a.at(i, p, j));
    }
  }
}

TEST(TriangulationTest, CatalanCounts) {
  const std::vector<std::size_t> catalan{1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 3; n <= 10; ++n) {
    const auto all = AllTriangulations(n);
    EXPECT_EQ(all.size(), catalan[n - 2]) << n;
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  }
}

TEST(TriangulationTest, Validation) {
  EXPECT_NO_THROW(Triangulation::Make(4, {{1, 2, 3}, {1, 3, 4}}));
  // Crossing diagonals 13 and 24.
  EXPECT_THROW(Triangulation::Make(4, {{1, 2, 3}, {1, 2, 4}}), Error);
  EXPECT_THROW(Triangulation::Make(4, {{1, 2, 3}}), Error);
  EXPECT_THROW(Triangulation::Make(5, {{1, 2, 3}, {1, 3, 4}, {1, 3, 5}}), Error);
  EXPECT_THROW(Triangulation::Make(6, {{1, 2, 4}, {2, 3, 4}, {1, 4, 6}, {1, 5, 6}}),
               Error);
  try {
    Triangulation::Make(5, {{1, 3, 5}, {2, 3, 4}, {1, 2, 3}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidTriangulation);
  }
  EXPECT_EQ(Triangulation::Fan(5).ToString(), "{123,134,145}");
}

TEST(TriangulationTest, SumExamples) {
  const auto max = AdmittedVector::Max(4);
  const auto t1 = Triangulation::Make(4, {{1, 2, 3}, {1, 3, 4}});
  const auto t2 = Triangulation::Make(4, {{1, 2, 4}, {2, 3, 4}});
  EXPECT_EQ(TriangulationSum(max, t1), 2);
  EXPECT_EQ(TriangulationSum(max, t2), 2);
  EXPECT_EQ(Mutate(t1, {1, 2, 3, 4}), t2);
  EXPECT_EQ(Mutate(Mutate(t1, {4, 3, 2, 1}), {1, 2, 3, 4}), t1);
  EXPECT_THROW(Mutate(Triangulation::Fan(5), {2, 3, 4, 5}), Error);
  EXPECT_THROW(TriangulationSum(AdmittedVector::Max(5), t1), Error);
}

TEST(TriangulationTest, SumEqualsCornerForAllVectorsOfFive) {
  const auto triangulations = AllTriangulations(5);
  for (const auto& v : AllVectors(5)) {
    for (const auto& t : triangulations) {
      ASSERT_EQ(TriangulationSum(v, t), v.at(1, 5));
      for (const auto& quad : FlippableQuads(t)) {
        ASSERT_EQ(TriangulationSum(v, Mutate(t, quad)), v.at(1, 5));
      }
    }
  }
}

TEST(TriangulationTest, FlipGraphOfHexagonIsConnected) {
  const auto all = AllTriangulations(6);
  std::set<Triangulation> seen{Triangulation::Fan(6)};
  std::deque<Triangulation> queue{Triangulation::Fan(6)};
  while (!queue.empty()) {
    const auto t = queue.front();
    queue.pop_front();
    for (const auto& quad : FlippableQuads(t)) {
      const auto next = Mutate(t, quad);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  EXPECT_EQ(seen.size(), 14u);
  EXPECT_EQ(std::set<Triangulation>(all.begin(), all.end()), seen);
}

}  // namespace
}  // namespace cyclat
