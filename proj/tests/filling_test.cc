// Copyright 2026 The cubefill Authors
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

#include "cubefill/filling.h"

#include <gtest/gtest.h>

#include <bit>
#include <cmath>

#include "cubefill/constants.h"
#include "cubefill/minimizers.h"
#include "oracle.h"

namespace cubefill {
namespace {

Chain Hexagon() {
  return Chain::FromWords(3, 1, {"*00", "*11", "0*1", "1*0", "00*", "11*"});
}

Chain SquareBoundary() { return Chain::FromWords(2, 1, {"0*", "1*", "*0", "*1"}); }

struct Case {
  int n;
  int k;
  std::uint64_t seed;
  double density;
};

// Seeded cycles with 1 <= k <= k_max, k+2 <= n <= n_max.
std::vector<Case> CycleCorpus(int count, int n_max, int k_max, std::uint64_t salt) {
  std::vector<Case> out;
  for (int i = 0; i < count; ++i) {
    const int k = 1 + static_cast<int>(UnitDraw(salt, 3 * i) * k_max);
    const int n = k + 2 + static_cast<int>(UnitDraw(salt, 3 * i + 1) * (n_max - k - 1));
    const double density = 0.02 + 0.2 * UnitDraw(salt, 3 * i + 2);
    out.push_back({n, k, salt * 10000 + i, density});
  }
  return out;
}

void ExpectFills(const Chain& z, const FillResult& r) {
  ASSERT_EQ(r.filling.n(), z.n());
  ASSERT_EQ(r.filling.k(), z.k() + 1);
  ASSERT_EQ(Boundary(r.filling), z);
}

TEST(LinearFill, Examples) {
  const FillResult sq = LinearFill(SquareBoundary());
  ExpectFills(SquareBoundary(), sq);
  EXPECT_EQ(oracle::ToWords(sq.filling), oracle::WordSet{"**"});
  EXPECT_EQ(*sq.linear_bound, Rational(1));

  const FillResult empty = LinearFill(Chain(5, 2));
  EXPECT_TRUE(empty.filling.empty());
  EXPECT_EQ(empty.filling.k(), 3);

  const FillResult hex = LinearFill(Hexagon());
  ExpectFills(Hexagon(), hex);
  EXPECT_EQ(hex.filling.norm(), 3u);
  EXPECT_EQ(*hex.linear_bound, Rational(3));
  EXPECT_EQ(hex.bound_certificate, 3.0);
  EXPECT_EQ(hex.strategy, Strategy::kLinear);
  EXPECT_FALSE(hex.optimal);

  const Chain z26 = MinimizerCycle(6, 2);
  EXPECT_EQ(LinearFill(z26).filling.norm(), 20u);
}

TEST(LinearFill, BoundOnRandomCycles) {
  for (const Case& c : CycleCorpus(200, 9, 3, 1)) {
    const Chain z = RandomCycle(c.n, c.k, c.density, c.seed);
    const FillResult r = LinearFill(z);
    ExpectFills(z, r);
    ASSERT_LE(Rational(static_cast<std::int64_t>(r.filling.norm())),
              FillBoundLinear(c.n, c.k, z.norm()));
  }
}

TEST(LinearFill, ZeroCyclesArePairedByPaths) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 1 + static_cast<int>(seed % 6);
    Chain z = RandomChain(n, 0, 0.4, seed);
    if (z.norm() % 2 == 1) z += Chain::FromFaces(n, 0, {z.faces().front()});
    const FillResult r = LinearFill(z);
    ExpectFills(z, r);
  }
  const Chain pair = Chain::FromWords(3, 0, {"000", "111"});
  EXPECT_EQ(LinearFill(pair).filling.norm(), 3u);
}

TEST(LinearFill, RejectsNonCyclesAndBadDegrees) {
  try {
    LinearFill(Chain::FromWords(3, 1, {"*00"}));
    FAIL();
  } catch (const NotACycleError& e) {
    EXPECT_EQ(oracle::ToWords(e.boundary()), (oracle::WordSet{"000", "100"}));
  }
  EXPECT_THROW(LinearFill(Chain::FromWords(2, 0, {"01"})), NotACycleError);
  EXPECT_THROW(LinearFill(Chain(2, 2)), std::invalid_argument);
  EXPECT_THROW(RecursiveFill(Chain(3, 0)), std::invalid_argument);
}

TEST(FillBounds, Examples) {
  EXPECT_EQ(FillBoundLinear(6, 2, 30), Rational(20));
  for (int k = 0; k <= 6; ++k) {
    EXPECT_EQ(FillBoundLinear(k + 1, k, 2 * (k + 1)), Rational(1));
  }
  EXPECT_EQ(FillBoundLinear(4, 1, 3), Rational(9, 4));
  EXPECT_NEAR(FillBoundPower(1, 6), 36 * (1 + std::sqrt(2.0)), 1e-12);
  EXPECT_NEAR(FillBoundPower(1, 6), 86.91, 5e-3);
  EXPECT_THROW(FillBoundPower(0, 6), std::invalid_argument);
}

TEST(RecursiveFill, SingleCellBoundary) {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k + 1 <= n; ++k) {
      const Face cell = UnrankFace({n, k + 1, FaceCount(n, k + 1) / 2});
      const Chain y = Chain::FromFaces(n, k + 1, {cell});
      const Chain z = Boundary(y);
      const FillResult r = RecursiveFill(z);
      EXPECT_EQ(r.filling, y);
      EXPECT_LE(1.0, FillBoundPower(k, 2 * (k + 1)));
    }
  }
}

TEST(RecursiveFill, Hexagon) {
  const FillResult r = RecursiveFill(Hexagon());
  ExpectFills(Hexagon(), r);
  EXPECT_NEAR(r.bound_certificate, FillingConstant(1) * 36, 1e-12);
  EXPECT_TRUE(WithinBound(static_cast<double>(r.filling.norm()), r.bound_certificate));
  EXPECT_EQ(r.filling.norm(), 3u);
}

TEST(RecursiveFill, BoundAndDepthOnRandomCycles) {
  for (const Case& c : CycleCorpus(200, 9, 3, 2)) {
    const Chain z = RandomCycle(c.n, c.k, c.density, c.seed);
    const FillResult r = RecursiveFill(z);
    ExpectFills(z, r);
    ASSERT_TRUE(WithinBound(static_cast<double>(r.filling.norm()),
                            FillBoundPower(c.k, z.norm())));
    ASSERT_LE(r.trace.max_depth, c.n + c.k);
  }
}

TEST(RecursiveFill, ReachesEveryCase) {
  RecursionTrace total;
  for (const Case& c : CycleCorpus(300, 10, 4, 3)) {
    const FillResult r = RecursiveFill(RandomCycle(c.n, c.k, c.density, c.seed));
    total.case1 += r.trace.case1;
    total.case2 += r.trace.case2;
    total.case3 += r.trace.case3;
    total.subcube_shrink += r.trace.subcube_shrink;
    total.components += r.trace.components;
  }
  EXPECT_GT(total.case1, 0);
  EXPECT_GT(total.case2, 0);
  EXPECT_GT(total.case3, 0);
  EXPECT_GT(total.subcube_shrink, 0);
  EXPECT_GT(total.components, 0);
}

TEST(RecursiveFill, CaseThreeCounting) {
  int seen = 0;
  for (const Case& c : CycleCorpus(300, 9, 4, 4)) {
    if (c.k < 2) continue;
    const Chain z = RandomCycle(c.n, c.k, c.density, c.seed);
    const SubcubeRestriction sub = SupportSubcube(z);
    const Chain& w = sub.restricted;
    if (w.empty() || w.n() == w.k() + 1) continue;
    const RecursiveStep step = PlanRecursiveStep(w);
    if (step.which != FillCase::kCase3) continue;
    ++seen;
    std::uint64_t crossing = 0;
    for (int i = 0; i < w.n(); ++i) crossing += step.census.free[i];
    ASSERT_EQ(crossing, static_cast<std::uint64_t>(w.k()) * w.norm());
    const double eps = ConstantsFor(w.k()).epsilon;
    ASSERT_GE(std::pow(static_cast<double>(w.norm()), 1.0 / w.k()) * (1 + 1e-12),
              w.n() * eps / w.k());
  }
  EXPECT_GT(seen, 0);
}

TEST(PlanRecursiveStep, ScanOrder) {
  const Chain z = MinimizerCycle(6, 2);
  const RecursiveStep step = PlanRecursiveStep(z);
  const ConstantSet s = ConstantsFor(2);
  EXPECT_NEAR(step.threshold, s.epsilon * std::sqrt(30.0), 1e-12);
  if (step.which != FillCase::kCase3) {
    // No qualifying coordinate has a strictly smaller crossing part.
    for (int i = 0; i < 6; ++i) {
      if (step.census.free[i] < step.threshold) {
        EXPECT_GE(step.census.free[i], step.zero_norm);
      }
    }
  }
  EXPECT_THROW(PlanRecursiveStep(Hexagon()), std::invalid_argument);
}

TEST(ExactFill, Examples) {
  const Chain cell = Boundary(Chain::FromWords(4, 3, {"*1**"}));
  const FillResult one = ExactFill(cell, 1000);
  EXPECT_TRUE(one.optimal);
  EXPECT_EQ(one.filling.norm(), 1u);
  ExpectFills(cell, one);

  const struct {
    int n, k;
    std::size_t fill;
  } cases[] = {{3, 1, 3}, {4, 2, 4}, {4, 1, 6}};
  for (const auto& c : cases) {
    const Chain z = MinimizerCycle(c.n, c.k);
    const FillResult r = ExactFill(z, 2'000'000);
    EXPECT_TRUE(r.optimal) << c.n << " " << c.k;
    EXPECT_EQ(r.filling.norm(), c.fill);
    EXPECT_EQ(r.strategy, Strategy::kExact);
    ExpectFills(z, r);
  }
  EXPECT_THROW(ExactFill(Hexagon(), 0), std::invalid_argument);
  EXPECT_THROW(ExactFill(Chain::FromWords(3, 1, {"*00"}), 10), NotACycleError);
}

TEST(ExactFill, EmptyCycle) {
  const FillResult r = ExactFill(Chain(4, 1), 1);
  EXPECT_TRUE(r.optimal);
  EXPECT_TRUE(r.filling.empty());
}

TEST(ExactFill, ExhaustedBudgetKeepsAValidFilling) {
  const Chain z = MinimizerCycle(5, 2);
  const FillResult r = ExactFill(z, 5);
  EXPECT_FALSE(r.optimal);
  EXPECT_LE(r.nodes_explored, 5);
  ExpectFills(z, r);
}

TEST(ExactFill, AgreesWithBruteForce) {
  int checked = 0;
  for (int n = 2; n <= 4; ++n) {
    for (int k = 0; k <= 2 && k + 1 <= n; ++k) {
      if (oracle::AllWords(n, k + 1).size() > 26) continue;
      for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const Chain z = RandomCycle(n, k, 0.15 + 0.05 * (seed % 6), seed);
        const std::optional<int> truth = oracle::BruteForceFill(n, k, oracle::ToWords(z));
        ASSERT_TRUE(truth.has_value());
        const FillResult r = ExactFill(z, 10'000'000);
        ASSERT_TRUE(r.optimal);
        ASSERT_EQ(static_cast<int>(r.filling.norm()), *truth) << n << " " << k;
        ExpectFills(z, r);
        ++checked;
      }
    }
  }
  // The hexagon and the square boundary in Q_4 as well.
  EXPECT_EQ(oracle::BruteForceFill(3, 1, oracle::ToWords(Hexagon())), 3);
  EXPECT_EQ(oracle::BruteForceFill(4, 1, oracle::ToWords(MinimizerCycle(4, 1))), 6);
  EXPECT_EQ(oracle::BruteForceFill(4, 2, oracle::ToWords(MinimizerCycle(4, 2))), 4);
  EXPECT_GE(checked, 70);
}

TEST(ExactFill, DominatesConstructiveFills) {
  for (const Case& c : CycleCorpus(60, 6, 2, 5)) {
    const Chain z = RandomCycle(c.n, c.k, c.density * 0.5, c.seed);
    if (z.norm() > 40) continue;
    const FillResult exact = ExactFill(z, 200'000);
    if (!exact.optimal) continue;
    EXPECT_LE(exact.filling.norm(), LinearFill(z).filling.norm());
    EXPECT_LE(exact.filling.norm(), RecursiveFill(z).filling.norm());
  }
}

TEST(ExactFill, ParallelMatchesSerial) {
  for (const Case& c : CycleCorpus(40, 6, 2, 6)) {
    const Chain z = RandomCycle(c.n, c.k, c.density * 0.5, c.seed);
    if (z.norm() > 40) continue;
    const FillResult s = ExactFill(z, 100'000, Execution::kSerial);
    const FillResult p = ExactFill(z, 100'000, Execution::kParallel);
    ExpectFills(z, p);
    if (s.optimal && p.optimal) {
      EXPECT_EQ(s.filling.norm(), p.filling.norm());
    }
    const FillResult again = ExactFill(z, 100'000, Execution::kParallel);
    EXPECT_EQ(p.filling, again.filling);
    EXPECT_EQ(p.optimal, again.optimal);
  }
}

TEST(ConnectedComponents, Examples) {
  const Chain two = Chain::FromWords(4, 1, {"0*00", "1*00", "*000", "*100", "0*11",
                                           "1*11", "*011", "*111"});
  const auto parts = ConnectedComponents(two);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].norm(), 4u);
  EXPECT_EQ(parts[1].norm(), 4u);
  EXPECT_EQ(parts[0] + parts[1], two);
  EXPECT_EQ(ConnectedComponents(Hexagon()).size(), 1u);
  EXPECT_TRUE(ConnectedComponents(Chain(3, 1)).empty());
  EXPECT_EQ(ConnectedComponents(Chain::FromWords(2, 0, {"00", "11"})).size(), 2u);
}

TEST(ConnectedComponents, PartitionRandomChains) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Chain z = RandomCycle(7, 1 + seed % 3, 0.05, seed);
    Chain sum(z.n(), z.k());
    std::size_t total = 0;
    for (const Chain& c : ConnectedComponents(z)) {
      sum += c;
      total += c.norm();
      EXPECT_TRUE(IsCycle(c));
    }
    EXPECT_EQ(sum, z);
    EXPECT_EQ(total, z.norm());
  }
}

TEST(SupportSubcube, Examples) {
  const SubcubeRestriction edge = SupportSubcube(Chain::FromWords(3, 1, {"*00"}));
  EXPECT_EQ(edge.active_mask, 0b001u);
  EXPECT_EQ(oracle::ToWords(edge.restricted), oracle::WordSet{"*"});
  EXPECT_EQ(Embed(edge.restricted, edge), Chain::FromWords(3, 1, {"*00"}));

  const SubcubeRestriction shifted = SupportSubcube(Chain::FromWords(3, 1, {"1*1"}));
  EXPECT_EQ(shifted.inactive_values, 0b101u);
  EXPECT_EQ(Embed(shifted.restricted, shifted), Chain::FromWords(3, 1, {"1*1"}));

  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) {
      EXPECT_EQ(std::popcount(SupportSubcube(MinimizerCycle(n, k)).active_mask), n);
    }
  }
}

TEST(SupportSubcube, ConnectedOneCyclesSpanAtMostHalfTheirNorm) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Chain z = RandomCycle(3 + seed % 6, 1, 0.03 + 0.01 * (seed % 5), seed);
    for (const Chain& c : ConnectedComponents(z)) {
      const SubcubeRestriction sub = SupportSubcube(c);
      ASSERT_LE(2 * static_cast<std::size_t>(std::popcount(sub.active_mask)), c.norm());
      ASSERT_EQ(Embed(sub.restricted, sub), c);
      ++checked;
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(Strategy, Names) {
  for (Strategy s : {Strategy::kLinear, Strategy::kRecursive, Strategy::kExact}) {
    EXPECT_EQ(ParseStrategy(StrategyName(s)), s);
  }
  EXPECT_THROW(ParseStrategy("greedy"), std::invalid_argument);
}

}  // namespace
}  // namespace cubefill
