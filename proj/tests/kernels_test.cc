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

#include "cubefill/kernels.h"

#include <gtest/gtest.h>

#include <omp.h>

#include <map>

#include "cubefill/chain.h"

namespace cubefill {
namespace {

// Large enough to clear the parallel kernels' small-input cutoff.
std::vector<Face> BigSample(int n, int k, std::uint64_t seed) {
  return serial::SampleFaces(n, k, 0.5, seed);
}

class KernelsTest : public ::testing::TestWithParam<int> {
 protected:
  void SetUp() override {
    saved_ = omp_get_max_threads();
    omp_set_num_threads(GetParam());
  }
  void TearDown() override { omp_set_num_threads(saved_); }

 private:
  int saved_ = 1;
};

TEST_P(KernelsTest, SampleFacesAgree) {
  for (double density : {0.0, 0.01, 0.5, 1.0}) {
    ASSERT_EQ(serial::SampleFaces(10, 3, density, 5),
              parallel::SampleFaces(10, 3, density, 5));
  }
  EXPECT_EQ(serial::SampleFaces(10, 3, 1.0, 5).size(), FaceCount(10, 3));
}

TEST_P(KernelsTest, BoundarySupportAgrees) {
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto faces = BigSample(10, 3, seed);
    ASSERT_GT(faces.size(), 4096u);
    ASSERT_EQ(serial::BoundarySupport(faces), parallel::BoundarySupport(faces));
  }
  EXPECT_TRUE(parallel::BoundarySupport({}).empty());
}

TEST_P(KernelsTest, CensusAgrees) {
  const auto faces = BigSample(11, 4, 8);
  const SliceCensus a = serial::CensusSlices(faces, 11);
  EXPECT_EQ(a, parallel::CensusSlices(faces, 11));
  for (int i = 0; i < 11; ++i) {
    EXPECT_EQ(a.free[i] + a.zero[i] + a.one[i], faces.size());
  }
}

TEST_P(KernelsTest, BoundaryColumnsAgree) {
  EXPECT_EQ(serial::BoundaryColumns(9, 4), parallel::BoundaryColumns(9, 4));
  EXPECT_EQ(serial::BoundaryColumns(2, 1), parallel::BoundaryColumns(2, 1));
}

INSTANTIATE_TEST_SUITE_P(Threads, KernelsTest, ::testing::Values(1, 2, 4));

TEST(UnitDraw, RangeAndDeterminism) {
  double sum = 0;
  for (std::uint64_t i = 0; i < 100000; ++i) {
    const double u = UnitDraw(42, i);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    ASSERT_EQ(u, UnitDraw(42, i));
    sum += u;
  }
  EXPECT_NEAR(sum / 100000, 0.5, 0.01);
  EXPECT_NE(UnitDraw(1, 0), UnitDraw(2, 0));
}

TEST(ReduceParity, KeepsOddMultiplicities) {
  const Face a = ParseFace("0*");
  const Face b = ParseFace("1*");
  const Face c = ParseFace("*0");
  EXPECT_EQ(ReduceParity({b, a, b, c, a, a}), (std::vector<Face>{c, a}));
  EXPECT_TRUE(ReduceParity({a, a}).empty());
}

TEST(SymmetricDifference, SortedMerge) {
  const auto x = serial::SampleFaces(6, 2, 0.5, 1);
  const auto y = serial::SampleFaces(6, 2, 0.5, 2);
  std::map<Face, int> count;
  for (const Face& f : x) ++count[f];
  for (const Face& f : y) ++count[f];
  std::vector<Face> expected;
  for (const auto& [f, c] : count) {
    if (c == 1) expected.push_back(f);
  }
  EXPECT_EQ(SymmetricDifference(x, y), expected);
}

}  // namespace
}  // namespace cubefill
