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

// Data-parallel inner loops behind the chain and matrix operations.
//
// Every kernel exists twice: `serial::` is the straightforward reference and
// `parallel::` is the OpenMP version. Both must return identical results for
// identical inputs; kernels_test.cc holds them to that and the benchmark
// target compares their speed.

#ifndef CUBEFILL_KERNELS_H_
#define CUBEFILL_KERNELS_H_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "cubefill/face.h"

namespace cubefill {

enum class Execution { kSerial, kParallel };

// Per-coordinate face counts of a k-chain: how many support faces are free
// at coordinate i, and how many are fixed to 0 / 1 there. Index is 0-based.
struct SliceCensus {
  std::array<std::uint64_t, 64> free{};
  std::array<std::uint64_t, 64> zero{};
  std::array<std::uint64_t, 64> one{};

  friend bool operator==(const SliceCensus&, const SliceCensus&) = default;
};

// CSC layout of a GF(2) incidence matrix.
struct SparseColumns {
  std::vector<std::uint64_t> col_ptr;
  std::vector<std::uint64_t> row_idx;

  friend bool operator==(const SparseColumns&, const SparseColumns&) = default;
};

// Uniform double in [0, 1) derived from (seed, index) alone.
double UnitDraw(std::uint64_t seed, std::uint64_t index);

namespace serial {

// Mod-2 sum of the boundaries of `faces`, sorted.
std::vector<Face> BoundarySupport(std::span<const Face> faces);
SliceCensus CensusSlices(std::span<const Face> faces, int n);
// k-faces of Q_n whose rank r satisfies UnitDraw(seed, r) < density, sorted.
std::vector<Face> SampleFaces(int n, int k, double density,
                              std::uint64_t seed);
// Columns are k-face ranks, rows (k-1)-face ranks.
SparseColumns BoundaryColumns(int n, int k);

}  // namespace serial

namespace parallel {

std::vector<Face> BoundarySupport(std::span<const Face> faces);
SliceCensus CensusSlices(std::span<const Face> faces, int n);
std::vector<Face> SampleFaces(int n, int k, double density,
                              std::uint64_t seed);
SparseColumns BoundaryColumns(int n, int k);

}  // namespace parallel

// Mod-2 reduction of an unsorted face list into a sorted support.
std::vector<Face> ReduceParity(std::vector<Face> faces);

// Mod-2 sum of two sorted supports.
std::vector<Face> SymmetricDifference(std::span<const Face> a,
                                      std::span<const Face> b);

}  // namespace cubefill

#endif  // CUBEFILL_KERNELS_H_
