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

#include <omp.h>

#include <algorithm>
#include <cstdint>

#include "cubefill/bits.h"
#include "cubefill/kernels.h"

namespace cubefill::parallel {
namespace {

// Below this many input faces the thread team costs more than it saves.
constexpr std::size_t kMinParallelFaces = 2048;

}  // namespace

std::vector<Face> BoundarySupport(std::span<const Face> faces) {
  if (faces.size() < kMinParallelFaces) return serial::BoundarySupport(faces);

  std::vector<std::vector<Face>> partial(omp_get_max_threads());
#pragma omp parallel
  {
    std::vector<Face> local;
    const auto count = static_cast<std::int64_t>(faces.size());
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < count; ++i) {
      for (const Face& g : BoundaryOfFace(faces[i])) local.push_back(g);
    }
    partial[omp_get_thread_num()] = ReduceParity(std::move(local));
  }

  // Pairwise tree merge; each round halves the number of lists.
  for (std::size_t stride = 1; stride < partial.size(); stride *= 2) {
    const auto lists = static_cast<std::int64_t>(partial.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < lists; i += 2 * stride) {
      const std::size_t j = i + stride;
      if (j < partial.size()) {
        partial[i] = SymmetricDifference(partial[i], partial[j]);
        partial[j].clear();
      }
    }
  }
  return std::move(partial.front());
}

SliceCensus CensusSlices(std::span<const Face> faces, int n) {
  if (faces.size() < kMinParallelFaces) return serial::CensusSlices(faces, n);

  std::uint64_t free_count[64] = {};
  std::uint64_t one_count[64] = {};
  std::uint64_t total_count = 0;
  const auto count = static_cast<std::int64_t>(faces.size());
#pragma omp parallel for schedule(static) \
    reduction(+ : free_count[:64], one_count[:64], total_count)
  for (std::int64_t i = 0; i < count; ++i) {
    const Face& f = faces[i];
    ++total_count;
    for (int b = 0; b < n; ++b) {
      free_count[b] += (f.free_mask() >> b) & 1;
      one_count[b] += (f.fixed_bits() >> b) & 1;
    }
  }
  SliceCensus census;
  for (int b = 0; b < n; ++b) {
    census.free[b] = free_count[b];
    census.one[b] = one_count[b];
    census.zero[b] = total_count - free_count[b] - one_count[b];
  }
  return census;
}

std::vector<Face> SampleFaces(int n, int k, double density,
                              std::uint64_t seed) {
  const std::uint64_t total = FaceCount(n, k);
  if (total < kMinParallelFaces) return serial::SampleFaces(n, k, density, seed);

  std::vector<std::vector<Face>> partial(omp_get_max_threads());
  const auto count = static_cast<std::int64_t>(total);
#pragma omp parallel
  {
    std::vector<Face> local;
    // Static schedule hands out contiguous ascending chunks in thread order,
    // so concatenating by thread id keeps rank order.
#pragma omp for schedule(static)
    for (std::int64_t r = 0; r < count; ++r) {
      const auto index = static_cast<std::uint64_t>(r);
      if (UnitDraw(seed, index) < density) {
        local.push_back(UnrankFace(FaceRank{n, k, index}));
      }
    }
    partial[omp_get_thread_num()] = std::move(local);
  }
  std::vector<Face> out;
  for (auto& part : partial) out.insert(out.end(), part.begin(), part.end());
  return out;
}

SparseColumns BoundaryColumns(int n, int k) {
  const std::uint64_t total = FaceCount(n, k);
  if (total < kMinParallelFaces) return serial::BoundaryColumns(n, k);

  const auto width = static_cast<std::uint64_t>(2 * k);
  SparseColumns m;
  m.col_ptr.resize(total + 1);
  m.row_idx.resize(total * width);
  const auto count = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < count; ++j) {
    const auto col = static_cast<std::uint64_t>(j);
    m.col_ptr[col] = col * width;
    const Face f = UnrankFace(FaceRank{n, k, col});
    std::uint64_t at = col * width;
    for (const Face& g : BoundaryOfFace(f)) m.row_idx[at++] = RankFace(g).index;
  }
  m.col_ptr[total] = total * width;
  return m;
}

}  // namespace cubefill::parallel
