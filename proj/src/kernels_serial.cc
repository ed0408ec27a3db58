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

#include <algorithm>
#include <bit>
#include <iterator>

#include "cubefill/bits.h"
#include "cubefill/kernels.h"

namespace cubefill {

double UnitDraw(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over a Weyl step.
  std::uint64_t x = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

std::vector<Face> ReduceParity(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end());
  std::vector<Face> out;
  out.reserve(faces.size());
  for (std::size_t i = 0; i < faces.size();) {
    std::size_t j = i + 1;
    while (j < faces.size() && faces[j] == faces[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(faces[i]);
    i = j;
  }
  return out;
}

std::vector<Face> SymmetricDifference(std::span<const Face> a,
                                      std::span<const Face> b) {
  std::vector<Face> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}

namespace serial {

std::vector<Face> BoundarySupport(std::span<const Face> faces) {
  std::vector<Face> all;
  for (const Face& f : faces) {
    std::vector<Face> b = BoundaryOfFace(f);
    all.insert(all.end(), b.begin(), b.end());
  }
  return ReduceParity(std::move(all));
}

SliceCensus CensusSlices(std::span<const Face> faces, int n) {
  SliceCensus census;
  for (const Face& f : faces) {
    for (int i = 0; i < n; ++i) {
      if (f.is_free(i)) {
        ++census.free[i];
      } else if (f.value(i) != 0) {
        ++census.one[i];
      } else {
        ++census.zero[i];
      }
    }
  }
  return census;
}

std::vector<Face> SampleFaces(int n, int k, double density,
                              std::uint64_t seed) {
  std::vector<Face> all = EnumerateFaces(n, k);
  std::vector<Face> out;
  for (std::uint64_t r = 0; r < all.size(); ++r) {
    if (UnitDraw(seed, r) < density) out.push_back(all[r]);
  }
  return out;
}

SparseColumns BoundaryColumns(int n, int k) {
  SparseColumns m;
  const std::vector<Face> cols = EnumerateFaces(n, k);
  m.col_ptr.reserve(cols.size() + 1);
  m.col_ptr.push_back(0);
  for (const Face& f : cols) {
    for (const Face& g : BoundaryOfFace(f)) {
      m.row_idx.push_back(RankFace(g).index);
    }
    m.col_ptr.push_back(m.row_idx.size());
  }
  return m;
}

}  // namespace serial
}  // namespace cubefill
