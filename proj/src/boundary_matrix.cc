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

#include "cubefill/boundary_matrix.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace cubefill {

BoundaryMatrix BoundaryMatrix::Build(int n, int k, Execution exec) {
  if (k < 1 || k > n) {
    throw std::invalid_argument("boundary matrix needs 1 <= k <= n, got n=" +
                                std::to_string(n) + " k=" + std::to_string(k));
  }
  BoundaryMatrix m;
  m.n_ = n;
  m.k_ = k;
  m.rows_ = FaceCount(n, k - 1);
  m.cols_ = FaceCount(n, k);
  m.columns_ = exec == Execution::kParallel ? parallel::BoundaryColumns(n, k)
                                            : serial::BoundaryColumns(n, k);
  return m;
}

std::span<const std::uint64_t> BoundaryMatrix::column(std::uint64_t j) const {
  if (j >= cols_) throw std::out_of_range("column index out of range");
  const auto begin = columns_.col_ptr[j];
  const auto end = columns_.col_ptr[j + 1];
  return std::span<const std::uint64_t>(columns_.row_idx).subspan(begin,
                                                                  end - begin);
}

std::vector<std::uint64_t> BoundaryMatrix::RowWeights() const {
  std::vector<std::uint64_t> weights(rows_, 0);
  for (std::uint64_t r : columns_.row_idx) ++weights[r];
  return weights;
}

std::vector<std::uint64_t> BoundaryMatrix::ApplyDense(
    std::span<const std::uint64_t> words) const {
  if (words.size() != (cols_ + 63) / 64) {
    throw std::invalid_argument("dense vector length does not match columns");
  }
  std::vector<std::uint64_t> out((rows_ + 63) / 64, 0);
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t word = words[w];
    while (word != 0) {
      const std::uint64_t j = w * 64 + std::countr_zero(word);
      word &= word - 1;
      for (std::uint64_t r : column(j)) out[r / 64] ^= std::uint64_t{1} << (r % 64);
    }
  }
  return out;
}

Chain BoundaryMatrix::Apply(const Chain& chain) const {
  if (chain.n() != n_ || chain.k() != k_) {
    throw std::invalid_argument("chain degree does not match matrix");
  }
  std::vector<std::uint64_t> words((cols_ + 63) / 64, 0);
  for (const Face& f : chain.faces()) {
    const std::uint64_t j = RankFace(f).index;
    words[j / 64] |= std::uint64_t{1} << (j % 64);
  }
  const std::vector<std::uint64_t> image = ApplyDense(words);
  std::vector<Face> faces;
  for (std::size_t w = 0; w < image.size(); ++w) {
    std::uint64_t word = image[w];
    while (word != 0) {
      const std::uint64_t r = w * 64 + std::countr_zero(word);
      word &= word - 1;
      faces.push_back(UnrankFace(FaceRank{n_, k_ - 1, r}));
    }
  }
  // Ascending ranks are ascending faces.
  return ChainBuilder::FromSortedUnique(n_, k_ - 1, std::move(faces));
}

std::vector<std::vector<std::uint64_t>> Multiply(const BoundaryMatrix& lower,
                                                 const BoundaryMatrix& upper) {
  if (lower.n() != upper.n() || lower.k() + 1 != upper.k()) {
    throw std::invalid_argument("matrices are not consecutive boundary maps");
  }
  std::vector<std::vector<std::uint64_t>> product(upper.cols());
  std::vector<std::uint64_t> acc((lower.rows() + 63) / 64);
  for (std::uint64_t j = 0; j < upper.cols(); ++j) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::uint64_t mid : upper.column(j)) {
      for (std::uint64_t r : lower.column(mid)) {
        acc[r / 64] ^= std::uint64_t{1} << (r % 64);
      }
    }
    for (std::size_t w = 0; w < acc.size(); ++w) {
      std::uint64_t word = acc[w];
      while (word != 0) {
        product[j].push_back(w * 64 + std::countr_zero(word));
        word &= word - 1;
      }
    }
  }
  return product;
}

}  // namespace cubefill
