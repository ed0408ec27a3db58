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

#ifndef CUBEFILL_BOUNDARY_MATRIX_H_
#define CUBEFILL_BOUNDARY_MATRIX_H_

#include <cstdint>
#include <span>
#include <vector>

#include "cubefill/chain.h"
#include "cubefill/kernels.h"

namespace cubefill {

// Sparse GF(2) matrix of the boundary map C_k Q_n -> C_{k-1} Q_n. Column j
// is the k-face of rank j; its entries are the ranks of its 2k boundary
// faces.
class BoundaryMatrix {
 public:
  // Throws std::invalid_argument unless 1 <= k <= n.
  static BoundaryMatrix Build(int n, int k,
                              Execution exec = Execution::kParallel);

  int n() const { return n_; }
  int k() const { return k_; }
  std::uint64_t rows() const { return rows_; }
  std::uint64_t cols() const { return cols_; }
  std::span<const std::uint64_t> column(std::uint64_t j) const;
  const SparseColumns& storage() const { return columns_; }

  // Number of nonzeros in each row.
  std::vector<std::uint64_t> RowWeights() const;

  // Multiplies a GF(2) vector packed into 64-bit words (bit j of word j/64 is
  // entry j) and returns the packed result.
  std::vector<std::uint64_t> ApplyDense(
      std::span<const std::uint64_t> words) const;

  // Boundary of a k-chain through the dense route.
  Chain Apply(const Chain& chain) const;

 private:
  BoundaryMatrix() = default;

  int n_ = 0;
  int k_ = 0;
  std::uint64_t rows_ = 0;
  std::uint64_t cols_ = 0;
  SparseColumns columns_;
};

// Column lists of lower * upper over GF(2), where lower maps degree k to
// k-1 and upper maps degree k+1 to k.
std::vector<std::vector<std::uint64_t>> Multiply(const BoundaryMatrix& lower,
                                                 const BoundaryMatrix& upper);

}  // namespace cubefill

#endif  // CUBEFILL_BOUNDARY_MATRIX_H_
