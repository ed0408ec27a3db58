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

// The alternating-block cycles z^k_n: for every choice of k free coordinates
// and a parity bit p, the face whose determined coordinates between the j-th
// and (j+1)-th star all equal p XOR (j mod 2). Runs before the first star are
// block 0; empty runs still count as blocks.
//
// ||z^k_n|| = 2 C(n, k) and Fill(z^k_n) = C(n, k+1), which makes the linear
// filling bound an equality and shows the exponent (k+1)/k cannot be
// lowered.

#ifndef CUBEFILL_MINIMIZERS_H_
#define CUBEFILL_MINIMIZERS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cubefill/chain.h"

namespace cubefill {

using BigInt = boost::multiprecision::cpp_int;

struct MinimizerSpec {
  int n = 0;
  int k = 0;
  int parity_seed = 0;  // value of block 0
};

// The face of z^k_n with the given star set and parity seed.
Face MinimizerFace(int n, std::uint64_t free_mask, int parity_seed);

// Throws std::invalid_argument unless 1 <= k < n <= 64.
Chain MinimizerCycle(int n, int k);

// 2 C(n, k) and C(n, k+1). Throw std::invalid_argument unless 1 <= k < n.
BigInt MinimizerNorm(int n, int k);
BigInt MinimizerFillValue(int n, int k);

struct MinimizerReport {
  int n = 0;
  int k = 0;
  bool is_cycle = false;
  bool norm_matches = false;           // ||z|| = 2 C(n, k)
  bool slicing_matches = false;        // z+ + z- = z^k_{n-1}, z0 = z^{k-1}_{n-1}
  std::optional<bool> oracle_matches;  // exact Fill = C(n, k+1); unset if skipped
  std::optional<std::uint64_t> oracle_fill;
  std::int64_t oracle_nodes = 0;
  std::uint64_t linear_fill = 0;
  bool linear_matches = false;  // linear fill norm = C(n, k+1)

  bool ok() const {
    return is_cycle && norm_matches && slicing_matches && linear_matches &&
           oracle_matches.value_or(true);
  }
};

// Structural checks for n <= 12; the exact oracle runs when n <= 5 and
// finishes within `oracle_budget` nodes. Throws std::out_of_range beyond
// n = 12 and std::invalid_argument unless 1 <= k < n.
MinimizerReport VerifyMinimizer(int n, int k,
                                std::int64_t oracle_budget = 2'000'000);

struct SharpnessRow {
  int n = 0;
  BigInt norm;
  BigInt fill;
  double ratio = 0;      // fill / norm^{(k+1)/k}
  double asymptote = 0;  // (k!)^{1/k} / (2^{(k+1)/k} (k+1))
  double quotient = 0;   // ratio / asymptote
};

// (k!)^{1/k} / (2^{(k+1)/k} (k+1)).
double SharpnessAsymptote(int k);

// Rows for n = max(k+1, n_min) .. n_max, from the closed forms only.
std::vector<SharpnessRow> SharpnessTable(int k, int n_max, int n_min = 0);

}  // namespace cubefill

#endif  // CUBEFILL_MINIMIZERS_H_
