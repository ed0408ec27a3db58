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

#include "cubefill/minimizers.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cubefill/bits.h"
#include "cubefill/filling.h"

namespace cubefill {
namespace {

void CheckMinimizerRange(int n, int k) {
  if (k < 1 || k >= n || n > bits::kMaxDimension) {
    throw std::invalid_argument("minimizer needs 1 <= k < n <= 64, got n=" +
                                std::to_string(n) + " k=" + std::to_string(k));
  }
}

BigInt BigBinomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc *= n - k + i;
    acc /= i;
  }
  return acc;
}

// z^0_m: the two constant vertices. Only the slicing check needs it.
Chain VertexMinimizer(int m) {
  return ChainBuilder::FromSortedUnique(
      m, 0, {Face::Unchecked(m, 0, 0), Face::Unchecked(m, 0, bits::LowMask(m))});
}

// z^k_n extended by z^k_k = 0, the value the slicing recursion produces.
Chain MinimizerOrZero(int n, int k) {
  if (k == 0) return VertexMinimizer(n);
  if (k == n) return Chain(n, k);
  return MinimizerCycle(n, k);
}

}  // namespace

Face MinimizerFace(int n, std::uint64_t free_mask, int parity_seed) {
  std::uint64_t fixed = 0;
  int block = 0;
  for (int i = 0; i < n; ++i) {
    if ((free_mask >> i) & 1) {
      ++block;
    } else if (((parity_seed ^ block) & 1) != 0) {
      fixed |= bits::Bit(i);
    }
  }
  return Face(n, free_mask, fixed);
}

Chain MinimizerCycle(int n, int k) {
  CheckMinimizerRange(n, k);
  std::vector<Face> faces;
  faces.reserve(2 * Binomial(n, k));
  const std::uint64_t last = bits::LowMask(n) & ~bits::LowMask(n - k);
  for (std::uint64_t subset = bits::LowMask(k);;) {
    faces.push_back(MinimizerFace(n, subset, 0));
    faces.push_back(MinimizerFace(n, subset, 1));
    if (subset == last) break;
    const std::uint64_t lowest = subset & (~subset + 1);
    const std::uint64_t ripple = subset + lowest;
    subset = (((ripple ^ subset) >> 2) / lowest) | ripple;
  }
  std::sort(faces.begin(), faces.end());
  return ChainBuilder::FromSortedUnique(n, k, std::move(faces));
}

BigInt MinimizerNorm(int n, int k) {
  CheckMinimizerRange(n, k);
  return 2 * BigBinomial(n, k);
}

BigInt MinimizerFillValue(int n, int k) {
  CheckMinimizerRange(n, k);
  return BigBinomial(n, k + 1);
}

MinimizerReport VerifyMinimizer(int n, int k, std::int64_t oracle_budget) {
  if (n > 12) throw std::out_of_range("minimizer verification needs n <= 12");
  CheckMinimizerRange(n, k);
  MinimizerReport report;
  report.n = n;
  report.k = k;
  const Chain z = MinimizerCycle(n, k);
  report.is_cycle = IsCycle(z);
  report.norm_matches = BigInt(z.norm()) == MinimizerNorm(n, k);

  const SliceDecomposition parts = Slice(z, 1, 1);
  report.slicing_matches =
      parts.z_plus + parts.z_minus == MinimizerOrZero(n - 1, k) &&
      parts.z_zero == MinimizerOrZero(n - 1, k - 1);

  const std::uint64_t expected = Binomial(n, k + 1);
  report.linear_fill = LinearFill(z).filling.norm();
  report.linear_matches = report.linear_fill == expected;

  if (n <= 5) {
    const FillResult exact = ExactFill(z, oracle_budget);
    report.oracle_nodes = exact.nodes_explored;
    if (exact.optimal) {
      report.oracle_fill = exact.filling.norm();
      report.oracle_matches = *report.oracle_fill == expected;
    }
  }
  return report;
}

double SharpnessAsymptote(int k) {
  if (k < 1) throw std::invalid_argument("sharpness needs k >= 1");
  return std::pow(std::tgamma(k + 1.0), 1.0 / k) /
         (std::pow(2.0, (k + 1.0) / k) * (k + 1.0));
}

std::vector<SharpnessRow> SharpnessTable(int k, int n_max, int n_min) {
  const double asymptote = SharpnessAsymptote(k);
  std::vector<SharpnessRow> rows;
  for (int n = std::max(k + 1, n_min); n <= n_max; ++n) {
    SharpnessRow row;
    row.n = n;
    row.norm = 2 * BigBinomial(n, k);
    row.fill = BigBinomial(n, k + 1);
    row.ratio = row.fill.convert_to<double>() /
                std::pow(row.norm.convert_to<double>(), (k + 1.0) / k);
    row.asymptote = asymptote;
    row.quotient = row.ratio / asymptote;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cubefill
