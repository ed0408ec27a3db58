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

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include "cubefill/bits.h"
#include "cubefill/constants.h"
#include "fill_engines.h"

namespace cubefill {
namespace {

std::string DescribeBoundary(const Chain& boundary) {
  std::ostringstream os;
  os << "chain is not a cycle; boundary has " << boundary.norm()
     << " faces:";
  std::size_t shown = 0;
  for (const Face& f : boundary.faces()) {
    if (shown++ == 8) {
      os << " ...";
      break;
    }
    os << ' ' << f;
  }
  return os.str();
}

Chain TopCellChain(int n) {
  return ChainBuilder::FromSortedUnique(n, n, {TopCell(n)});
}

// Pairs consecutive vertices and joins each pair by the monotone path that
// flips the differing coordinates in increasing order.
Chain PairVertices(const Chain& z) {
  const int n = z.n();
  std::vector<Face> edges;
  const auto faces = z.faces();
  for (std::size_t i = 0; i + 1 < faces.size(); i += 2) {
    std::uint64_t at = faces[i].fixed_bits();
    std::uint64_t diff = at ^ faces[i + 1].fixed_bits();
    while (diff != 0) {
      const std::uint64_t bit = diff & (~diff + 1);
      diff &= diff - 1;
      edges.push_back(Face::Unchecked(n, bit, at & ~bit));
      at ^= bit;
    }
  }
  return ChainBuilder::FromParity(n, 1, std::move(edges));
}

void CheckFillDegrees(const Chain& z) {
  if (z.k() < 0) throw std::invalid_argument("cannot fill a degree -1 chain");
  if (z.n() < z.k() + 1) {
    throw std::invalid_argument("filling needs n >= k+1, got n=" +
                                std::to_string(z.n()) +
                                " k=" + std::to_string(z.k()));
  }
}

}  // namespace

namespace internal {

Chain LinearEngine(const Chain& z) {
  const int n = z.n();
  const int k = z.k();
  if (z.empty()) return Chain(n, k + 1);
  if (k == 0) return PairVertices(z);
  // The only nonzero k-cycle of Q_{k+1} is the boundary of its top cell.
  if (n == k + 1) return TopCellChain(n);

  const SliceCensus census = parallel::CensusSlices(z.faces(), n);
  // Cost of pushing the smaller side across and filling the remainder one
  // dimension down, scaled by 2(k+1) to stay integral.
  const std::uint64_t push_weight = 2 * static_cast<std::uint64_t>(k + 1);
  const std::uint64_t rest_weight = static_cast<std::uint64_t>(n - k - 1);
  std::uint64_t best_score = std::numeric_limits<std::uint64_t>::max();
  int best_bit = 0;
  int best_side = 1;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t ones = census.one[i];
    const std::uint64_t zeros = census.zero[i];
    const int side = ones <= zeros ? 1 : 0;
    const std::uint64_t score =
        push_weight * std::min(ones, zeros) + rest_weight * (ones + zeros);
    if (score < best_score) {
      best_score = score;
      best_bit = i;
      best_side = side;
    }
  }
  const int coordinate = best_bit + 1;
  SliceDecomposition parts = Slice(z, coordinate, best_side);
  const Chain rest = LinearEngine(parts.z_plus + parts.z_minus);
  Chain y = Prism(parts.z_plus, coordinate);
  y += Inject(rest, coordinate,
              best_side == 1 ? InjectMode::kFixed0 : InjectMode::kFixed1);
  return y;
}

Chain RecursiveEngine(const Chain& z, RecursionTrace& trace, int depth) {
  trace.max_depth = std::max(trace.max_depth, depth);
  const int n = z.n();
  const int k = z.k();
  if (z.empty()) return Chain(n, k + 1);
  if (n == k + 1) {
    ++trace.top_cell;
    return TopCellChain(n);
  }

  SubcubeRestriction sub = SupportSubcube(z);
  if (std::popcount(sub.active_mask) < n) {
    ++trace.subcube_shrink;
    return Embed(RecursiveEngine(sub.restricted, trace, depth + 1), sub);
  }

  if (k == 1) {
    // A connected 1-cycle with 2m edges spans at most m coordinates.
    ++trace.components;
    Chain y(n, 2);
    for (const Chain& component : ConnectedComponents(z)) {
      const SubcubeRestriction piece = SupportSubcube(component);
      y += Embed(LinearEngine(piece.restricted), piece);
    }
    return y;
  }

  const RecursiveStep step = PlanRecursiveStep(z);
  switch (step.which) {
    case FillCase::kCase1: {
      ++trace.case1;
      SliceDecomposition parts = Slice(z, step.coordinate, step.plus_value);
      const Chain rest =
          RecursiveEngine(parts.z_plus + parts.z_minus, trace, depth + 1);
      Chain y = Prism(parts.z_plus, step.coordinate);
      y += Inject(rest, step.coordinate,
                  step.plus_value == 1 ? InjectMode::kFixed0
                                       : InjectMode::kFixed1);
      return y;
    }
    case FillCase::kCase2: {
      ++trace.case2;
      SliceDecomposition parts = Slice(z, step.coordinate, 1);
      // Cap the crossing cycle, then fill each side closed off by the cap.
      const Chain cap = RecursiveEngine(parts.z_zero, trace, depth + 1);
      Chain y = Prism(cap, step.coordinate);
      y += Inject(RecursiveEngine(parts.z_plus + cap, trace, depth + 1),
                  step.coordinate, InjectMode::kFixed1);
      y += Inject(RecursiveEngine(parts.z_minus + cap, trace, depth + 1),
                  step.coordinate, InjectMode::kFixed0);
      return y;
    }
    case FillCase::kCase3:
      ++trace.case3;
      return LinearEngine(z);
  }
  return Chain(n, k + 1);  // unreachable
}

}  // namespace internal

const char* StrategyName(Strategy s) {
  switch (s) {
    case Strategy::kLinear:
      return "linear";
    case Strategy::kRecursive:
      return "recursive";
    case Strategy::kExact:
      return "exact";
  }
  return "?";
}

Strategy ParseStrategy(const std::string& name) {
  if (name == "linear") return Strategy::kLinear;
  if (name == "recursive") return Strategy::kRecursive;
  if (name == "exact") return Strategy::kExact;
  throw std::invalid_argument("unknown strategy '" + name + "'");
}

NotACycleError::NotACycleError(Chain boundary)
    : std::invalid_argument(DescribeBoundary(boundary)),
      boundary_(std::move(boundary)) {}

NotACycleError::NotACycleError(const std::string& message, Chain boundary)
    : std::invalid_argument(message), boundary_(std::move(boundary)) {}

void RequireFillable(const Chain& z) {
  if (z.k() < 0) throw std::invalid_argument("cannot fill a degree -1 chain");
  if (z.k() == 0) {
    if (z.norm() % 2 != 0) {
      throw NotACycleError("0-chain with an odd number of vertices (" +
                               std::to_string(z.norm()) + ") has no filling",
                           Chain(z.n(), -1));
    }
    return;
  }
  Chain b = Boundary(z);
  if (!b.empty()) throw NotACycleError(std::move(b));
}

Rational FillBoundLinear(int n, int k, std::uint64_t norm) {
  if (k < 0 || n < k + 1) throw std::invalid_argument("invalid degrees");
  return Rational(static_cast<std::int64_t>(n - k) *
                      static_cast<std::int64_t>(norm),
                  2 * static_cast<std::int64_t>(k + 1));
}

double FillBoundPower(int k, std::uint64_t norm) {
  if (k < 1) throw std::invalid_argument("power bound needs k >= 1");
  return FillingConstant(k) *
         std::pow(static_cast<double>(norm), (k + 1.0) / k);
}

FillResult LinearFill(const Chain& z) {
  CheckFillDegrees(z);
  RequireFillable(z);
  FillResult r{.filling = internal::LinearEngine(z)};
  r.strategy = Strategy::kLinear;
  r.linear_bound = FillBoundLinear(z.n(), z.k(), z.norm());
  r.bound_certificate = boost::rational_cast<double>(*r.linear_bound);
  return r;
}

FillResult RecursiveFill(const Chain& z) {
  CheckFillDegrees(z);
  if (z.k() < 1) throw std::invalid_argument("recursive fill needs k >= 1");
  RequireFillable(z);
  RecursionTrace trace;
  FillResult r{.filling = internal::RecursiveEngine(z, trace, 0)};
  r.strategy = Strategy::kRecursive;
  r.bound_certificate = FillBoundPower(z.k(), z.norm());
  r.trace = trace;
  return r;
}

std::vector<Chain> ConnectedComponents(const Chain& z) {
  const auto faces = z.faces();
  std::vector<std::size_t> parent(faces.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  };
  if (z.k() >= 1) {
    std::map<Face, std::size_t> owner;
    for (std::size_t i = 0; i < faces.size(); ++i) {
      for (const Face& g : BoundaryOfFace(faces[i])) {
        auto [it, inserted] = owner.emplace(g, i);
        if (!inserted) {
          const std::size_t a = find(i), b = find(it->second);
          if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
      }
    }
  }
  std::vector<std::vector<Face>> groups;
  std::vector<std::size_t> group_of(faces.size(),
                                    std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const std::size_t root = find(i);
    if (group_of[root] == std::numeric_limits<std::size_t>::max()) {
      group_of[root] = groups.size();
      groups.emplace_back();
    }
    groups[group_of[root]].push_back(faces[i]);
  }
  std::vector<Chain> out;
  out.reserve(groups.size());
  for (auto& g : groups) {
    out.push_back(ChainBuilder::FromSortedUnique(z.n(), z.k(), std::move(g)));
  }
  return out;
}

SubcubeRestriction SupportSubcube(const Chain& z) {
  SubcubeRestriction sub;
  sub.ambient_n = z.n();
  if (z.empty()) {
    sub.active_mask = bits::LowMask(z.n());
    sub.restricted = z;
    return sub;
  }
  std::uint64_t any_free = 0;
  std::uint64_t any_one = 0;
  std::uint64_t all_one = ~std::uint64_t{0};
  for (const Face& f : z.faces()) {
    any_free |= f.free_mask();
    any_one |= f.fixed_bits();
    all_one &= f.fixed_bits();
  }
  sub.active_mask = (any_free | (any_one & ~all_one)) & bits::LowMask(z.n());
  sub.inactive_values = all_one & ~sub.active_mask;
  const int m = std::popcount(sub.active_mask);
  std::vector<Face> faces;
  faces.reserve(z.norm());
  for (const Face& f : z.faces()) {
    faces.push_back(
        Face::Unchecked(m, bits::Compress(f.free_mask(), sub.active_mask),
                        bits::Compress(f.fixed_bits(), sub.active_mask)));
  }
  // Dropped coordinates are identical across the support: order survives.
  sub.restricted = ChainBuilder::FromSortedUnique(m, z.k(), std::move(faces));
  return sub;
}

Chain Embed(const Chain& c, const SubcubeRestriction& sub) {
  if (c.n() != std::popcount(sub.active_mask)) {
    throw std::invalid_argument("chain does not live in the subcube");
  }
  std::vector<Face> faces;
  faces.reserve(c.norm());
  for (const Face& f : c.faces()) {
    faces.push_back(Face::Unchecked(
        sub.ambient_n, bits::Expand(f.free_mask(), sub.active_mask),
        bits::Expand(f.fixed_bits(), sub.active_mask) | sub.inactive_values));
  }
  return ChainBuilder::FromSortedUnique(sub.ambient_n, c.k(), std::move(faces));
}

RecursiveStep PlanRecursiveStep(const Chain& z) {
  const int n = z.n();
  const int k = z.k();
  if (k < 2) throw std::invalid_argument("case analysis needs k >= 2");
  const ConstantSet constants = ConstantsFor(k);
  RecursiveStep step;
  step.census = parallel::CensusSlices(z.faces(), n);
  const auto norm = static_cast<double>(z.norm());
  step.threshold = constants.epsilon * std::pow(norm, (k - 1.0) / k);

  // Smallest crossing part first, Case 1 before Case 2, then lowest
  // coordinate.
  std::tuple<std::uint64_t, int, int> best{
      std::numeric_limits<std::uint64_t>::max(), 2, n};
  for (int i = 0; i < n; ++i) {
    const std::uint64_t crossing = step.census.free[i];
    if (!(static_cast<double>(crossing) < step.threshold)) continue;
    const std::uint64_t smaller = std::min(step.census.one[i],
                                           step.census.zero[i]);
    const double side_limit =
        constants.delta *
        std::pow(static_cast<double>(crossing), k / (k - 1.0));
    const int case_rank = static_cast<double>(smaller) <= side_limit ? 0 : 1;
    const std::tuple<std::uint64_t, int, int> key{crossing, case_rank, i};
    if (key < best) best = key;
  }
  const auto [crossing, case_rank, bit] = best;
  if (bit == n) {
    step.which = FillCase::kCase3;
    return step;
  }
  step.coordinate = bit + 1;
  step.zero_norm = crossing;
  if (case_rank == 0) {
    step.which = FillCase::kCase1;
    step.plus_value = step.census.one[bit] <= step.census.zero[bit] ? 1 : 0;
  } else {
    step.which = FillCase::kCase2;
    step.plus_value = 1;
  }
  return step;
}

}  // namespace cubefill
