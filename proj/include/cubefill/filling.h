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

// Fillings of Z2 cycles in the cube: given a k-cycle z, find a (k+1)-chain y
// with boundary z.
//
// Three engines:
//   LinearFill     ||y|| <= (n-k) / (2(k+1)) * ||z||, by slicing along the
//                  hyperface that minimizes the inductive cost.
//   RecursiveFill  ||y|| <= c_k ||z||^{(k+1)/k}, independent of n.
//   ExactFill      branch and bound for min ||y|| (desk scale only).

#ifndef CUBEFILL_FILLING_H_
#define CUBEFILL_FILLING_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "cubefill/chain.h"
#include "cubefill/kernels.h"

namespace cubefill {

using Rational = boost::rational<std::int64_t>;

enum class Strategy { kLinear, kRecursive, kExact };
const char* StrategyName(Strategy s);
// Throws std::invalid_argument for anything but linear/recursive/exact.
Strategy ParseStrategy(const std::string& name);

// How often each branch of the recursive construction fired, summed over
// the whole recursion tree.
struct RecursionTrace {
  std::int64_t top_cell = 0;
  std::int64_t subcube_shrink = 0;
  std::int64_t components = 0;  // k = 1 base case
  std::int64_t case1 = 0;
  std::int64_t case2 = 0;
  std::int64_t case3 = 0;
  int max_depth = 0;
};

struct FillResult {
  Chain filling{0, 0};
  Strategy strategy = Strategy::kLinear;
  // The bound the strategy guarantees for this input. For kExact it is the
  // linear bound of the seed solution.
  double bound_certificate = 0;
  // Exact form of the linear bound, when that is the certificate.
  std::optional<Rational> linear_bound{};
  bool optimal = false;
  std::int64_t nodes_explored = 0;
  RecursionTrace trace{};
};

// Thrown when a fill is requested for a chain that is not a boundary: a
// k >= 1 chain with nonzero boundary, or a 0-chain with an odd number of
// vertices.
class NotACycleError : public std::invalid_argument {
 public:
  explicit NotACycleError(Chain boundary);
  NotACycleError(const std::string& message, Chain boundary);
  // Empty for odd 0-chains.
  const Chain& boundary() const { return boundary_; }

 private:
  Chain boundary_;
};

// Throws NotACycleError unless `z` has a filling.
void RequireFillable(const Chain& z);

// (n-k) * norm / (2(k+1)).
Rational FillBoundLinear(int n, int k, std::uint64_t norm);
// c_k * norm^{(k+1)/k}; k >= 1.
double FillBoundPower(int k, std::uint64_t norm);

// Requires n >= k+1. For k = 0 the even vertex set is paired along monotone
// paths, which meets the same bound.
FillResult LinearFill(const Chain& z);

// Requires k >= 1.
FillResult RecursiveFill(const Chain& z);

// Branch and bound seeded with LinearFill. `optimal` is set only when the
// search finishes within `node_budget` nodes. kParallel explores the
// first-level branches as independent searches, each with an equal share of
// the budget; its result does not depend on the thread schedule. Throws
// std::invalid_argument for node_budget < 1.
FillResult ExactFill(const Chain& z, std::int64_t node_budget,
                     Execution exec = Execution::kSerial);

// Classes of the support under "shares a (k-1)-face", ordered by their
// smallest face. For k = 0 every vertex is its own class.
std::vector<Chain> ConnectedComponents(const Chain& z);

// The smallest face of Q_n containing the support of z, and z written in
// its coordinates.
struct SubcubeRestriction {
  int ambient_n = 0;
  std::uint64_t active_mask = 0;      // coordinates kept
  std::uint64_t inactive_values = 0;  // constant values of the dropped ones
  Chain restricted{0, 0};             // lives in Q_{popcount(active_mask)}
};

SubcubeRestriction SupportSubcube(const Chain& z);
// Lifts a chain of any degree from the subcube back into Q_{ambient_n}.
Chain Embed(const Chain& c, const SubcubeRestriction& sub);

// Case analysis for one step of RecursiveFill on a k-cycle (k >= 2) whose
// support spans every coordinate.
enum class FillCase { kCase1, kCase2, kCase3 };

struct RecursiveStep {
  FillCase which = FillCase::kCase3;
  int coordinate = 0;  // 1-based; 0 for Case 3
  int plus_value = 1;  // for Case 1 the side pushed across
  std::uint64_t zero_norm = 0;
  double threshold = 0;     // epsilon * ||z||^{(k-1)/k}
  SliceCensus census;
};

RecursiveStep PlanRecursiveStep(const Chain& z);

}  // namespace cubefill

#endif  // CUBEFILL_FILLING_H_
