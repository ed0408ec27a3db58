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

// Minimum-weight filling by branch and bound.
//
// The residual r = z + boundary(partial) must be cancelled by the cells still
// to be chosen. Its smallest face f needs odd incidence with the rest of the
// filling, so some coboundary cell of f is in every completion: branch on
// those n-k cells. A cell removes at most 2(k+1) residual faces, which gives
// the admissible bound weight + ceil(|r| / 2(k+1)).
//
// Completions never need a cell that is already in `partial`: following an
// optimal filling Y, every branch taken can be a cell of Y not yet chosen.

#include <omp.h>

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "cubefill/filling.h"
#include "fill_engines.h"

namespace cubefill {
namespace {

class BranchSearch {
 public:
  BranchSearch(int k, std::int64_t budget, std::size_t incumbent)
      : faces_per_cell_(2 * static_cast<std::size_t>(k + 1)),
        budget_(budget),
        best_weight_(incumbent) {}

  void Start(std::vector<Face> residual, std::vector<Face> partial) {
    residual_ = std::move(residual);
    partial_ = std::move(partial);
    Dfs(partial_.size());
  }

  bool exhausted() const { return exhausted_; }
  std::int64_t nodes() const { return nodes_; }
  std::size_t best_weight() const { return best_weight_; }
  const std::optional<std::vector<Face>>& best_cells() const {
    return best_cells_;
  }

  // Adds the boundary of `cell` to the residual mod 2.
  static void Toggle(std::vector<Face>& residual, const Face& cell) {
    for (const Face& g : BoundaryOfFace(cell)) {
      auto it = std::lower_bound(residual.begin(), residual.end(), g);
      if (it != residual.end() && *it == g) {
        residual.erase(it);
      } else {
        residual.insert(it, g);
      }
    }
  }

 private:
  void Dfs(std::size_t weight) {
    if (nodes_ >= budget_) {
      exhausted_ = true;
      return;
    }
    ++nodes_;
    if (residual_.empty()) {
      if (weight < best_weight_) {
        best_weight_ = weight;
        best_cells_ = partial_;
      }
      return;
    }
    const std::size_t lower =
        (residual_.size() + faces_per_cell_ - 1) / faces_per_cell_;
    if (weight + lower >= best_weight_) return;

    const Face pivot = residual_.front();
    for (const Face& cell : CoboundaryOfFace(pivot)) {
      if (std::find(partial_.begin(), partial_.end(), cell) != partial_.end()) {
        continue;
      }
      Toggle(residual_, cell);
      partial_.push_back(cell);
      Dfs(weight + 1);
      partial_.pop_back();
      Toggle(residual_, cell);
      if (exhausted_) return;
    }
  }

  std::size_t faces_per_cell_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  bool exhausted_ = false;
  std::size_t best_weight_;
  std::optional<std::vector<Face>> best_cells_;
  std::vector<Face> residual_;
  std::vector<Face> partial_;
};

Chain CellsToChain(int n, int k, std::vector<Face> cells) {
  std::sort(cells.begin(), cells.end());
  return ChainBuilder::FromSortedUnique(n, k, std::move(cells));
}

}  // namespace

FillResult ExactFill(const Chain& z, std::int64_t node_budget,
                     Execution exec) {
  if (node_budget < 1) throw std::invalid_argument("node budget must be >= 1");
  FillResult seed = LinearFill(z);
  FillResult r = seed;
  r.strategy = Strategy::kExact;
  if (z.empty()) {
    r.optimal = true;
    return r;
  }
  const int n = z.n();
  const int k = z.k();
  const std::vector<Face> residual(z.faces().begin(), z.faces().end());

  if (exec == Execution::kSerial) {
    BranchSearch search(k, node_budget, seed.filling.norm());
    search.Start(residual, {});
    if (search.best_cells()) {
      r.filling = CellsToChain(n, k + 1, *search.best_cells());
    }
    r.optimal = !search.exhausted();
    r.nodes_explored = search.nodes();
    return r;
  }

  // The root node is expanded here; each child is an independent search.
  const std::size_t faces_per_cell = 2 * static_cast<std::size_t>(k + 1);
  const std::size_t root_lower =
      (residual.size() + faces_per_cell - 1) / faces_per_cell;
  r.nodes_explored = 1;
  if (root_lower >= seed.filling.norm() || node_budget == 1) {
    r.optimal = root_lower >= seed.filling.norm();
    return r;
  }
  const std::vector<Face> branches = CoboundaryOfFace(residual.front());
  const auto count = static_cast<std::int64_t>(branches.size());
  const std::int64_t share =
      std::max<std::int64_t>(1, (node_budget - 1) / count);
  std::vector<std::optional<BranchSearch>> searches(branches.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t b = 0; b < count; ++b) {
    std::vector<Face> start = residual;
    BranchSearch::Toggle(start, branches[b]);
    searches[b].emplace(k, share, seed.filling.norm());
    searches[b]->Start(std::move(start), {branches[b]});
  }

  bool exhausted = false;
  std::optional<std::size_t> winner;
  for (std::size_t b = 0; b < searches.size(); ++b) {
    const BranchSearch& s = *searches[b];
    r.nodes_explored += s.nodes();
    exhausted = exhausted || s.exhausted();
    if (s.best_cells() &&
        (!winner || s.best_weight() < searches[*winner]->best_weight())) {
      winner = b;
    }
  }
  if (winner) {
    r.filling = CellsToChain(n, k + 1, *searches[*winner]->best_cells());
  }
  r.optimal = !exhausted;
  return r;
}

}  // namespace cubefill
