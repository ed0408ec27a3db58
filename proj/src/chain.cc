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

#include "cubefill/chain.h"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "cubefill/bits.h"

namespace cubefill {
namespace {

void CheckDegree(int n, int k) {
  if (n < 0 || n > bits::kMaxDimension) {
    throw std::invalid_argument("chain ambient dimension must lie in [0, 64]");
  }
  if (k < -1 || k > n) {
    throw std::invalid_argument("chain degree " + std::to_string(k) +
                                " invalid for Q_" + std::to_string(n));
  }
}

void CheckFace(const Face& f, int n, int k) {
  if (f.n() != n || f.dim() != k) {
    throw std::invalid_argument("face " + RenderFace(f) + " is not a " +
                                std::to_string(k) + "-face of Q_" +
                                std::to_string(n));
  }
}

void CheckCoordinate(int coordinate, int n) {
  if (coordinate < 1 || coordinate > n) {
    throw std::out_of_range("coordinate " + std::to_string(coordinate) +
                            " outside [1, " + std::to_string(n) + "]");
  }
}

}  // namespace

Chain::Chain(int n, int k) : n_(n), k_(k) { CheckDegree(n, k); }

Chain::Chain(int n, int k, std::vector<Face> sorted_unique, bool)
    : n_(n), k_(k), faces_(std::move(sorted_unique)) {}

Chain Chain::FromFaces(int n, int k, std::vector<Face> faces) {
  CheckDegree(n, k);
  for (const Face& f : faces) CheckFace(f, n, k);
  std::sort(faces.begin(), faces.end());
  if (auto dup = std::adjacent_find(faces.begin(), faces.end());
      dup != faces.end()) {
    throw std::invalid_argument("duplicate face " + RenderFace(*dup));
  }
  return Chain(n, k, std::move(faces), true);
}

Chain Chain::FromParity(int n, int k, std::vector<Face> faces) {
  CheckDegree(n, k);
  for (const Face& f : faces) CheckFace(f, n, k);
  return Chain(n, k, ReduceParity(std::move(faces)), true);
}

Chain Chain::FromWords(int n, int k,
                       std::initializer_list<std::string_view> words) {
  std::vector<Face> faces;
  faces.reserve(words.size());
  for (std::string_view w : words) faces.push_back(ParseFace(w));
  return FromFaces(n, k, std::move(faces));
}

bool Chain::contains(const Face& face) const {
  return std::binary_search(faces_.begin(), faces_.end(), face);
}

Chain& Chain::operator+=(const Chain& other) {
  if (other.n_ != n_ || other.k_ != k_) {
    throw std::invalid_argument(
        "chain dimension mismatch: (" + std::to_string(n_) + "," +
        std::to_string(k_) + ") + (" + std::to_string(other.n_) + "," +
        std::to_string(other.k_) + ")");
  }
  if (other.faces_.empty()) return *this;
  faces_ = SymmetricDifference(faces_, other.faces_);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Chain& chain) {
  os << "{";
  bool first = true;
  for (const Face& f : chain.faces()) {
    os << (first ? "" : ",") << f;
    first = false;
  }
  return os << "}";
}

Chain ChainBuilder::FromParity(int n, int k, std::vector<Face> faces) {
  return Chain(n, k, ReduceParity(std::move(faces)), true);
}

Chain Boundary(const Chain& chain, Execution exec) {
  if (chain.k() <= 0) return Chain(chain.n(), -1);
  std::vector<Face> support = exec == Execution::kParallel
                                  ? parallel::BoundarySupport(chain.faces())
                                  : serial::BoundarySupport(chain.faces());
  return ChainBuilder::FromSortedUnique(chain.n(), chain.k() - 1,
                                        std::move(support));
}

bool IsCycle(const Chain& chain, Execution exec) {
  return Boundary(chain, exec).empty();
}

SliceDecomposition Slice(const Chain& chain, int coordinate, int plus_value) {
  const int n = chain.n();
  CheckCoordinate(coordinate, n);
  if (plus_value != 0 && plus_value != 1) {
    throw std::invalid_argument("plus_value must be 0 or 1");
  }
  const int k = chain.k();
  const int bit = coordinate - 1;
  std::vector<Face> plus, minus, zero;
  for (const Face& f : chain.faces()) {
    const std::uint64_t free_mask = bits::DeleteBit(f.free_mask(), bit);
    const std::uint64_t fixed = bits::DeleteBit(f.fixed_bits(), bit);
    const Face g = Face::Unchecked(n - 1, free_mask, fixed);
    if (f.is_free(bit)) {
      zero.push_back(g);
    } else if (f.value(bit) == plus_value) {
      plus.push_back(g);
    } else {
      minus.push_back(g);
    }
  }
  // Deleting one bit from masks that share it preserves their order, and
  // each part shares the bit's state, so the parts stay sorted.
  return SliceDecomposition{
      coordinate, plus_value,
      ChainBuilder::FromSortedUnique(n - 1, k, std::move(plus)),
      ChainBuilder::FromSortedUnique(n - 1, k, std::move(minus)),
      ChainBuilder::FromSortedUnique(n - 1, std::max(k - 1, -1),
                                     std::move(zero))};
}

Chain Inject(const Chain& chain, int coordinate, InjectMode mode) {
  const int n = chain.n() + 1;
  CheckCoordinate(coordinate, n);
  const int bit = coordinate - 1;
  const bool is_free = mode == InjectMode::kFree;
  const int k = chain.k() + (is_free ? 1 : 0);
  if (chain.k() < 0) return Chain(n, is_free ? 0 : -1);
  std::vector<Face> out;
  out.reserve(chain.norm());
  for (const Face& f : chain.faces()) {
    out.push_back(Face::Unchecked(
        n, bits::InsertBit(f.free_mask(), bit, is_free),
        bits::InsertBit(f.fixed_bits(), bit, mode == InjectMode::kFixed1)));
  }
  // Inserting the same bit state everywhere preserves the order.
  return ChainBuilder::FromSortedUnique(n, k, std::move(out));
}

Chain Reassemble(const SliceDecomposition& parts) {
  const InjectMode plus_mode =
      parts.plus_value == 1 ? InjectMode::kFixed1 : InjectMode::kFixed0;
  const InjectMode minus_mode =
      parts.plus_value == 1 ? InjectMode::kFixed0 : InjectMode::kFixed1;
  Chain out = Inject(parts.z_plus, parts.coordinate, plus_mode);
  out += Inject(parts.z_minus, parts.coordinate, minus_mode);
  if (!parts.z_zero.empty()) {
    out += Inject(parts.z_zero, parts.coordinate, InjectMode::kFree);
  }
  return out;
}

Chain Prism(const Chain& chain, int coordinate) {
  return Inject(chain, coordinate, InjectMode::kFree);
}

namespace {

void CheckDensity(double density) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("density must lie in [0, 1]");
  }
}

}  // namespace

Chain RandomChain(int n, int k, double density, std::uint64_t seed,
                  Execution exec) {
  CheckDensity(density);
  CheckDegree(n, k);
  if (k < 0) throw std::invalid_argument("random chain needs k >= 0");
  std::vector<Face> faces = exec == Execution::kParallel
                                ? parallel::SampleFaces(n, k, density, seed)
                                : serial::SampleFaces(n, k, density, seed);
  return ChainBuilder::FromSortedUnique(n, k, std::move(faces));
}

Chain RandomCycle(int n, int k, double density, std::uint64_t seed,
                  Execution exec) {
  if (k < 0 || k + 1 > n) {
    throw std::invalid_argument("random cycle needs 1 <= k+1 <= n");
  }
  return Boundary(RandomChain(n, k + 1, density, seed, exec), exec);
}

}  // namespace cubefill
