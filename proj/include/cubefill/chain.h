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

// Z2 chains on Q_n: the boundary operator, hyperface slicing and prisms.

#ifndef CUBEFILL_CHAIN_H_
#define CUBEFILL_CHAIN_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "cubefill/face.h"
#include "cubefill/kernels.h"

namespace cubefill {

// A finite Z2 sum of k-faces of Q_n, held as its sorted support.
//
// Degree k = -1 is allowed only for the empty chain; it is what the boundary
// of a 0-chain returns.
class Chain {
 public:
  Chain(int n, int k);

  // Throws std::invalid_argument if a face has the wrong (n, k) or appears
  // twice.
  static Chain FromFaces(int n, int k, std::vector<Face> faces);
  // Same, but faces listed an even number of times cancel.
  static Chain FromParity(int n, int k, std::vector<Face> faces);
  // Parses every word; n is taken from `n` and k from the first word.
  static Chain FromWords(int n, int k,
                         std::initializer_list<std::string_view> words);

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t norm() const { return faces_.size(); }
  bool empty() const { return faces_.empty(); }
  std::span<const Face> faces() const { return faces_; }
  bool contains(const Face& face) const;

  Chain& operator+=(const Chain& other);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  Chain(int n, int k, std::vector<Face> sorted_unique, bool /*trusted*/);

  int n_;
  int k_;
  std::vector<Face> faces_;

  friend class ChainBuilder;
};

std::ostream& operator<<(std::ostream& os, const Chain& chain);

// Assembles chains from faces already known to be valid, skipping per-face
// checks. Used by the kernels and fill engines.
class ChainBuilder {
 public:
  static Chain FromSortedUnique(int n, int k, std::vector<Face> faces) {
    return Chain(n, k, std::move(faces), true);
  }
  // Sorts and reduces mod 2.
  static Chain FromParity(int n, int k, std::vector<Face> faces);
};

Chain Boundary(const Chain& chain, Execution exec = Execution::kParallel);
bool IsCycle(const Chain& chain, Execution exec = Execution::kParallel);

// A chain split by coordinate `coordinate` (1-based). The side where the
// coordinate equals `plus_value` is Q+. All three parts live in Q_{n-1}:
// the slicing coordinate is deleted and later coordinates shift down.
struct SliceDecomposition {
  int coordinate = 1;
  int plus_value = 1;
  Chain z_plus;   // degree k
  Chain z_minus;  // degree k
  Chain z_zero;   // degree k-1, the faces free at the coordinate
};

// Throws std::out_of_range if coordinate is outside [1, n] and
// std::invalid_argument if plus_value is not a bit.
SliceDecomposition Slice(const Chain& chain, int coordinate, int plus_value);

enum class InjectMode { kFixed0, kFixed1, kFree };

// Inserts a new coordinate at position `coordinate` (1-based, in Q_{n+1})
// into every face. kFree raises the degree by one.
Chain Inject(const Chain& chain, int coordinate, InjectMode mode);

// Inverse of Slice.
Chain Reassemble(const SliceDecomposition& parts);

// Inject(w, coordinate, kFree). Satisfies
//   Boundary(Prism(w)) = Prism(Boundary(w)) + Inject(w, 0) + Inject(w, 1).
Chain Prism(const Chain& chain, int coordinate);

// Boundary of a random (k+1)-chain that contains each (k+1)-face of Q_n
// independently with probability `density`. Deterministic in `seed`,
// independent of thread count. Throws std::invalid_argument unless
// 0 <= density <= 1 and 1 <= k+1 <= n.
Chain RandomCycle(int n, int k, double density, std::uint64_t seed,
                  Execution exec = Execution::kParallel);

// Random k-chain with the same inclusion rule (no boundary taken).
Chain RandomChain(int n, int k, double density, std::uint64_t seed,
                  Execution exec = Execution::kParallel);

}  // namespace cubefill

#endif  // CUBEFILL_CHAIN_H_
