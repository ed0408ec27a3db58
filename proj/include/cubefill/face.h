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

// Cells of the n-cube Q_n.
//
// A k-face is a word of length n over {0,1,*} with exactly k stars. It is
// stored as two n-bit masks: `free_mask` marks the star positions and
// `fixed_bits` holds the values of the determined coordinates. Coordinate i
// (1-based, left to right in the word) is bit i-1 of both masks.
//
// Faces of the same (n, k) are ranked densely: first by the colexicographic
// rank of the free-coordinate set, then by the determined bits compacted into
// an integer. For faces of equal (n, k) this is exactly the numeric order of
// (free_mask, fixed_bits), which is what operator<=> uses.

#ifndef CUBEFILL_FACE_H_
#define CUBEFILL_FACE_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cubefill {

class Face {
 public:
  Face() = default;

  // Throws std::invalid_argument unless 0 <= n <= 64, both masks fit in n
  // bits and fixed_bits does not overlap free_mask.
  Face(int n, std::uint64_t free_mask, std::uint64_t fixed_bits);

  // No validation. For hot paths that derive faces from valid faces.
  static constexpr Face Unchecked(int n, std::uint64_t free_mask,
                                  std::uint64_t fixed_bits) {
    Face f;
    f.n_ = n;
    f.free_mask_ = free_mask;
    f.fixed_bits_ = fixed_bits;
    return f;
  }

  int n() const { return n_; }
  int dim() const { return std::popcount(free_mask_); }
  std::uint64_t free_mask() const { return free_mask_; }
  std::uint64_t fixed_bits() const { return fixed_bits_; }

  // 0-based coordinate index.
  bool is_free(int i) const { return (free_mask_ >> i) & 1; }
  int value(int i) const { return static_cast<int>((fixed_bits_ >> i) & 1); }

  friend bool operator==(const Face&, const Face&) = default;
  friend std::strong_ordering operator<=>(const Face& a, const Face& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.dim() <=> b.dim(); c != 0) return c;
    if (auto c = a.free_mask_ <=> b.free_mask_; c != 0) return c;
    return a.fixed_bits_ <=> b.fixed_bits_;
  }

 private:
  int n_ = 0;
  std::uint64_t free_mask_ = 0;
  std::uint64_t fixed_bits_ = 0;
};

struct FaceRank {
  int n = 0;
  int k = 0;
  std::uint64_t index = 0;

  friend bool operator==(const FaceRank&, const FaceRank&) = default;
};

// Throws std::invalid_argument on empty input, a character outside {0,1,*},
// or more than 64 characters.
Face ParseFace(std::string_view word);
std::string RenderFace(const Face& face);
std::ostream& operator<<(std::ostream& os, const Face& face);

// The 2k faces obtained by determining one free coordinate, in rank order.
// Empty for vertices.
std::vector<Face> BoundaryOfFace(const Face& face);

// The n-k faces obtained by freeing one determined coordinate, in rank
// order. Empty for the top cell.
std::vector<Face> CoboundaryOfFace(const Face& face);

// C(n, k) with overflow checking; 0 when k < 0 or k > n.
std::uint64_t Binomial(int n, int k);

// |Q_n^(k)| = 2^(n-k) C(n, k). Throws std::out_of_range when the count does
// not fit in 64 bits and std::invalid_argument for invalid (n, k).
std::uint64_t FaceCount(int n, int k);

// All k-faces of Q_n in rank order.
std::vector<Face> EnumerateFaces(int n, int k);

FaceRank RankFace(const Face& face);
// Throws std::out_of_range when rank.index >= FaceCount(n, k).
Face UnrankFace(const FaceRank& rank);

// Colexicographic rank of a k-subset given as a bitmask, and its inverse.
std::uint64_t SubsetRank(std::uint64_t subset);
std::uint64_t SubsetUnrank(int k, std::uint64_t rank);

// The unique (n)-face of Q_n.
Face TopCell(int n);

}  // namespace cubefill

#endif  // CUBEFILL_FACE_H_
