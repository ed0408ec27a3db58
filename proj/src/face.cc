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

#include "cubefill/face.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "cubefill/bits.h"

namespace cubefill {

Face::Face(int n, std::uint64_t free_mask, std::uint64_t fixed_bits)
    : n_(n), free_mask_(free_mask), fixed_bits_(fixed_bits) {
  if (n < 0 || n > bits::kMaxDimension) {
    throw std::invalid_argument("face dimension n must lie in [0, 64], got " +
                                std::to_string(n));
  }
  const std::uint64_t outside = ~bits::LowMask(n);
  if ((free_mask & outside) != 0 || (fixed_bits & outside) != 0) {
    throw std::invalid_argument("face mask has bits beyond coordinate n");
  }
  if ((free_mask & fixed_bits) != 0) {
    throw std::invalid_argument("fixed bits overlap free coordinates");
  }
}

Face ParseFace(std::string_view word) {
  if (word.empty()) throw std::invalid_argument("empty face word");
  if (word.size() > static_cast<std::size_t>(bits::kMaxDimension)) {
    throw std::invalid_argument("face word longer than 64 coordinates");
  }
  std::uint64_t free_mask = 0;
  std::uint64_t fixed = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    switch (word[i]) {
      case '0':
        break;
      case '1':
        fixed |= bits::Bit(static_cast<int>(i));
        break;
      case '*':
        free_mask |= bits::Bit(static_cast<int>(i));
        break;
      default:
        throw std::invalid_argument("invalid character '" +
                                    std::string(1, word[i]) +
                                    "' in face word at position " +
                                    std::to_string(i + 1));
    }
  }
  return Face::Unchecked(static_cast<int>(word.size()), free_mask, fixed);
}

std::string RenderFace(const Face& face) {
  std::string out(static_cast<std::size_t>(face.n()), '0');
  for (int i = 0; i < face.n(); ++i) {
    if (face.is_free(i)) {
      out[i] = '*';
    } else if (face.value(i) != 0) {
      out[i] = '1';
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Face& face) {
  return os << RenderFace(face);
}

std::vector<Face> BoundaryOfFace(const Face& face) {
  std::vector<Face> out;
  out.reserve(2 * static_cast<std::size_t>(face.dim()));
  // Clearing a higher bit leaves a smaller mask: walk free bits top-down.
  std::uint64_t remaining = face.free_mask();
  std::vector<int> free_bits;
  while (remaining != 0) {
    free_bits.push_back(std::countr_zero(remaining));
    remaining &= remaining - 1;
  }
  for (auto it = free_bits.rbegin(); it != free_bits.rend(); ++it) {
    const std::uint64_t mask = face.free_mask() & ~bits::Bit(*it);
    out.push_back(Face::Unchecked(face.n(), mask, face.fixed_bits()));
    out.push_back(
        Face::Unchecked(face.n(), mask, face.fixed_bits() | bits::Bit(*it)));
  }
  return out;
}

std::vector<Face> CoboundaryOfFace(const Face& face) {
  std::vector<Face> out;
  out.reserve(static_cast<std::size_t>(face.n() - face.dim()));
  std::uint64_t determined = ~face.free_mask() & bits::LowMask(face.n());
  // Freeing a lower bit yields a smaller mask, so ascending bits is rank order.
  while (determined != 0) {
    const int i = std::countr_zero(determined);
    determined &= determined - 1;
    out.push_back(Face::Unchecked(face.n(), face.free_mask() | bits::Bit(i),
                                  face.fixed_bits() & ~bits::Bit(i)));
  }
  return out;
}

std::uint64_t Binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  // Product stays integral at every step: C(n-k+i, i).
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      throw std::out_of_range("binomial coefficient overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t FaceCount(int n, int k) {
  if (n < 0 || k < 0 || k > n || n > bits::kMaxDimension) {
    throw std::invalid_argument("invalid face degree (n=" + std::to_string(n) +
                                ", k=" + std::to_string(k) + ")");
  }
  const std::uint64_t subsets = Binomial(n, k);
  if (n - k >= 64 ||
      subsets > (std::numeric_limits<std::uint64_t>::max() >> (n - k))) {
    throw std::out_of_range("face count overflows 64 bits");
  }
  return subsets << (n - k);
}

std::uint64_t SubsetRank(std::uint64_t subset) {
  std::uint64_t rank = 0;
  int j = 1;
  while (subset != 0) {
    rank += Binomial(std::countr_zero(subset), j++);
    subset &= subset - 1;
  }
  return rank;
}

std::uint64_t SubsetUnrank(int k, std::uint64_t rank) {
  std::uint64_t subset = 0;
  for (int j = k; j >= 1; --j) {
    // Largest c with C(c, j) <= rank.
    int c = j - 1;
    while (Binomial(c + 1, j) <= rank) ++c;
    rank -= Binomial(c, j);
    subset |= bits::Bit(c);
  }
  return subset;
}

std::vector<Face> EnumerateFaces(int n, int k) {
  const std::uint64_t count = FaceCount(n, k);
  std::vector<Face> out;
  out.reserve(count);
  const std::uint64_t full = bits::LowMask(n);
  const std::uint64_t per_subset = std::uint64_t{1} << (n - k);
  // Gosper's hack walks k-subsets in increasing numeric (= colex) order.
  std::uint64_t subset = bits::LowMask(k);
  for (;;) {
    const std::uint64_t determined = full & ~subset;
    for (std::uint64_t v = 0; v < per_subset; ++v) {
      out.push_back(Face::Unchecked(n, subset, bits::Expand(v, determined)));
    }
    if (subset == 0 || subset == (full & ~bits::LowMask(n - k))) break;
    const std::uint64_t lowest = subset & (~subset + 1);
    const std::uint64_t ripple = subset + lowest;
    subset = (((ripple ^ subset) >> 2) / lowest) | ripple;
  }
  return out;
}

FaceRank RankFace(const Face& face) {
  const int n = face.n();
  const int k = face.dim();
  FaceCount(n, k);  // throws when the index space exceeds 64 bits
  const std::uint64_t determined = bits::LowMask(n) & ~face.free_mask();
  const std::uint64_t index =
      (SubsetRank(face.free_mask()) << (n - k)) |
      bits::Compress(face.fixed_bits(), determined);
  return FaceRank{n, k, index};
}

Face UnrankFace(const FaceRank& rank) {
  const std::uint64_t count = FaceCount(rank.n, rank.k);
  if (rank.index >= count) {
    throw std::out_of_range("face rank " + std::to_string(rank.index) +
                            " out of range [0, " + std::to_string(count) + ")");
  }
  const int m = rank.n - rank.k;
  const std::uint64_t subset = SubsetUnrank(rank.k, rank.index >> m);
  const std::uint64_t determined = bits::LowMask(rank.n) & ~subset;
  const std::uint64_t fixed =
      bits::Expand(rank.index & bits::LowMask(m), determined);
  return Face::Unchecked(rank.n, subset, fixed);
}

Face TopCell(int n) { return Face(n, bits::LowMask(n), 0); }

}  // namespace cubefill
