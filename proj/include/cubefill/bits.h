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

#ifndef CUBEFILL_BITS_H_
#define CUBEFILL_BITS_H_

#include <bit>
#include <cstdint>

// Word-level helpers for face masks. Bit i of a mask is coordinate i+1.
namespace cubefill::bits {

inline constexpr int kMaxDimension = 64;

constexpr std::uint64_t LowMask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

constexpr std::uint64_t Bit(int i) { return std::uint64_t{1} << i; }

// Gathers the bits of `x` selected by `mask` into the low end (pext).
constexpr std::uint64_t Compress(std::uint64_t x, std::uint64_t mask) {
  std::uint64_t out = 0;
  int j = 0;
  while (mask != 0) {
    const int i = std::countr_zero(mask);
    out |= ((x >> i) & 1) << j++;
    mask &= mask - 1;
  }
  return out;
}

// Scatters the low bits of `x` into the positions selected by `mask` (pdep).
constexpr std::uint64_t Expand(std::uint64_t x, std::uint64_t mask) {
  std::uint64_t out = 0;
  while (mask != 0) {
    const int i = std::countr_zero(mask);
    out |= (x & 1) << i;
    x >>= 1;
    mask &= mask - 1;
  }
  return out;
}

// Removes bit `i`, shifting the higher bits down by one.
constexpr std::uint64_t DeleteBit(std::uint64_t x, int i) {
  const std::uint64_t low = LowMask(i);
  return (x & low) | ((x >> 1) & ~low);
}

// Opens a gap at bit `i` (higher bits shift up) and writes `value` there.
constexpr std::uint64_t InsertBit(std::uint64_t x, int i, bool value) {
  const std::uint64_t low = LowMask(i);
  return (x & low) | ((x & ~low) << 1) | (value ? Bit(i) : 0);
}

}  // namespace cubefill::bits

#endif  // CUBEFILL_BITS_H_
