// Copyright 2026 The bentneg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BENTNEG_PACKED_BITS_H_
#define BENTNEG_PACKED_BITS_H_

#include <cstdint>
#include <span>
#include <vector>

namespace bentneg {

// Maximum variable count accepted by table-sized allocations. Defaults to 24
// and can be raised up to kHardMaxVariables.
inline constexpr int kDefaultMaxVariables = 24;
inline constexpr int kHardMaxVariables = 30;
int max_variables();
// Throws CapacityError when n is outside [1, kHardMaxVariables].
void set_max_variables(int n);
// Throws CapacityError when n exceeds max_variables() or is negative.
void check_capacity(int n);

// A bit vector of length 2^n, stored in 64-bit words. Bits past 2^n in the
// last word are always zero.
class PackedBits {
 public:
  PackedBits() = default;
  explicit PackedBits(int n);

  int num_vars() const { return n_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }
  bool get(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(std::uint64_t i, bool v) {
    std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= bit;
    } else {
      words_[i >> 6] &= ~bit;
    }
  }
  void flip(std::uint64_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> mutable_words() { return words_; }

  std::uint64_t count() const;
  void xor_with(const PackedBits& other);
  // Sets every bit in [0, 2^n).
  void fill();
  void complement();
  // Calls fn(i) for each set bit in ascending order.
  template <typename Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        int b = __builtin_ctzll(word);
        fn((static_cast<std::uint64_t>(w) << 6) | static_cast<std::uint64_t>(b));
        word &= word - 1;
      }
    }
  }

  friend bool operator==(const PackedBits&, const PackedBits&) = default;

 private:
  std::uint64_t tail_mask() const;

  int n_ = 0;
  std::vector<std::uint64_t> words_ = std::vector<std::uint64_t>(1, 0);
};

// Binary Moebius transform in place; it is its own inverse.
void moebius_in_place(PackedBits& bits);

}  // namespace bentneg

#endif  // BENTNEG_PACKED_BITS_H_
