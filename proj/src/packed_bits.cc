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

#include "bentneg/packed_bits.h"

#include <atomic>
#include <bit>
#include <string>

#include "bentneg/errors.h"

namespace bentneg {
namespace {

std::atomic<int> g_max_variables{kDefaultMaxVariables};

// Selects positions whose bit i is zero, for i < 6.
constexpr std::uint64_t kLowHalf[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};

}  // namespace

int max_variables() { return g_max_variables.load(std::memory_order_relaxed); }

void set_max_variables(int n) {
  if (n < 1 || n > kHardMaxVariables) {
    throw CapacityError("maximum variable count must lie in [1, " +
                        std::to_string(kHardMaxVariables) + "], got " +
                        std::to_string(n));
  }
  g_max_variables.store(n, std::memory_order_relaxed);
}

void check_capacity(int n) {
  if (n < 0) throw DimensionError("negative variable count");
  if (n > max_variables()) {
    throw CapacityError("n = " + std::to_string(n) +
                        " exceeds the configured maximum of " +
                        std::to_string(max_variables()) + " variables");
  }
}

PackedBits::PackedBits(int n) : n_(n) {
  check_capacity(n);
  std::size_t words = n <= 6 ? 1 : (std::size_t{1} << (n - 6));
  words_.assign(words, 0);
}

std::uint64_t PackedBits::tail_mask() const {
  return n_ >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1u << n_)) - 1;
}

std::uint64_t PackedBits::count() const {
  std::uint64_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

void PackedBits::xor_with(const PackedBits& other) {
  if (other.n_ != n_) {
    throw DimensionError("bit tables over " + std::to_string(n_) + " and " +
                         std::to_string(other.n_) + " variables");
  }
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
}

void PackedBits::fill() {
  for (auto& w : words_) w = ~std::uint64_t{0};
  words_.back() &= tail_mask();
}

void PackedBits::complement() {
  for (auto& w : words_) w = ~w;
  words_.back() &= tail_mask();
}

void moebius_in_place(PackedBits& bits) {
  const int n = bits.num_vars();
  auto words = bits.mutable_words();
  for (int i = 0; i < n && i < 6; ++i) {
    const int shift = 1 << i;
    for (auto& w : words) w ^= (w & kLowHalf[i]) << shift;
  }
  for (int i = 6; i < n; ++i) {
    const std::size_t step = std::size_t{1} << (i - 6);
    for (std::size_t block = 0; block < words.size(); block += 2 * step) {
      for (std::size_t j = block; j < block + step; ++j) words[j + step] ^= words[j];
    }
  }
}

}  // namespace bentneg
