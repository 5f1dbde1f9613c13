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

#ifndef BENTNEG_BIT_VECTOR_H_
#define BENTNEG_BIT_VECTOR_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace bentneg {

// Low-level helpers on raw coordinate masks. Coordinate j lives in bit j.
inline constexpr std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}
inline int popcount(std::uint64_t x) { return std::popcount(x); }
inline int parity(std::uint64_t x) { return std::popcount(x) & 1; }

// rho^l on an n-bit mask: coordinate j of the result is coordinate
// (j + l) mod n of x.
inline std::uint64_t rotate_mask(std::uint64_t x, int l, int n) {
  if (n == 0) return x;
  l %= n;
  if (l == 0) return x;
  return ((x >> l) | (x << (n - l))) & low_mask(n);
}

// A vector of F_2^n with n <= 64.
class BitVector {
 public:
  BitVector() = default;
  // Throws DimensionError when n is outside [0, 64] or bits has set bits at
  // positions >= n.
  BitVector(int n, std::uint64_t bits);

  static BitVector zeros(int n) { return BitVector(n, 0); }
  static BitVector ones(int n) { return BitVector(n, low_mask(n)); }
  // e_n^eps = (eps, 0, ..., 0).
  static BitVector unit(int n, bool eps) { return BitVector(n, eps ? 1 : 0); }
  // Character j is coordinate j; only '0' and '1' are accepted.
  static BitVector parse(std::string_view text);

  int size() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  bool operator[](int i) const { return (bits_ >> i) & 1; }
  int weight() const { return popcount(bits_); }

  // True iff every coordinate of *this is >= the matching one of other.
  bool covers(const BitVector& other) const;
  int dot(const BitVector& other) const;
  BitVector hadamard(const BitVector& other) const;
  BitVector operator+(const BitVector& other) const;

  BitVector slice(int from, int length) const;
  BitVector concat(const BitVector& tail) const;
  BitVector rotated(int l) const;

  std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend auto operator<=>(const BitVector& a, const BitVector& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  int n_ = 0;
  std::uint64_t bits_ = 0;
};

}  // namespace bentneg

#endif  // BENTNEG_BIT_VECTOR_H_
