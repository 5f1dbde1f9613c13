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

#include "bentneg/bit_vector.h"

#include <string>

#include "bentneg/errors.h"

namespace bentneg {
namespace {

void require_same_size(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) {
    throw DimensionError("bit vectors of length " + std::to_string(a.size()) +
                         " and " + std::to_string(b.size()));
  }
}

}  // namespace

BitVector::BitVector(int n, std::uint64_t bits) : n_(n), bits_(bits) {
  if (n < 0 || n > 64) {
    throw DimensionError("bit vector length " + std::to_string(n) +
                         " outside [0, 64]");
  }
  if ((bits & ~low_mask(n)) != 0) {
    throw DimensionError("bit vector value has bits beyond length " +
                         std::to_string(n));
  }
}

BitVector BitVector::parse(std::string_view text) {
  if (text.empty() || text.size() > 64) {
    throw ParseError("bit string must have 1 to 64 characters, got '" +
                     std::string(text) + "'");
  }
  std::uint64_t bits = 0;
  for (std::size_t j = 0; j < text.size(); ++j) {
    if (text[j] == '1') {
      bits |= std::uint64_t{1} << j;
    } else if (text[j] != '0') {
      throw ParseError("invalid character in bit string '" +
                       std::string(text) + "'");
    }
  }
  return BitVector(static_cast<int>(text.size()), bits);
}

bool BitVector::covers(const BitVector& other) const {
  require_same_size(*this, other);
  return (other.bits_ & ~bits_) == 0;
}

int BitVector::dot(const BitVector& other) const {
  require_same_size(*this, other);
  return parity(bits_ & other.bits_);
}

BitVector BitVector::hadamard(const BitVector& other) const {
  require_same_size(*this, other);
  return BitVector(n_, bits_ & other.bits_);
}

BitVector BitVector::operator+(const BitVector& other) const {
  require_same_size(*this, other);
  return BitVector(n_, bits_ ^ other.bits_);
}

BitVector BitVector::slice(int from, int length) const {
  if (from < 0 || length < 0 || from + length > n_) {
    throw DimensionError("slice out of range");
  }
  return BitVector(length, (bits_ >> from) & low_mask(length));
}

BitVector BitVector::concat(const BitVector& tail) const {
  if (n_ + tail.n_ > 64) throw DimensionError("concatenation exceeds 64");
  return BitVector(n_ + tail.n_, bits_ | (tail.bits_ << n_));
}

BitVector BitVector::rotated(int l) const {
  if (n_ == 0) return *this;
  int shift = ((l % n_) + n_) % n_;
  return BitVector(n_, rotate_mask(bits_, shift, n_));
}

std::string BitVector::to_string() const {
  std::string out(static_cast<std::size_t>(n_), '0');
  for (int j = 0; j < n_; ++j) {
    if ((*this)[j]) out[static_cast<std::size_t>(j)] = '1';
  }
  return out;
}

}  // namespace bentneg
