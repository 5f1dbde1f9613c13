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

#ifndef BENTNEG_VECTOR_SET_H_
#define BENTNEG_VECTOR_SET_H_

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "bentneg/bit_vector.h"
#include "bentneg/packed_bits.h"

namespace bentneg {

// A subset of F_2^n stored as a membership table over the 2^n indices.
class VectorSet {
 public:
  explicit VectorSet(int n) : bits_(n) {}
  static VectorSet full(int n);
  static VectorSet from_members(int n, std::initializer_list<std::uint64_t> xs);
  static VectorSet from_members(int n, const std::vector<std::uint64_t>& xs);

  int num_vars() const { return bits_.num_vars(); }
  bool contains(std::uint64_t x) const { return x < bits_.size() && bits_.get(x); }
  bool contains(const BitVector& x) const;
  void insert(std::uint64_t x) { bits_.set(x, true); }
  std::uint64_t size() const { return bits_.count(); }
  bool empty() const { return size() == 0; }
  // Members in ascending index order.
  std::vector<std::uint64_t> members() const;
  VectorSet complement() const;
  VectorSet united(const VectorSet& other) const;
  bool intersects(const VectorSet& other) const;

  const PackedBits& bits() const { return bits_; }

  friend bool operator==(const VectorSet&, const VectorSet&) = default;

 private:
  PackedBits bits_;
};

}  // namespace bentneg

#endif  // BENTNEG_VECTOR_SET_H_
