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

#include "bentneg/vector_set.h"

#include <string>

#include "bentneg/errors.h"

namespace bentneg {

VectorSet VectorSet::full(int n) {
  VectorSet s(n);
  s.bits_.fill();
  return s;
}

VectorSet VectorSet::from_members(int n, std::initializer_list<std::uint64_t> xs) {
  return from_members(n, std::vector<std::uint64_t>(xs));
}

VectorSet VectorSet::from_members(int n, const std::vector<std::uint64_t>& xs) {
  VectorSet s(n);
  for (std::uint64_t x : xs) {
    if (x >= s.bits_.size()) {
      throw DimensionError("member index " + std::to_string(x) +
                           " outside F_2^" + std::to_string(n));
    }
    s.insert(x);
  }
  return s;
}

bool VectorSet::contains(const BitVector& x) const {
  if (x.size() != num_vars()) {
    throw DimensionError("vector of length " + std::to_string(x.size()) +
                         " tested against a set over F_2^" +
                         std::to_string(num_vars()));
  }
  return bits_.get(x.bits());
}

std::vector<std::uint64_t> VectorSet::members() const {
  std::vector<std::uint64_t> out;
  out.reserve(size());
  bits_.for_each_set([&](std::uint64_t x) { out.push_back(x); });
  return out;
}

VectorSet VectorSet::complement() const {
  VectorSet out = *this;
  out.bits_.complement();
  return out;
}

VectorSet VectorSet::united(const VectorSet& other) const {
  if (other.num_vars() != num_vars()) throw DimensionError("set union across dimensions");
  VectorSet out = *this;
  auto dst = out.bits_.mutable_words();
  auto src = other.bits_.words();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] |= src[i];
  return out;
}

bool VectorSet::intersects(const VectorSet& other) const {
  if (other.num_vars() != num_vars()) throw DimensionError("set intersection across dimensions");
  auto a = bits_.words();
  auto b = other.bits_.words();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] & b[i]) != 0) return true;
  }
  return false;
}

}  // namespace bentneg
