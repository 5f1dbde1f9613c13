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

#ifndef BENTNEG_SUBSPACES_H_
#define BENTNEG_SUBSPACES_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bentneg/bit_vector.h"
#include "bentneg/vector_set.h"

namespace bentneg {

// A linear subspace of F_2^n kept as a reduced echelon basis.
class LinearSubspace {
 public:
  // Spans the given generators; dependent ones are dropped.
  static LinearSubspace span(int n, const std::vector<BitVector>& generators);
  static LinearSubspace zero(int n) { return span(n, {}); }
  static LinearSubspace whole(int n);

  int ambient_dim() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::uint64_t>& basis() const { return basis_; }
  bool contains(std::uint64_t x) const { return reduce(x) == 0; }
  bool contains(const BitVector& x) const;
  // Reduction of x against the basis; two vectors share a coset iff their
  // reductions agree.
  std::uint64_t reduce(std::uint64_t x) const;
  std::vector<std::uint64_t> members() const;
  VectorSet to_vector_set() const;
  // Coset a + H as a set.
  VectorSet coset(std::uint64_t a) const;

  friend bool operator==(const LinearSubspace&, const LinearSubspace&) = default;

 private:
  LinearSubspace(int n, std::vector<std::uint64_t> basis) : n_(n), basis_(std::move(basis)) {}

  int n_ = 0;
  // Each vector has a distinct leading (highest) bit that no other has set.
  std::vector<std::uint64_t> basis_;
};

LinearSubspace orthogonal_complement(const LinearSubspace& h);
// One vector per coset of h, namely its member of minimal index, in
// ascending order.
std::vector<BitVector> coset_representatives(const LinearSubspace& h);

// A_{2d}^r and B_{2d}^r as r-fold concatenations of the two-word sets
// {0^{2d}, 1^{2d}} and {0^d 1^d, 1^d 0^d}.
struct RepetitionSets {
  VectorSet a;
  VectorSet b;
};
RepetitionSets repetition_sets(int d, int r);
// A_2^r as a subspace of F_2^{2r}: pairs (x_{2i}, x_{2i+1}) are equal.
LinearSubspace pair_repetition_subspace(int r);
// Membership in A_2^r and in B_2^r for a 2r-bit mask.
bool in_pair_repetition(std::uint64_t x, int r);
bool in_pair_alternation(std::uint64_t x, int r);

VectorSet orbit(const BitVector& x);
// Minimal-index member of every cyclic orbit of F_2^n, ascending.
std::vector<BitVector> orbit_representatives(int n);
// Minimal-index member of the orbit of x.
BitVector orbit_representative(const BitVector& x);

enum class ModifierFamily { kS1, kS2, kS3, kS4, kT };
enum class ESet { kZero, kOne, kBoth };

std::string to_string(ModifierFamily family);
std::string to_string(ESet e);
int e_set_size(ESet e);
bool e_set_contains(ESet e, int eps);

// Parameters of one modifier set. For S1, S3 and T each gamma has 2k
// coordinates; for S2 and S4 it has 4k. The first half is gamma1 and the
// second half gamma2.
struct GammaSpec {
  ModifierFamily family = ModifierFamily::kS1;
  int k = 1;
  std::vector<BitVector> gammas;
  // Aligned with gammas; present exactly for S3 and S4.
  std::vector<ESet> e_sets;
  // For T: require gammas to be a union of cyclic orbits.
  bool rotation_closed = false;

  // Throws SpecError on any violated shape or coset rule.
  void validate() const;
  int gamma_length() const;
  int ambient_dim() const;
};

VectorSet build_S1(const GammaSpec& spec);
VectorSet build_S2(const GammaSpec& spec);
VectorSet build_S3(const GammaSpec& spec);
VectorSet build_S4(const GammaSpec& spec);
VectorSet build_T(const GammaSpec& spec);
VectorSet build_modifier_set(const GammaSpec& spec);

// Comma-separated bit strings.
std::vector<BitVector> parse_gamma_list(std::string_view text);
std::string format_gamma_list(const std::vector<BitVector>& gammas);
// Comma-separated symbols from {0, 1, B}.
std::vector<ESet> parse_e_list(std::string_view text);
std::string format_e_list(const std::vector<ESet>& e_sets);

}  // namespace bentneg

#endif  // BENTNEG_SUBSPACES_H_
