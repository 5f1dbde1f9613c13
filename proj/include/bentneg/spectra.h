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

#ifndef BENTNEG_SPECTRA_H_
#define BENTNEG_SPECTRA_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bentneg/bit_vector.h"
#include "bentneg/boolean_function.h"
#include "bentneg/vector_set.h"

namespace bentneg {

struct GaussianInteger {
  std::int64_t re = 0;
  std::int64_t im = 0;

  // i^k for any integer k.
  static GaussianInteger i_power(int k);

  std::int64_t norm() const { return re * re + im * im; }
  GaussianInteger conj() const { return {re, -im}; }
  GaussianInteger operator+(const GaussianInteger& o) const { return {re + o.re, im + o.im}; }
  GaussianInteger operator-(const GaussianInteger& o) const { return {re - o.re, im - o.im}; }
  GaussianInteger operator-() const { return {-re, -im}; }
  GaussianInteger operator*(const GaussianInteger& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianInteger operator*(std::int64_t s) const { return {re * s, im * s}; }
  GaussianInteger& operator+=(const GaussianInteger& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend bool operator==(const GaussianInteger&, const GaussianInteger&) = default;
};

std::string to_string(const GaussianInteger& z);

// W_f(u) for every u in F_2^n.
struct WalshSpectrum {
  int n = 0;
  std::vector<std::int64_t> values;

  std::int64_t operator[](std::uint64_t u) const { return values[u]; }
  // Sum of squares; Parseval gives 2^{2n} for a Boolean function.
  std::int64_t energy() const;
  friend bool operator==(const WalshSpectrum&, const WalshSpectrum&) = default;
};

// N_f(u) for every u in F_2^n.
struct NegaSpectrum {
  int n = 0;
  std::vector<GaussianInteger> values;

  const GaussianInteger& operator[](std::uint64_t u) const { return values[u]; }
  std::int64_t energy() const;
  friend bool operator==(const NegaSpectrum&, const NegaSpectrum&) = default;
};

// In-place unnormalized Walsh-Hadamard butterfly; data.size() is a power of 2.
void fwht_in_place(std::span<std::int64_t> data);

WalshSpectrum walsh_transform(const BooleanFunction& f);
NegaSpectrum nega_transform(const BooleanFunction& f);

// Sums restricted to x in t, evaluated directly at one point.
std::int64_t fragmentary_walsh(const BooleanFunction& f, const VectorSet& t,
                               const BitVector& u);
GaussianInteger fragmentary_nega(const BooleanFunction& f, const VectorSet& t,
                                 const BitVector& u);
// The same sums at every point through the butterfly.
WalshSpectrum fragmentary_walsh_spectrum(const BooleanFunction& f, const VectorSet& t);
NegaSpectrum fragmentary_nega_spectrum(const BooleanFunction& f, const VectorSet& t);

// Flatness verdicts. A witness is the first point breaking flatness.
struct Classification {
  bool is_bent = false;
  bool is_negabent = false;
  std::optional<std::uint64_t> bent_witness;
  std::optional<std::uint64_t> negabent_witness;
  std::string note;
};

Classification classify(const BooleanFunction& f);
Classification classify(const WalshSpectrum& walsh, const NegaSpectrum& nega);
// First u with W^2 != 2^n, or nullopt when flat. Odd n yields index 0.
std::optional<std::uint64_t> walsh_flatness_witness(const WalshSpectrum& walsh);
std::optional<std::uint64_t> nega_flatness_witness(const NegaSpectrum& nega);

// Throws NotBentError unless f is bent.
BooleanFunction dual(const BooleanFunction& f);
BooleanFunction dual_from_spectrum(const WalshSpectrum& walsh);

// A bijection of F_2^m given by its image table.
class Permutation {
 public:
  // Throws SpecError unless image is a bijection on 2^m points.
  Permutation(int m, std::vector<std::uint64_t> image);
  static Permutation identity(int m);

  int num_vars() const { return m_; }
  std::uint64_t operator()(std::uint64_t y) const { return image_[y]; }
  Permutation inverse() const;

 private:
  int m_;
  std::vector<std::uint64_t> image_;
};

// f(x, y) = x . pi(y) + phi(y) with x on variables 0..m-1 and y on m..2m-1.
BooleanFunction mm_function(const Permutation& pi, const BooleanFunction& phi);
// y . pi^{-1}(x) + phi(pi^{-1}(x)) in the same layout.
BooleanFunction mm_dual(const Permutation& pi, const BooleanFunction& phi);
bool is_weight_sum_invariant(const Permutation& pi);

// One line per point: hex index, tab, real part, and for nega spectra a tab
// and the imaginary part.
std::string format_spectrum(const WalshSpectrum& walsh);
std::string format_spectrum(const NegaSpectrum& nega);

}  // namespace bentneg

#endif  // BENTNEG_SPECTRA_H_
