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

#ifndef BENTNEG_BOOLEAN_FUNCTION_H_
#define BENTNEG_BOOLEAN_FUNCTION_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bentneg/packed_bits.h"
#include "bentneg/vector_set.h"

namespace bentneg {

class AnfPolynomial;
class BooleanFunction;
BooleanFunction xor_functions(const BooleanFunction& f, const BooleanFunction& g);
BooleanFunction characteristic_function(const VectorSet& s);
AnfPolynomial anf_from_truth_table(const BooleanFunction& f);
BooleanFunction truth_table_from_anf(const AnfPolynomial& p);

// f: F_2^n -> F_2 as a truth table. Entry i is f at the vector whose
// coordinate j is bit j of i, so the first variable varies fastest.
class BooleanFunction {
 public:
  // The zero function on n variables.
  explicit BooleanFunction(int n) : table_(n) {}

  static BooleanFunction constant(int n, bool value);
  template <typename Pred>
  static BooleanFunction from_predicate(int n, Pred&& pred) {
    BooleanFunction f(n);
    for (std::uint64_t x = 0; x < f.size(); ++x) {
      if (pred(x)) f.table_.set(x, true);
    }
    return f;
  }
  // values.size() must be 2^n; nonzero entries map to 1.
  static BooleanFunction from_values(int n, const std::vector<int>& values);
  // Hex digit d carries entries 4d..4d+3 with entry 4d in its least
  // significant bit. Tables shorter than four entries use one digit whose
  // unused high bits are zero.
  static BooleanFunction from_hex(int n, std::string_view hex);
  std::string to_hex() const;

  int num_vars() const { return table_.num_vars(); }
  std::uint64_t size() const { return table_.size(); }
  bool operator()(std::uint64_t x) const { return table_.get(x); }
  void set(std::uint64_t x, bool value) { table_.set(x, value); }
  void flip(std::uint64_t x) { table_.flip(x); }
  std::uint64_t weight() const { return table_.count(); }
  const PackedBits& bits() const { return table_; }

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

 private:
  friend AnfPolynomial anf_from_truth_table(const BooleanFunction& f);
  friend BooleanFunction truth_table_from_anf(const AnfPolynomial& p);
  friend BooleanFunction xor_functions(const BooleanFunction& f,
                                       const BooleanFunction& g);
  friend BooleanFunction characteristic_function(const VectorSet& s);

  PackedBits table_;
};

// Polynomial in F_2[x_0..x_{n-1}]/(x_i^2 + x_i); the coefficient of x^u is
// stored at index u.
class AnfPolynomial {
 public:
  // The zero polynomial.
  explicit AnfPolynomial(int n) : coeffs_(n) {}
  static AnfPolynomial from_monomials(int n, const std::vector<std::uint64_t>& masks);
  // Accepts `x<i>` factors joined by `*`, terms joined by `+`, the constant
  // `1`, and `0` for the zero polynomial. Whitespace is ignored. Repeated
  // terms cancel.
  static AnfPolynomial parse(int n, std::string_view text);

  int num_vars() const { return coeffs_.num_vars(); }
  bool coefficient(std::uint64_t mask) const { return coeffs_.get(mask); }
  // Adds x^mask over F_2.
  void add_monomial(std::uint64_t mask) { coeffs_.flip(mask); }
  AnfPolynomial& operator+=(const AnfPolynomial& other);
  friend AnfPolynomial operator+(AnfPolynomial a, const AnfPolynomial& b) {
    a += b;
    return a;
  }

  // Maximum monomial weight; 0 for the zero polynomial.
  int degree() const;
  std::uint64_t num_terms() const { return coeffs_.count(); }
  // Monomial masks in ascending order.
  std::vector<std::uint64_t> monomials() const;
  // Canonical text: ascending mask order, "0" for the zero polynomial.
  std::string to_string() const;

  friend bool operator==(const AnfPolynomial&, const AnfPolynomial&) = default;

 private:
  friend BooleanFunction truth_table_from_anf(const AnfPolynomial& p);
  friend AnfPolynomial anf_from_truth_table(const BooleanFunction& f);

  PackedBits coeffs_;
};

// Renders one monomial as `x<i>*x<j>...`, or `1` for the empty mask.
std::string monomial_to_string(std::uint64_t mask);

int algebraic_degree(const BooleanFunction& f);

// Throws DimensionError on mismatched n.
BooleanFunction xor_functions(const BooleanFunction& f, const BooleanFunction& g);
inline BooleanFunction operator^(const BooleanFunction& f, const BooleanFunction& g) {
  return xor_functions(f, g);
}
BooleanFunction characteristic_function(const VectorSet& s);

// x -> f(rho^l(x)) with rho^l(x) = (x_l, ..., x_{n-1}, x_0, ..., x_{l-1}).
// Throws DimensionError unless 0 <= l < n.
BooleanFunction cyclic_shift_action(const BooleanFunction& f, int l);
// Smallest l >= 1 with f(rho^l(x)) = f(x) for all x. This always divides n;
// constants give 1 and a function with no proper period gives n.
int rotation_symmetry_order(const BooleanFunction& f);

}  // namespace bentneg

#endif  // BENTNEG_BOOLEAN_FUNCTION_H_
