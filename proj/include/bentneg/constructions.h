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

#ifndef BENTNEG_CONSTRUCTIONS_H_
#define BENTNEG_CONSTRUCTIONS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bentneg/bit_vector.h"
#include "bentneg/boolean_function.h"
#include "bentneg/subspaces.h"

namespace bentneg {

// Quadratic starting points. g0 and h0 take t, f0 takes k, and sigma2 takes
// the variable count n directly.
enum class BaseFamily { kG0, kH0, kF0, kSigma2 };

// g0 on 4t variables: x = 0..2t-1, y = 2t..4t-1.
// h0 on 4t+2 variables: x = 0..2t-1, x_m = 2t, y = 2t+1..4t, y_m = 4t+1.
// f0 on 4k variables: x = 0..2k-1, y = 2k..4k-1.
BooleanFunction base_function(BaseFamily family, int param);
// The same polynomials written monomial by monomial.
AnfPolynomial base_anf(BaseFamily family, int param);
// Duals of g0, h0 and f0 from their explicit formulas. Throws SpecError for
// sigma2.
BooleanFunction base_dual(BaseFamily family, int param);

// Construction families. F2RS takes orbit labels P and modifies f0 on T
// with gammas in the union of their orbits. F2RS_A takes a set A of orbit
// labels and adds the orbit-sum monomials directly. F2RS_ORBIT is the
// single-orbit case of F2RS_A with wt(gamma) >= 2.
enum class Family { kG4K, kG8K, kH4K2, kH8K2, kF2RS, kF2RSA, kF2RSOrbit };

std::string to_string(Family family);
// Accepts the canonical names and their lowercase forms with '-' or '_'.
Family parse_family(std::string_view name);

struct ConstructionParams {
  int k = 1;
  // G4K, G8K, H4K2, H8K2.
  std::vector<BitVector> gammas;
  // H4K2, H8K2.
  std::vector<ESet> e_sets;
  // F2RS.
  std::vector<BitVector> p;
  // F2RS_A.
  std::vector<BitVector> a_set;
  // F2RS_ORBIT.
  std::optional<BitVector> single_gamma;

  friend bool operator==(const ConstructionParams&, const ConstructionParams&) = default;
};

int family_num_vars(Family family, int k);
int family_max_degree(Family family, int k);
BaseFamily family_base(Family family);
int family_base_param(Family family, int k);

// Throws SpecError when params do not fit the family.
void validate_params(Family family, const ConstructionParams& params);
// The modifier set parameters the function is built from. For F2RS_A and
// F2RS_ORBIT the gammas are the support of the orbit-sum polynomial in
// z = x + y.
GammaSpec modifier_spec(Family family, const ConstructionParams& params);

AnfPolynomial closed_form_anf(Family family, const ConstructionParams& params);
BooleanFunction closed_form_dual(Family family, const ConstructionParams& params);
bool predicts_max_degree(Family family, const ConstructionParams& params);

struct ConstructedFunction {
  Family family;
  ConstructionParams params;
  GammaSpec modifier;
  BooleanFunction base;
  VectorSet modifier_set;
  BooleanFunction function;
  AnfPolynomial closed_anf;
  BooleanFunction closed_dual;
  bool predicts_max_degree = false;
  int max_degree = 0;
};

ConstructedFunction construct(Family family, const ConstructionParams& params);
// Human-readable label, for example "G4K k=2 gamma=0001".
std::string describe(Family family, const ConstructionParams& params);

}  // namespace bentneg

#endif  // BENTNEG_CONSTRUCTIONS_H_
