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

#ifndef BENTNEG_WORKED_EXAMPLES_H_
#define BENTNEG_WORKED_EXAMPLES_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bentneg/boolean_function.h"
#include "bentneg/constructions.h"

namespace bentneg {

// Parses sums of products such as "x0x1y2 + y3", where xi is variable i and
// yi is variable y_offset + i. A repeated term is a ParseError.
AnfPolynomial parse_xy_polynomial(int n, int y_offset, std::string_view text);

// The three reference constructions, numbered 1 to 3:
//   1: G4K, k = 2, gamma = 0001.
//   2: H4K2, k = 2, gamma = 1000,0101, E = 1,B.
//   3: F2RS_ORBIT, k = 2, gamma = 1111.
std::pair<Family, ConstructionParams> example_spec(int index);
// Expected full ANF; for example 3 this is f0 plus the listed terms.
AnfPolynomial expected_example_anf(int index);

struct ExampleOutcome {
  int index = 0;
  std::string label;
  bool pass = false;
  std::string details;
  double elapsed_ms = 0;
};

ExampleOutcome reproduce_example(int index);
std::vector<ExampleOutcome> reproduce_examples();

}  // namespace bentneg

#endif  // BENTNEG_WORKED_EXAMPLES_H_
