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

#include "bentneg/worked_examples.h"

#include <chrono>
#include <string>

#include "bentneg/constructions.h"
#include "bentneg/errors.h"
#include "bentneg/spectra.h"

namespace bentneg {
namespace {

// Printed polynomials, x_i written xi and y_i written yi.
constexpr const char* kExample1 =
    "x0x1y0y1 + x0x1y0y3 + x0x1y1y2 + x0x1y1 + x0x1y2y3 + x0x1y3 + x0x3y0y1 + "
    "x0x3y0y3 + x0x3y1y2 + x0x3y1 + x0x3y2y3 + x0x3y3 + x0y0y1 + x0y0y3 + "
    "x0y0 + x0y1y2 + x0y1 + x0y2y3 + x0y3 + x1x2y0y1 + x1x2y0y3 + x1x2y1y2 + "
    "x1x2y1 + x1x2y2y3 + x1x2y3 + x1y0y1 + x1y0y3 + x1y1y2 + x1y2y3 + x1y3 + "
    "x2x3y0y1 + x2x3y0y3 + x2x3y1y2 + x2x3y1 + x2x3y2y3 + x2x3y3 + x2y0y1 + "
    "x2y0y3 + x2y1y2 + x2y1 + x2y2y3 + x2y2 + x2y3 + x3y0y1 + x3y0y3 + "
    "x3y1y2 + x3y1 + x3y2y3 + y0y1 + y0y2 + y0y3 + y1y2 + y1y3 + y1 + y2y3 + "
    "y3";

constexpr const char* kExample2 =
    "x0x1y0y1y4 + x0x1y0y1 + x0x1y0y3y4 + x0x1y0y3 + x0x1y0y4 + x0x1y1y2y4 + "
    "x0x1y1y2 + x0x1y1y4 + x0x1y1 + x0x1y2y3y4 + x0x1y2y3 + x0x1y2y4 + "
    "x0x1y3y4 + x0x1y3 + x0x1y4 + x0x3y0y1y4 + x0x3y0y1 + x0x3y0y3y4 + "
    "x0x3y0y3 + x0x3y0y4 + x0x3y1y2y4 + x0x3y1y2 + x0x3y1y4 + x0x3y1 + "
    "x0x3y2y3y4 + x0x3y2y3 + x0x3y2y4 + x0x3y3y4 + x0x3y3 + x0x3y4 + "
    "x0y0y1y4 + x0y0y3y4 + x0y0y4 + x0y0 + x0y1y2y4 + x0y1y4 + x0y2y3y4 + "
    "x0y2y4 + x0y3y4 + x1x2y0y1y4 + x1x2y0y1 + x1x2y0y3y4 + x1x2y0y3 + "
    "x1x2y0y4 + x1x2y1y2y4 + x1x2y1y2 + x1x2y1y4 + x1x2y1 + x1x2y2y3y4 + "
    "x1x2y2y3 + x1x2y2y4 + x1x2y3y4 + x1x2y3 + x1x2y4 + x1y0y1 + x1y0y3 + "
    "x1y1y2 + x1y2y3 + x1y3 + x2x3y0y1y4 + x2x3y0y1 + x2x3y0y3y4 + x2x3y0y3 + "
    "x2x3y0y4 + x2x3y1y2y4 + x2x3y1y2 + x2x3y1y4 + x2x3y1 + x2x3y2y3y4 + "
    "x2x3y2y3 + x2x3y2y4 + x2x3y3y4 + x2x3y3 + x2x3y4 + x2y0y1y4 + x2y0y3y4 + "
    "x2y0y4 + x2y1y2y4 + x2y1y4 + x2y2y3y4 + x2y2y4 + x2y2 + x2y3y4 + x2y4 + "
    "x3y0y1 + x3y0y3 + x3y1y2 + x3y1 + x3y2y3 + x4y4 + y0y2 + y1y3";

// Terms added to f0.
constexpr const char* kExample3Delta =
    "x0x1x2x3 + x0x1x2y3 + x0x1x3y2 + x0x2x3y1 + x1x2x3y0 + x0x1y2y3 + "
    "x0x2y1y3 + x0x3y1y2 + x1x2y0y3 + x1x3y0y2 + x2x3y0y1 + x0y1y2y3 + "
    "x1y0y2y3 + x2y0y1y3 + x3y0y1y2 + y0y1y2y3";

}  // namespace

AnfPolynomial parse_xy_polynomial(int n, int y_offset, std::string_view text) {
  AnfPolynomial p(n);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('+', pos);
    if (end == std::string_view::npos) end = text.size();
    std::uint64_t mask = 0;
    bool any = false;
    std::size_t i = pos;
    while (i < end) {
      const char c = text[i];
      if (c == ' ') {
        ++i;
        continue;
      }
      if (c != 'x' && c != 'y') {
        throw ParseError("unexpected character '" + std::string(1, c) + "' in polynomial");
      }
      std::size_t j = i + 1;
      while (j < end && text[j] >= '0' && text[j] <= '9') ++j;
      if (j == i + 1) throw ParseError("variable without index in polynomial");
      const int index = std::stoi(std::string(text.substr(i + 1, j - i - 1)));
      const int var = c == 'x' ? index : y_offset + index;
      if (var >= n) throw ParseError("variable index beyond n in polynomial");
      mask |= std::uint64_t{1} << var;
      any = true;
      i = j;
    }
    if (!any) throw ParseError("empty term in polynomial");
    if (p.coefficient(mask)) throw ParseError("repeated term in polynomial");
    p.add_monomial(mask);
    pos = end + 1;
  }
  return p;
}

std::pair<Family, ConstructionParams> example_spec(int index) {
  ConstructionParams params;
  params.k = 2;
  switch (index) {
    case 1:
      params.gammas = {BitVector::parse("0001")};
      return {Family::kG4K, params};
    case 2:
      params.gammas = {BitVector::parse("1000"), BitVector::parse("0101")};
      params.e_sets = {ESet::kOne, ESet::kBoth};
      return {Family::kH4K2, params};
    case 3:
      params.single_gamma = BitVector::parse("1111");
      return {Family::kF2RSOrbit, params};
    default:
      throw SpecError("example index must be 1, 2 or 3");
  }
}

AnfPolynomial expected_example_anf(int index) {
  switch (index) {
    case 1:
      return parse_xy_polynomial(8, 4, kExample1);
    case 2:
      return parse_xy_polynomial(10, 5, kExample2);
    case 3:
      return base_anf(BaseFamily::kF0, 2) + parse_xy_polynomial(8, 4, kExample3Delta);
    default:
      throw SpecError("example index must be 1, 2 or 3");
  }
}

ExampleOutcome reproduce_example(int index) {
  const auto start = std::chrono::steady_clock::now();
  const auto [family, params] = example_spec(index);
  ExampleOutcome out;
  out.index = index;
  out.label = "example " + std::to_string(index) + " (" + describe(family, params) + ")";
  const ConstructedFunction cf = construct(family, params);
  const Classification c = classify(cf.function);
  const AnfPolynomial anf = anf_from_truth_table(cf.function);
  const AnfPolynomial expected = expected_example_anf(index);
  std::vector<std::string> failures;
  if (!c.is_bent) failures.push_back("not bent");
  if (!c.is_negabent) failures.push_back("not negabent");
  const int want_degree = index == 2 ? 5 : 4;
  if (anf.degree() != want_degree) {
    failures.push_back("degree " + std::to_string(anf.degree()) + " != " +
                       std::to_string(want_degree));
  }
  if (anf != expected) {
    const AnfPolynomial diff = anf + expected;
    failures.push_back("ANF differs in " + std::to_string(diff.num_terms()) + " terms");
  }
  if (index == 3) {
    const int order = rotation_symmetry_order(cf.function);
    if (order != 2) failures.push_back("rotation order " + std::to_string(order));
  }
  out.pass = failures.empty();
  if (out.pass) {
    out.details = "bent-negabent, degree " + std::to_string(anf.degree()) + ", " +
                  std::to_string(anf.num_terms()) + " ANF terms match";
    if (index == 3) out.details += ", rotation order 2";
  } else {
    for (const auto& f : failures) out.details += (out.details.empty() ? "" : "; ") + f;
  }
  out.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return out;
}

std::vector<ExampleOutcome> reproduce_examples() {
  return {reproduce_example(1), reproduce_example(2), reproduce_example(3)};
}

}  // namespace bentneg
