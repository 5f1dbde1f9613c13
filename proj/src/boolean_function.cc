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

#include "bentneg/boolean_function.h"

#include <algorithm>
#include <cctype>
#include <string>

#include "bentneg/bit_vector.h"
#include "bentneg/errors.h"

namespace bentneg {
namespace {

std::size_t hex_digits(int n) {
  return n < 2 ? 1 : (std::size_t{1} << (n - 2));
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

BooleanFunction BooleanFunction::constant(int n, bool value) {
  BooleanFunction f(n);
  if (value) f.table_.fill();
  return f;
}

BooleanFunction BooleanFunction::from_values(int n, const std::vector<int>& values) {
  BooleanFunction f(n);
  if (values.size() != f.size()) {
    throw DimensionError("expected " + std::to_string(f.size()) +
                         " table entries, got " + std::to_string(values.size()));
  }
  for (std::uint64_t x = 0; x < f.size(); ++x) f.table_.set(x, values[x] != 0);
  return f;
}

BooleanFunction BooleanFunction::from_hex(int n, std::string_view hex) {
  BooleanFunction f(n);
  const std::size_t digits = hex_digits(n);
  if (hex.size() != digits) {
    throw ParseError("truth table for n = " + std::to_string(n) + " needs " +
                     std::to_string(digits) + " hex digits, got " +
                     std::to_string(hex.size()));
  }
  for (std::size_t d = 0; d < digits; ++d) {
    int v = hex_value(hex[d]);
    if (v < 0) throw ParseError("invalid hex digit '" + std::string(1, hex[d]) + "'");
    for (int b = 0; b < 4; ++b) {
      if (((v >> b) & 1) == 0) continue;
      std::uint64_t x = 4 * d + static_cast<std::uint64_t>(b);
      if (x >= f.size()) throw ParseError("hex table sets bits beyond 2^n entries");
      f.table_.set(x, true);
    }
  }
  return f;
}

std::string BooleanFunction::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t digits = hex_digits(num_vars());
  std::string out(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    int v = 0;
    for (int b = 0; b < 4; ++b) {
      std::uint64_t x = 4 * d + static_cast<std::uint64_t>(b);
      if (x < size() && table_.get(x)) v |= 1 << b;
    }
    out[d] = kDigits[v];
  }
  return out;
}

AnfPolynomial AnfPolynomial::from_monomials(int n, const std::vector<std::uint64_t>& masks) {
  AnfPolynomial p(n);
  for (std::uint64_t m : masks) {
    if ((m & ~low_mask(n)) != 0) {
      throw DimensionError("monomial uses a variable beyond n = " + std::to_string(n));
    }
    p.add_monomial(m);
  }
  return p;
}

AnfPolynomial AnfPolynomial::parse(int n, std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.empty()) throw ParseError("empty polynomial");
  AnfPolynomial p(n);
  if (compact == "0") return p;
  std::size_t pos = 0;
  while (pos <= compact.size()) {
    std::size_t end = compact.find('+', pos);
    if (end == std::string::npos) end = compact.size();
    std::string_view term(compact.data() + pos, end - pos);
    if (term.empty()) throw ParseError("empty term in polynomial '" + std::string(text) + "'");
    std::uint64_t mask = 0;
    if (term != "1") {
      std::size_t fpos = 0;
      while (fpos <= term.size()) {
        std::size_t fend = term.find('*', fpos);
        if (fend == std::string_view::npos) fend = term.size();
        std::string_view factor = term.substr(fpos, fend - fpos);
        if (factor.size() < 2 || factor[0] != 'x' ||
            !std::all_of(factor.begin() + 1, factor.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
            factor.size() > 4) {
          throw ParseError("invalid factor '" + std::string(factor) + "'");
        }
        int var = std::stoi(std::string(factor.substr(1)));
        if (var >= n) {
          throw ParseError("variable x" + std::to_string(var) + " outside n = " +
                           std::to_string(n));
        }
        mask |= std::uint64_t{1} << var;
        fpos = fend + 1;
      }
    }
    p.add_monomial(mask);
    pos = end + 1;
  }
  return p;
}

AnfPolynomial& AnfPolynomial::operator+=(const AnfPolynomial& other) {
  coeffs_.xor_with(other.coeffs_);
  return *this;
}

int AnfPolynomial::degree() const {
  int d = 0;
  coeffs_.for_each_set([&](std::uint64_t m) { d = std::max(d, popcount(m)); });
  return d;
}

std::vector<std::uint64_t> AnfPolynomial::monomials() const {
  std::vector<std::uint64_t> out;
  coeffs_.for_each_set([&](std::uint64_t m) { out.push_back(m); });
  return out;
}

std::string monomial_to_string(std::uint64_t mask) {
  if (mask == 0) return "1";
  std::string out;
  for (int i = 0; i < 64; ++i) {
    if (((mask >> i) & 1) == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
  }
  return out;
}

std::string AnfPolynomial::to_string() const {
  std::string out;
  coeffs_.for_each_set([&](std::uint64_t m) {
    if (!out.empty()) out += '+';
    out += monomial_to_string(m);
  });
  return out.empty() ? "0" : out;
}

AnfPolynomial anf_from_truth_table(const BooleanFunction& f) {
  AnfPolynomial p(f.num_vars());
  p.coeffs_ = f.table_;
  moebius_in_place(p.coeffs_);
  return p;
}

BooleanFunction truth_table_from_anf(const AnfPolynomial& p) {
  BooleanFunction f(p.num_vars());
  f.table_ = p.coeffs_;
  moebius_in_place(f.table_);
  return f;
}

int algebraic_degree(const BooleanFunction& f) {
  return anf_from_truth_table(f).degree();
}

BooleanFunction xor_functions(const BooleanFunction& f, const BooleanFunction& g) {
  if (f.num_vars() != g.num_vars()) {
    throw DimensionError("cannot add functions on " + std::to_string(f.num_vars()) +
                         " and " + std::to_string(g.num_vars()) + " variables");
  }
  BooleanFunction out = f;
  out.table_.xor_with(g.table_);
  return out;
}

BooleanFunction characteristic_function(const VectorSet& s) {
  BooleanFunction f(s.num_vars());
  f.table_ = s.bits();
  return f;
}

BooleanFunction cyclic_shift_action(const BooleanFunction& f, int l) {
  const int n = f.num_vars();
  if (l < 0 || (n > 0 && l >= n) || (n == 0 && l != 0)) {
    throw DimensionError("shift " + std::to_string(l) + " outside [0, " +
                         std::to_string(n - 1) + "]");
  }
  return BooleanFunction::from_predicate(
      n, [&](std::uint64_t x) { return f(rotate_mask(x, l, n)); });
}

int rotation_symmetry_order(const BooleanFunction& f) {
  const int n = f.num_vars();
  for (int l = 1; l < n; ++l) {
    if (n % l != 0) continue;
    bool invariant = true;
    for (std::uint64_t x = 0; x < f.size() && invariant; ++x) {
      invariant = f(rotate_mask(x, l, n)) == f(x);
    }
    if (invariant) return l;
  }
  return std::max(n, 1);
}

}  // namespace bentneg
