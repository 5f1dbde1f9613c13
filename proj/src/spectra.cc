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

#include "bentneg/spectra.h"

#include <algorithm>
#include <cstdio>
#include <string>

#include "bentneg/errors.h"

namespace bentneg {
namespace {

// i^{wt(x)} * (-1)^{bit} for a popcount w and a sign bit.
GaussianInteger twisted_unit(int w, bool negate) {
  GaussianInteger z = GaussianInteger::i_power(w);
  return negate ? -z : z;
}

void require_dims(const BooleanFunction& f, const VectorSet& t) {
  if (t.num_vars() != f.num_vars()) {
    throw DimensionError("modifier set over F_2^" + std::to_string(t.num_vars()) +
                         " used with a function on " + std::to_string(f.num_vars()) +
                         " variables");
  }
}

void require_point(const BooleanFunction& f, const BitVector& u) {
  if (u.size() != f.num_vars()) {
    throw DimensionError("point of length " + std::to_string(u.size()) +
                         " used with a function on " + std::to_string(f.num_vars()) +
                         " variables");
  }
}

// Butterflies over f restricted to the points where included(x) holds.
template <typename Included>
NegaSpectrum nega_butterfly(const BooleanFunction& f, Included&& included) {
  const std::uint64_t size = f.size();
  std::vector<std::int64_t> re(size, 0);
  std::vector<std::int64_t> im(size, 0);
  for (std::uint64_t x = 0; x < size; ++x) {
    if (!included(x)) continue;
    GaussianInteger z = twisted_unit(popcount(x), f(x));
    re[x] = z.re;
    im[x] = z.im;
  }
  fwht_in_place(re);
  fwht_in_place(im);
  NegaSpectrum out{f.num_vars(), std::vector<GaussianInteger>(size)};
  for (std::uint64_t u = 0; u < size; ++u) out.values[u] = {re[u], im[u]};
  return out;
}

template <typename Included>
WalshSpectrum walsh_butterfly(const BooleanFunction& f, Included&& included) {
  const std::uint64_t size = f.size();
  WalshSpectrum out{f.num_vars(), std::vector<std::int64_t>(size, 0)};
  for (std::uint64_t x = 0; x < size; ++x) {
    if (included(x)) out.values[x] = f(x) ? -1 : 1;
  }
  fwht_in_place(out.values);
  return out;
}

std::string hex_index(std::uint64_t u, int n) {
  int width = std::max(1, (n + 3) / 4);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%0*llx", width, static_cast<unsigned long long>(u));
  return buf;
}

}  // namespace

GaussianInteger GaussianInteger::i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return {1, 0};
    case 1:
      return {0, 1};
    case 2:
      return {-1, 0};
    default:
      return {0, -1};
  }
}

std::string to_string(const GaussianInteger& z) {
  if (z.im == 0) return std::to_string(z.re);
  std::string im = (z.im == 1 ? "" : z.im == -1 ? "-" : std::to_string(z.im)) + "i";
  if (z.re == 0) return im;
  return std::to_string(z.re) + (z.im > 0 ? "+" : "") + im;
}

std::int64_t WalshSpectrum::energy() const {
  std::int64_t total = 0;
  for (std::int64_t w : values) total += w * w;
  return total;
}

std::int64_t NegaSpectrum::energy() const {
  std::int64_t total = 0;
  for (const auto& z : values) total += z.norm();
  return total;
}

void fwht_in_place(std::span<std::int64_t> data) {
  const std::size_t size = data.size();
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * half) {
      for (std::size_t j = block; j < block + half; ++j) {
        const std::int64_t a = data[j];
        const std::int64_t b = data[j + half];
        data[j] = a + b;
        data[j + half] = a - b;
      }
    }
  }
}

WalshSpectrum walsh_transform(const BooleanFunction& f) {
  check_capacity(f.num_vars());
  return walsh_butterfly(f, [](std::uint64_t) { return true; });
}

NegaSpectrum nega_transform(const BooleanFunction& f) {
  check_capacity(f.num_vars());
  return nega_butterfly(f, [](std::uint64_t) { return true; });
}

std::int64_t fragmentary_walsh(const BooleanFunction& f, const VectorSet& t,
                               const BitVector& u) {
  require_dims(f, t);
  require_point(f, u);
  std::int64_t sum = 0;
  t.bits().for_each_set([&](std::uint64_t x) {
    sum += (f(x) ^ parity(x & u.bits())) ? -1 : 1;
  });
  return sum;
}

GaussianInteger fragmentary_nega(const BooleanFunction& f, const VectorSet& t,
                                 const BitVector& u) {
  require_dims(f, t);
  require_point(f, u);
  GaussianInteger sum;
  t.bits().for_each_set([&](std::uint64_t x) {
    sum += twisted_unit(popcount(x), f(x) ^ parity(x & u.bits()));
  });
  return sum;
}

WalshSpectrum fragmentary_walsh_spectrum(const BooleanFunction& f, const VectorSet& t) {
  require_dims(f, t);
  return walsh_butterfly(f, [&](std::uint64_t x) { return t.contains(x); });
}

NegaSpectrum fragmentary_nega_spectrum(const BooleanFunction& f, const VectorSet& t) {
  require_dims(f, t);
  return nega_butterfly(f, [&](std::uint64_t x) { return t.contains(x); });
}

std::optional<std::uint64_t> walsh_flatness_witness(const WalshSpectrum& walsh) {
  if (walsh.n % 2 != 0) return std::uint64_t{0};
  const std::int64_t target = std::int64_t{1} << walsh.n;
  for (std::uint64_t u = 0; u < walsh.values.size(); ++u) {
    if (walsh.values[u] * walsh.values[u] != target) return u;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> nega_flatness_witness(const NegaSpectrum& nega) {
  const std::int64_t target = std::int64_t{1} << nega.n;
  for (std::uint64_t u = 0; u < nega.values.size(); ++u) {
    if (nega.values[u].norm() != target) return u;
  }
  return std::nullopt;
}

Classification classify(const WalshSpectrum& walsh, const NegaSpectrum& nega) {
  Classification c;
  c.bent_witness = walsh_flatness_witness(walsh);
  c.negabent_witness = nega_flatness_witness(nega);
  c.is_bent = !c.bent_witness.has_value();
  c.is_negabent = !c.negabent_witness.has_value();
  if (walsh.n % 2 != 0) c.note = "bent is undefined for odd n";
  return c;
}

Classification classify(const BooleanFunction& f) {
  return classify(walsh_transform(f), nega_transform(f));
}

BooleanFunction dual_from_spectrum(const WalshSpectrum& walsh) {
  if (auto witness = walsh_flatness_witness(walsh)) {
    throw NotBentError("function is not bent: |W(" + std::to_string(*witness) +
                       ")| = " + std::to_string(std::llabs(walsh.values[*witness])));
  }
  return BooleanFunction::from_predicate(
      walsh.n, [&](std::uint64_t x) { return walsh.values[x] < 0; });
}

BooleanFunction dual(const BooleanFunction& f) {
  return dual_from_spectrum(walsh_transform(f));
}

Permutation::Permutation(int m, std::vector<std::uint64_t> image)
    : m_(m), image_(std::move(image)) {
  check_capacity(m);
  const std::uint64_t size = std::uint64_t{1} << m;
  if (image_.size() != size) {
    throw SpecError("permutation table needs " + std::to_string(size) + " entries");
  }
  std::vector<bool> seen(size, false);
  for (std::uint64_t y : image_) {
    if (y >= size || seen[y]) throw SpecError("permutation table is not a bijection");
    seen[y] = true;
  }
}

Permutation Permutation::identity(int m) {
  check_capacity(m);
  std::vector<std::uint64_t> image(std::uint64_t{1} << m);
  for (std::uint64_t y = 0; y < image.size(); ++y) image[y] = y;
  return Permutation(m, std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint64_t> inv(image_.size());
  for (std::uint64_t y = 0; y < image_.size(); ++y) inv[image_[y]] = y;
  return Permutation(m_, std::move(inv));
}

BooleanFunction mm_function(const Permutation& pi, const BooleanFunction& phi) {
  const int m = pi.num_vars();
  if (phi.num_vars() != m) throw DimensionError("phi must have as many variables as pi");
  const std::uint64_t lo = low_mask(m);
  return BooleanFunction::from_predicate(2 * m, [&](std::uint64_t z) {
    const std::uint64_t x = z & lo;
    const std::uint64_t y = z >> m;
    return static_cast<bool>(parity(x & pi(y)) ^ phi(y));
  });
}

BooleanFunction mm_dual(const Permutation& pi, const BooleanFunction& phi) {
  const int m = pi.num_vars();
  if (phi.num_vars() != m) throw DimensionError("phi must have as many variables as pi");
  const Permutation inv = pi.inverse();
  const std::uint64_t lo = low_mask(m);
  return BooleanFunction::from_predicate(2 * m, [&](std::uint64_t z) {
    const std::uint64_t x = z & lo;
    const std::uint64_t y = z >> m;
    const std::uint64_t px = inv(x);
    return static_cast<bool>(parity(y & px) ^ phi(px));
  });
}

bool is_weight_sum_invariant(const Permutation& pi) {
  const std::uint64_t size = std::uint64_t{1} << pi.num_vars();
  for (std::uint64_t x = 0; x < size; ++x) {
    for (std::uint64_t y = x + 1; y < size; ++y) {
      if (popcount(x ^ y) != popcount(pi(x) ^ pi(y))) return false;
    }
  }
  return true;
}

std::string format_spectrum(const WalshSpectrum& walsh) {
  std::string out;
  for (std::uint64_t u = 0; u < walsh.values.size(); ++u) {
    out += hex_index(u, walsh.n) + '\t' + std::to_string(walsh.values[u]) + '\n';
  }
  return out;
}

std::string format_spectrum(const NegaSpectrum& nega) {
  std::string out;
  for (std::uint64_t u = 0; u < nega.values.size(); ++u) {
    out += hex_index(u, nega.n) + '\t' + std::to_string(nega.values[u].re) + '\t' +
           std::to_string(nega.values[u].im) + '\n';
  }
  return out;
}

}  // namespace bentneg
