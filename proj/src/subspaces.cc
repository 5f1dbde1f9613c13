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

#include "bentneg/subspaces.h"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "bentneg/errors.h"
#include "bentneg/packed_bits.h"

namespace bentneg {
namespace {

constexpr std::uint64_t kEvenBits = 0x5555555555555555ULL;

int lead_bit(std::uint64_t x) { return 63 - std::countl_zero(x); }

std::string family_error(const GammaSpec& spec, const std::string& what) {
  return to_string(spec.family) + " spec with k = " + std::to_string(spec.k) + ": " + what;
}

void require_family(const GammaSpec& spec, ModifierFamily family) {
  if (spec.family != family) {
    throw SpecError("builder for " + to_string(family) + " received a " +
                    to_string(spec.family) + " spec");
  }
  spec.validate();
}

// Pair parities (x_{2i} + x_{2i+1}) packed into r bits; equal keys mean the
// same coset of A_2^r.
std::uint64_t pair_coset_key(std::uint64_t x, int r) {
  std::uint64_t diff = (x ^ (x >> 1)) & kEvenBits & low_mask(2 * r);
  std::uint64_t key = 0;
  for (int i = 0; i < r; ++i) key |= ((diff >> (2 * i)) & 1) << i;
  return key;
}

// Members of A_2^r: each bit of a selects one pair to be 11.
std::uint64_t spread_pairs(std::uint64_t a, int r) {
  std::uint64_t x = 0;
  for (int i = 0; i < r; ++i) {
    if ((a >> i) & 1) x |= std::uint64_t{3} << (2 * i);
  }
  return x;
}

}  // namespace

LinearSubspace LinearSubspace::span(int n, const std::vector<BitVector>& generators) {
  if (n < 0 || n > 64) throw DimensionError("subspace dimension outside [0, 64]");
  std::vector<std::uint64_t> basis;
  for (const auto& g : generators) {
    if (g.size() != n) throw DimensionError("generator length differs from ambient dimension");
    std::uint64_t x = g.bits();
    for (std::uint64_t b : basis) {
      if ((x >> lead_bit(b)) & 1) x ^= b;
    }
    if (x == 0) continue;
    const int lead = lead_bit(x);
    for (auto& b : basis) {
      if ((b >> lead) & 1) b ^= x;
    }
    basis.push_back(x);
  }
  std::sort(basis.begin(), basis.end(), std::greater<>());
  return LinearSubspace(n, std::move(basis));
}

LinearSubspace LinearSubspace::whole(int n) {
  std::vector<BitVector> gens;
  for (int i = 0; i < n; ++i) gens.emplace_back(n, std::uint64_t{1} << i);
  return span(n, gens);
}

bool LinearSubspace::contains(const BitVector& x) const {
  if (x.size() != n_) throw DimensionError("vector length differs from ambient dimension");
  return contains(x.bits());
}

std::uint64_t LinearSubspace::reduce(std::uint64_t x) const {
  for (std::uint64_t b : basis_) {
    if ((x >> lead_bit(b)) & 1) x ^= b;
  }
  return x;
}

std::vector<std::uint64_t> LinearSubspace::members() const {
  std::vector<std::uint64_t> out;
  const std::uint64_t count = std::uint64_t{1} << basis_.size();
  out.reserve(count);
  for (std::uint64_t c = 0; c < count; ++c) {
    std::uint64_t x = 0;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if ((c >> i) & 1) x ^= basis_[i];
    }
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

VectorSet LinearSubspace::to_vector_set() const { return VectorSet::from_members(n_, members()); }

VectorSet LinearSubspace::coset(std::uint64_t a) const {
  VectorSet s(n_);
  for (std::uint64_t h : members()) s.insert(a ^ h);
  return s;
}

LinearSubspace orthogonal_complement(const LinearSubspace& h) {
  const int n = h.ambient_dim();
  std::uint64_t leads = 0;
  for (std::uint64_t b : h.basis()) leads |= std::uint64_t{1} << lead_bit(b);
  std::vector<BitVector> gens;
  for (int f = 0; f < n; ++f) {
    if ((leads >> f) & 1) continue;
    // x_f = 1, other free coordinates 0, each lead coordinate fixed so that
    // its basis vector is orthogonal to x.
    std::uint64_t x = std::uint64_t{1} << f;
    for (std::uint64_t b : h.basis()) {
      if ((b >> f) & 1) x |= std::uint64_t{1} << lead_bit(b);
    }
    gens.emplace_back(n, x);
  }
  return LinearSubspace::span(n, gens);
}

std::vector<BitVector> coset_representatives(const LinearSubspace& h) {
  const int n = h.ambient_dim();
  check_capacity(n);
  std::vector<BitVector> reps;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    if (h.reduce(x) == x) reps.emplace_back(n, x);
  }
  return reps;
}

RepetitionSets repetition_sets(int d, int r) {
  if (d < 1 || r < 1) throw SpecError("repetition sets need d >= 1 and r >= 1");
  const int n = 2 * d * r;
  check_capacity(n);
  const std::uint64_t block_all = low_mask(2 * d);
  const std::uint64_t block_low = low_mask(d);
  const std::uint64_t block_high = block_low << d;
  RepetitionSets out{VectorSet(n), VectorSet(n)};
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << r); ++c) {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    for (int i = 0; i < r; ++i) {
      const bool bit = (c >> i) & 1;
      if (bit) a |= block_all << (2 * d * i);
      b |= (bit ? block_low : block_high) << (2 * d * i);
    }
    out.a.insert(a);
    out.b.insert(b);
  }
  return out;
}

LinearSubspace pair_repetition_subspace(int r) {
  std::vector<BitVector> gens;
  for (int i = 0; i < r; ++i) gens.emplace_back(2 * r, std::uint64_t{3} << (2 * i));
  return LinearSubspace::span(2 * r, gens);
}

bool in_pair_repetition(std::uint64_t x, int r) {
  return ((x ^ (x >> 1)) & kEvenBits & low_mask(2 * r)) == 0;
}

bool in_pair_alternation(std::uint64_t x, int r) {
  const std::uint64_t evens = kEvenBits & low_mask(2 * r);
  return ((x ^ (x >> 1)) & evens) == evens;
}

VectorSet orbit(const BitVector& x) {
  const int n = x.size();
  if (n < 1) throw DimensionError("orbit of an empty vector");
  check_capacity(n);
  VectorSet s(n);
  for (int l = 0; l < n; ++l) s.insert(rotate_mask(x.bits(), l, n));
  return s;
}

BitVector orbit_representative(const BitVector& x) {
  std::uint64_t best = x.bits();
  for (int l = 1; l < x.size(); ++l) best = std::min(best, rotate_mask(x.bits(), l, x.size()));
  return BitVector(x.size(), best);
}

std::vector<BitVector> orbit_representatives(int n) {
  if (n < 1) throw DimensionError("orbit representatives need n >= 1");
  check_capacity(n);
  std::vector<BitVector> reps;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    bool minimal = true;
    for (int l = 1; l < n && minimal; ++l) minimal = rotate_mask(x, l, n) >= x;
    if (minimal) reps.emplace_back(n, x);
  }
  return reps;
}

std::string to_string(ModifierFamily family) {
  switch (family) {
    case ModifierFamily::kS1:
      return "S1";
    case ModifierFamily::kS2:
      return "S2";
    case ModifierFamily::kS3:
      return "S3";
    case ModifierFamily::kS4:
      return "S4";
    case ModifierFamily::kT:
      return "T";
  }
  return "?";
}

std::string to_string(ESet e) {
  switch (e) {
    case ESet::kZero:
      return "0";
    case ESet::kOne:
      return "1";
    case ESet::kBoth:
      return "B";
  }
  return "?";
}

int e_set_size(ESet e) { return e == ESet::kBoth ? 2 : 1; }

bool e_set_contains(ESet e, int eps) {
  return e == ESet::kBoth || (e == ESet::kOne) == (eps == 1);
}

int GammaSpec::gamma_length() const {
  return (family == ModifierFamily::kS2 || family == ModifierFamily::kS4) ? 4 * k : 2 * k;
}

int GammaSpec::ambient_dim() const {
  switch (family) {
    case ModifierFamily::kS1:
    case ModifierFamily::kT:
      return 4 * k;
    case ModifierFamily::kS2:
      return 8 * k;
    case ModifierFamily::kS3:
      return 4 * k + 2;
    case ModifierFamily::kS4:
      return 8 * k + 2;
  }
  return 0;
}

void GammaSpec::validate() const {
  if (k < 1) throw SpecError(family_error(*this, "k must be at least 1"));
  if (ambient_dim() > 64) throw CapacityError(family_error(*this, "k too large"));
  check_capacity(ambient_dim());
  if (gammas.empty()) throw SpecError(family_error(*this, "gamma list is empty"));
  const int len = gamma_length();
  std::set<std::uint64_t> seen;
  for (const auto& g : gammas) {
    if (g.size() != len) {
      throw SpecError(family_error(*this, "gamma " + g.to_string() + " has length " +
                                              std::to_string(g.size()) + ", expected " +
                                              std::to_string(len)));
    }
    if (!seen.insert(g.bits()).second) {
      throw SpecError(family_error(*this, "duplicate gamma " + g.to_string()));
    }
  }
  const bool wants_e = family == ModifierFamily::kS3 || family == ModifierFamily::kS4;
  if (wants_e && e_sets.size() != gammas.size()) {
    throw SpecError(family_error(*this, "needs one E set per gamma, got " +
                                            std::to_string(e_sets.size()) + " for " +
                                            std::to_string(gammas.size()) + " gammas"));
  }
  if (!wants_e && !e_sets.empty()) {
    throw SpecError(family_error(*this, "E sets apply only to S3 and S4"));
  }
  if (family == ModifierFamily::kS2 || family == ModifierFamily::kS4) {
    std::set<std::uint64_t> keys;
    for (const auto& g : gammas) {
      if (!keys.insert(pair_coset_key(g.bits(), 2 * k)).second) {
        throw SpecError(family_error(
            *this, "gamma " + g.to_string() + " shares a coset of A_2^" +
                       std::to_string(2 * k) + " with an earlier gamma"));
      }
    }
  }
  if (family != ModifierFamily::kT && rotation_closed) {
    throw SpecError(family_error(*this, "rotation closure applies only to T"));
  }
  if (family == ModifierFamily::kT && rotation_closed) {
    for (const auto& g : gammas) {
      for (int l = 1; l < len; ++l) {
        if (!seen.contains(rotate_mask(g.bits(), l, len))) {
          throw SpecError(family_error(*this, "gamma set is not a union of orbits; " +
                                                  g.rotated(l).to_string() + " is missing"));
        }
      }
    }
  }
}

VectorSet build_S1(const GammaSpec& spec) {
  require_family(spec, ModifierFamily::kS1);
  const int k = spec.k;
  VectorSet s(4 * k);
  for (const auto& g : spec.gammas) {
    const std::uint64_t g1 = g.bits() & low_mask(k);
    const std::uint64_t g2 = g.bits() >> k;
    for (std::uint64_t xp = 0; xp < (std::uint64_t{1} << k); ++xp) {
      const std::uint64_t x = xp | ((xp ^ g1) << k);
      for (std::uint64_t yp = 0; yp < (std::uint64_t{1} << k); ++yp) {
        const std::uint64_t y = yp | ((yp ^ g2) << k);
        s.insert(x | (y << (2 * k)));
      }
    }
  }
  return s;
}

VectorSet build_S2(const GammaSpec& spec) {
  require_family(spec, ModifierFamily::kS2);
  const int k = spec.k;
  const int r = 2 * k;
  VectorSet s(8 * k);
  for (const auto& g : spec.gammas) {
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << r); ++a) {
      const std::uint64_t x = spread_pairs(a, r);
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << r); ++b) {
        const std::uint64_t y = g.bits() ^ spread_pairs(b, r);
        s.insert(x | (y << (4 * k)));
      }
    }
  }
  return s;
}

VectorSet build_S3(const GammaSpec& spec) {
  require_family(spec, ModifierFamily::kS3);
  const int k = spec.k;
  const int m = 2 * k;
  VectorSet s(4 * k + 2);
  for (std::size_t i = 0; i < spec.gammas.size(); ++i) {
    const std::uint64_t g1 = spec.gammas[i].bits() & low_mask(k);
    const std::uint64_t g2 = spec.gammas[i].bits() >> k;
    for (std::uint64_t xp = 0; xp < (std::uint64_t{1} << k); ++xp) {
      const std::uint64_t x = xp | ((xp ^ g1) << k);
      for (std::uint64_t yp = 0; yp < (std::uint64_t{1} << k); ++yp) {
        const std::uint64_t y = yp | ((yp ^ g2) << k);
        for (int xm = 0; xm < 2; ++xm) {
          for (int ym = 0; ym < 2; ++ym) {
            if (!e_set_contains(spec.e_sets[i], ym)) continue;
            const std::uint64_t big_x = x | (std::uint64_t(xm) << m);
            const std::uint64_t big_y = y | (std::uint64_t(ym) << m);
            s.insert(big_x | (big_y << (m + 1)));
          }
        }
      }
    }
  }
  return s;
}

VectorSet build_S4(const GammaSpec& spec) {
  require_family(spec, ModifierFamily::kS4);
  const int k = spec.k;
  const int r = 2 * k;
  const int m = 4 * k;
  VectorSet s(8 * k + 2);
  for (std::size_t i = 0; i < spec.gammas.size(); ++i) {
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << r); ++a) {
      const std::uint64_t x = spread_pairs(a, r);
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << r); ++b) {
        const std::uint64_t y = spec.gammas[i].bits() ^ spread_pairs(b, r);
        for (int xm = 0; xm < 2; ++xm) {
          for (int ym = 0; ym < 2; ++ym) {
            if (!e_set_contains(spec.e_sets[i], ym)) continue;
            const std::uint64_t big_x = x | (std::uint64_t(xm) << m);
            const std::uint64_t big_y = y | (std::uint64_t(ym) << m);
            s.insert(big_x | (big_y << (m + 1)));
          }
        }
      }
    }
  }
  return s;
}

VectorSet build_T(const GammaSpec& spec) {
  require_family(spec, ModifierFamily::kT);
  const int k = spec.k;
  VectorSet s(4 * k);
  for (const auto& g : spec.gammas) {
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << (2 * k)); ++x) {
      s.insert(x | ((x ^ g.bits()) << (2 * k)));
    }
  }
  return s;
}

VectorSet build_modifier_set(const GammaSpec& spec) {
  switch (spec.family) {
    case ModifierFamily::kS1:
      return build_S1(spec);
    case ModifierFamily::kS2:
      return build_S2(spec);
    case ModifierFamily::kS3:
      return build_S3(spec);
    case ModifierFamily::kS4:
      return build_S4(spec);
    case ModifierFamily::kT:
      return build_T(spec);
  }
  throw SpecError("unknown modifier family");
}

std::vector<BitVector> parse_gamma_list(std::string_view text) {
  std::vector<BitVector> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    out.push_back(BitVector::parse(item));
    pos = end + 1;
  }
  return out;
}

std::string format_gamma_list(const std::vector<BitVector>& gammas) {
  std::string out;
  for (const auto& g : gammas) {
    if (!out.empty()) out += ',';
    out += g.to_string();
  }
  return out;
}

std::vector<ESet> parse_e_list(std::string_view text) {
  std::vector<ESet> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item == "0") {
      out.push_back(ESet::kZero);
    } else if (item == "1") {
      out.push_back(ESet::kOne);
    } else if (item == "B" || item == "b") {
      out.push_back(ESet::kBoth);
    } else {
      throw ParseError("E set symbol must be 0, 1 or B, got '" + std::string(item) + "'");
    }
    pos = end + 1;
  }
  return out;
}

std::string format_e_list(const std::vector<ESet>& e_sets) {
  std::string out;
  for (ESet e : e_sets) {
    if (!out.empty()) out += ',';
    out += to_string(e);
  }
  return out;
}

}  // namespace bentneg
