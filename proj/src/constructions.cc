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

#include "bentneg/constructions.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>

#include "bentneg/errors.h"
#include "bentneg/packed_bits.h"

namespace bentneg {
namespace {

constexpr std::uint64_t kEvenBits = 0x5555555555555555ULL;
constexpr std::uint64_t kOddBits = 0xAAAAAAAAAAAAAAAAULL;

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

// A product of sums of monomials. Each factor lists the monomials of one sum.
using Factor = std::vector<std::uint64_t>;

void add_product_rec(AnfPolynomial& p, const std::vector<Factor>& factors, std::size_t i,
                     std::uint64_t acc) {
  if (i == factors.size()) {
    p.add_monomial(acc);
    return;
  }
  for (std::uint64_t m : factors[i]) add_product_rec(p, factors, i + 1, acc | m);
}

void add_product(AnfPolynomial& p, const std::vector<Factor>& factors) {
  add_product_rec(p, factors, 0, 0);
}

// Factors of chi of {x'' = x' + beta} on a 2k-block whose coordinate j sits
// at variable offset + j: one factor x'_i + x''_i + beta_i + 1 per i < k.
void append_s_beta_factors(std::vector<Factor>& out, std::uint64_t beta, int k, int offset) {
  for (int i = 0; i < k; ++i) {
    const std::uint64_t lo = bit(offset + i);
    const std::uint64_t hi = bit(offset + k + i);
    if ((beta >> i) & 1) {
      out.push_back({lo, hi});
    } else {
      out.push_back({0, lo, hi});
    }
  }
}

// Factors of chi of {x in c + A_2^r} on a 2r-block at the given offset: one
// factor x_{2i} + x_{2i+1} + c_{2i} + c_{2i+1} + 1 per pair.
void append_pair_coset_factors(std::vector<Factor>& out, std::uint64_t c, int r, int offset) {
  for (int i = 0; i < r; ++i) {
    const std::uint64_t lo = bit(offset + 2 * i);
    const std::uint64_t hi = bit(offset + 2 * i + 1);
    if (((c >> (2 * i)) ^ (c >> (2 * i + 1))) & 1) {
      out.push_back({lo, hi});
    } else {
      out.push_back({0, lo, hi});
    }
  }
}

void append_e_factor(std::vector<Factor>& out, ESet e, int var) {
  switch (e) {
    case ESet::kOne:
      out.push_back({bit(var)});
      break;
    case ESet::kZero:
      out.push_back({0, bit(var)});
      break;
    case ESet::kBoth:
      break;
  }
}

std::uint64_t spread_pairs(std::uint64_t a, int r) {
  std::uint64_t x = 0;
  for (int i = 0; i < r; ++i) {
    if ((a >> i) & 1) x |= std::uint64_t{3} << (2 * i);
  }
  return x;
}

std::uint64_t swap_halves(std::uint64_t g, int h) {
  return (g >> h) | ((g & low_mask(h)) << h);
}

bool is_f2rs(Family family) {
  return family == Family::kF2RS || family == Family::kF2RSA || family == Family::kF2RSOrbit;
}

bool is_h(Family family) { return family == Family::kH4K2 || family == Family::kH8K2; }

// Orbit labels carried by an F2RS-type family.
std::vector<BitVector> orbit_labels(Family family, const ConstructionParams& params) {
  switch (family) {
    case Family::kF2RS:
      return params.p;
    case Family::kF2RSA:
      return params.a_set;
    case Family::kF2RSOrbit:
      return {*params.single_gamma};
    default:
      return {};
  }
}

void validate_orbit_labels(const std::vector<BitVector>& labels, int k, const std::string& what) {
  if (labels.empty()) throw SpecError(what + " is empty");
  std::set<std::uint64_t> reps;
  for (const auto& b : labels) {
    if (b.size() != 2 * k) {
      throw SpecError(what + " element " + b.to_string() + " has length " +
                      std::to_string(b.size()) + ", expected " + std::to_string(2 * k));
    }
    if (!reps.insert(orbit_representative(b).bits()).second) {
      throw SpecError(what + " element " + b.to_string() +
                      " lies in the orbit of an earlier element");
    }
  }
}

BooleanFunction dual_set_function(int n, const std::vector<std::uint64_t>& members) {
  BooleanFunction f(n);
  for (std::uint64_t x : members) f.set(x, true);
  return f;
}

}  // namespace

BooleanFunction base_function(BaseFamily family, int param) {
  if (param < 1) throw SpecError("base function parameter must be at least 1");
  switch (family) {
    case BaseFamily::kG0: {
      const int t = param;
      const int m = 2 * t;
      return BooleanFunction::from_predicate(4 * t, [=](std::uint64_t z) {
        const std::uint64_t x = z & low_mask(m);
        const std::uint64_t y = z >> m;
        return static_cast<bool>(parity(x & y) ^ parity(y & (y >> t) & low_mask(t)));
      });
    }
    case BaseFamily::kH0: {
      const int t = param;
      const int m = 2 * t;
      return BooleanFunction::from_predicate(2 * m + 2, [=](std::uint64_t z) {
        const std::uint64_t x = z & low_mask(m + 1);
        const std::uint64_t y = z >> (m + 1);
        const int x0_ym = static_cast<int>(x & (y >> m) & 1);
        return static_cast<bool>(parity(x & y) ^ x0_ym ^ parity(y & (y >> t) & low_mask(t)));
      });
    }
    case BaseFamily::kF0: {
      const int k = param;
      return BooleanFunction::from_predicate(4 * k, [=](std::uint64_t z) {
        const std::uint64_t x = z & low_mask(2 * k);
        const std::uint64_t y = z >> (2 * k);
        return static_cast<bool>(parity(x & (x >> 1) & kEvenBits) ^
                                 parity(y & (y >> 1) & kEvenBits) ^ parity(x & y & kOddBits));
      });
    }
    case BaseFamily::kSigma2: {
      return BooleanFunction::from_predicate(param, [](std::uint64_t z) {
        const std::uint64_t w = static_cast<std::uint64_t>(popcount(z));
        return ((w * (w - (w > 0 ? 1 : 0)) / 2) & 1) != 0;
      });
    }
  }
  throw SpecError("unknown base family");
}

AnfPolynomial base_anf(BaseFamily family, int param) {
  if (param < 1) throw SpecError("base function parameter must be at least 1");
  std::vector<std::uint64_t> terms;
  int n = 0;
  switch (family) {
    case BaseFamily::kG0: {
      const int t = param;
      const int m = 2 * t;
      n = 4 * t;
      for (int i = 0; i < m; ++i) terms.push_back(bit(i) | bit(m + i));
      for (int i = 0; i < t; ++i) terms.push_back(bit(m + i) | bit(m + t + i));
      break;
    }
    case BaseFamily::kH0: {
      const int t = param;
      const int m = 2 * t;
      n = 2 * m + 2;
      for (int i = 0; i <= m; ++i) terms.push_back(bit(i) | bit(m + 1 + i));
      terms.push_back(bit(0) | bit(2 * m + 1));
      for (int i = 0; i < t; ++i) terms.push_back(bit(m + 1 + i) | bit(m + 1 + t + i));
      break;
    }
    case BaseFamily::kF0: {
      const int k = param;
      n = 4 * k;
      for (int i = 0; i < k; ++i) {
        terms.push_back(bit(2 * i) | bit(2 * i + 1));
        terms.push_back(bit(2 * k + 2 * i) | bit(2 * k + 2 * i + 1));
        terms.push_back(bit(2 * i + 1) | bit(2 * k + 2 * i + 1));
      }
      break;
    }
    case BaseFamily::kSigma2: {
      n = param;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) terms.push_back(bit(i) | bit(j));
      }
      break;
    }
  }
  check_capacity(n);
  return AnfPolynomial::from_monomials(n, terms);
}

BooleanFunction base_dual(BaseFamily family, int param) {
  if (param < 1) throw SpecError("base function parameter must be at least 1");
  switch (family) {
    case BaseFamily::kG0: {
      const int t = param;
      const int m = 2 * t;
      return BooleanFunction::from_predicate(4 * t, [=](std::uint64_t z) {
        const std::uint64_t x = z & low_mask(m);
        const std::uint64_t y = z >> m;
        return static_cast<bool>(parity(x & (x >> t) & low_mask(t)) ^ parity(x & y));
      });
    }
    case BaseFamily::kH0: {
      const int t = param;
      const int m = 2 * t;
      return BooleanFunction::from_predicate(2 * m + 2, [=](std::uint64_t z) {
        const std::uint64_t x = z & low_mask(m + 1);
        const std::uint64_t y = z >> (m + 1);
        const std::uint64_t xm = (x >> m) & 1;
        const std::uint64_t tail = xm & (((x >> t) ^ y) & 1);
        return static_cast<bool>(parity(x & y) ^ parity(x & (x >> t) & low_mask(t)) ^
                                 static_cast<int>(tail));
      });
    }
    case BaseFamily::kF0: {
      const int k = param;
      return BooleanFunction::from_predicate(4 * k, [=](std::uint64_t z) {
        const std::uint64_t x = z & low_mask(2 * k);
        const std::uint64_t y = z >> (2 * k);
        return static_cast<bool>(parity(x & (x >> 1) & kEvenBits) ^
                                 parity(y & (y >> 1) & kEvenBits) ^ parity(x & y & kEvenBits));
      });
    }
    case BaseFamily::kSigma2:
      break;
  }
  throw SpecError("no closed-form dual for this base family");
}

std::string to_string(Family family) {
  switch (family) {
    case Family::kG4K:
      return "G4K";
    case Family::kG8K:
      return "G8K";
    case Family::kH4K2:
      return "H4K2";
    case Family::kH8K2:
      return "H8K2";
    case Family::kF2RS:
      return "F2RS";
    case Family::kF2RSA:
      return "F2RS_A";
    case Family::kF2RSOrbit:
      return "F2RS_ORBIT";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  std::string norm;
  for (char c : name) {
    norm.push_back(c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  for (Family f : {Family::kG4K, Family::kG8K, Family::kH4K2, Family::kH8K2, Family::kF2RS,
                   Family::kF2RSA, Family::kF2RSOrbit}) {
    if (to_string(f) == norm) return f;
  }
  throw ParseError("unknown family '" + std::string(name) + "'");
}

int family_num_vars(Family family, int k) {
  switch (family) {
    case Family::kG4K:
      return 4 * k;
    case Family::kG8K:
      return 8 * k;
    case Family::kH4K2:
      return 4 * k + 2;
    case Family::kH8K2:
      return 8 * k + 2;
    default:
      return 4 * k;
  }
}

int family_max_degree(Family family, int k) {
  switch (family) {
    case Family::kG4K:
      return 2 * k;
    case Family::kG8K:
      return 4 * k;
    case Family::kH4K2:
      return 2 * k + 1;
    case Family::kH8K2:
      return 4 * k + 1;
    default:
      return 2 * k;
  }
}

BaseFamily family_base(Family family) {
  if (is_f2rs(family)) return BaseFamily::kF0;
  return is_h(family) ? BaseFamily::kH0 : BaseFamily::kG0;
}

int family_base_param(Family family, int k) {
  return (family == Family::kG8K || family == Family::kH8K2) ? 2 * k : k;
}

void validate_params(Family family, const ConstructionParams& params) {
  const std::string name = to_string(family);
  if (params.k < 1) throw SpecError(name + ": k must be at least 1");
  if (family_num_vars(family, params.k) > kHardMaxVariables) {
    throw CapacityError(name + ": k = " + std::to_string(params.k) + " gives " +
                        std::to_string(family_num_vars(family, params.k)) + " variables");
  }
  check_capacity(family_num_vars(family, params.k));
  const bool f2rs = is_f2rs(family);
  if (!f2rs) {
    if (!params.p.empty() || !params.a_set.empty() || params.single_gamma) {
      throw SpecError(name + " takes gamma (and E sets), not P, A or a single gamma");
    }
    if (!is_h(family) && !params.e_sets.empty()) {
      throw SpecError(name + " does not take E sets");
    }
    modifier_spec(family, params).validate();
    return;
  }
  if (!params.gammas.empty() || !params.e_sets.empty()) {
    throw SpecError(name + " does not take gamma or E sets");
  }
  const bool has_p = !params.p.empty();
  const bool has_a = !params.a_set.empty();
  const bool has_single = params.single_gamma.has_value();
  if ((family == Family::kF2RS && (has_a || has_single)) ||
      (family == Family::kF2RSA && (has_p || has_single)) ||
      (family == Family::kF2RSOrbit && (has_p || has_a))) {
    throw SpecError(name + " received parameters of another F2RS variant");
  }
  switch (family) {
    case Family::kF2RS:
      validate_orbit_labels(params.p, params.k, "P");
      break;
    case Family::kF2RSA:
      validate_orbit_labels(params.a_set, params.k, "A");
      break;
    default:
      if (!has_single) throw SpecError(name + " needs a single gamma");
      validate_orbit_labels({*params.single_gamma}, params.k, "single gamma");
      if (params.single_gamma->weight() < 2) {
        throw SpecError(name + " needs wt(gamma) >= 2, got " + params.single_gamma->to_string());
      }
      break;
  }
}

GammaSpec modifier_spec(Family family, const ConstructionParams& params) {
  GammaSpec spec;
  spec.k = params.k;
  switch (family) {
    case Family::kG4K:
      spec.family = ModifierFamily::kS1;
      spec.gammas = params.gammas;
      return spec;
    case Family::kG8K:
      spec.family = ModifierFamily::kS2;
      spec.gammas = params.gammas;
      return spec;
    case Family::kH4K2:
      spec.family = ModifierFamily::kS3;
      spec.gammas = params.gammas;
      spec.e_sets = params.e_sets;
      return spec;
    case Family::kH8K2:
      spec.family = ModifierFamily::kS4;
      spec.gammas = params.gammas;
      spec.e_sets = params.e_sets;
      return spec;
    default:
      break;
  }
  spec.family = ModifierFamily::kT;
  spec.rotation_closed = true;
  const int len = 2 * params.k;
  check_capacity(len);
  std::vector<std::uint64_t> members;
  if (family == Family::kF2RS) {
    VectorSet gamma_set(len);
    for (const auto& b : params.p) gamma_set = gamma_set.united(orbit(b));
    members = gamma_set.members();
  } else {
    // The added polynomial is q(x + y) with q(z) the sum of z^w over the
    // orbits; it equals chi of {x + y in supp(q)}.
    AnfPolynomial q(len);
    for (const auto& a : orbit_labels(family, params)) {
      for (std::uint64_t w : orbit(a).members()) q.add_monomial(w);
    }
    const BooleanFunction support = truth_table_from_anf(q);
    for (std::uint64_t z = 0; z < support.size(); ++z) {
      if (support(z)) members.push_back(z);
    }
  }
  for (std::uint64_t g : members) spec.gammas.emplace_back(len, g);
  return spec;
}

AnfPolynomial closed_form_anf(Family family, const ConstructionParams& params) {
  validate_params(family, params);
  const int k = params.k;
  AnfPolynomial p = base_anf(family_base(family), family_base_param(family, k));
  switch (family) {
    case Family::kG4K:
    case Family::kH4K2: {
      const bool h = family == Family::kH4K2;
      const int y_offset = h ? 2 * k + 1 : 2 * k;
      for (std::size_t i = 0; i < params.gammas.size(); ++i) {
        const std::uint64_t g = params.gammas[i].bits();
        std::vector<Factor> factors;
        append_s_beta_factors(factors, g & low_mask(k), k, 0);
        append_s_beta_factors(factors, g >> k, k, y_offset);
        if (h) append_e_factor(factors, params.e_sets[i], 4 * k + 1);
        add_product(p, factors);
      }
      break;
    }
    case Family::kG8K:
    case Family::kH8K2: {
      const bool h = family == Family::kH8K2;
      const int y_offset = h ? 4 * k + 1 : 4 * k;
      for (std::size_t i = 0; i < params.gammas.size(); ++i) {
        std::vector<Factor> factors;
        append_pair_coset_factors(factors, 0, 2 * k, 0);
        append_pair_coset_factors(factors, params.gammas[i].bits(), 2 * k, y_offset);
        if (h) append_e_factor(factors, params.e_sets[i], 8 * k + 1);
        add_product(p, factors);
      }
      break;
    }
    case Family::kF2RS: {
      // Sum over u * v = 0 with u + v covering gamma of (x, y)^(u, v), one
      // factor x_j + y_j + gamma_j + 1 per coordinate.
      for (const auto& g : modifier_spec(family, params).gammas) {
        std::vector<Factor> factors;
        for (int j = 0; j < 2 * k; ++j) {
          const std::uint64_t xj = bit(j);
          const std::uint64_t yj = bit(2 * k + j);
          if (g[j]) {
            factors.push_back({xj, yj});
          } else {
            factors.push_back({0, xj, yj});
          }
        }
        add_product(p, factors);
      }
      break;
    }
    case Family::kF2RSA:
    case Family::kF2RSOrbit: {
      // Sum over u * v = 0 with u + v = w in each orbit of (x, y)^(u, v).
      for (const auto& a : orbit_labels(family, params)) {
        for (std::uint64_t w : orbit(a).members()) {
          std::vector<Factor> factors;
          for (int j = 0; j < 2 * k; ++j) {
            if ((w >> j) & 1) factors.push_back({bit(j), bit(2 * k + j)});
          }
          add_product(p, factors);
        }
      }
      break;
    }
  }
  return p;
}

BooleanFunction closed_form_dual(Family family, const ConstructionParams& params) {
  validate_params(family, params);
  const int k = params.k;
  const int n = family_num_vars(family, k);
  const BooleanFunction base = base_dual(family_base(family), family_base_param(family, k));
  std::vector<std::uint64_t> members;
  switch (family) {
    case Family::kG4K:
      // x'' = x' + gamma2, y'' = y' + gamma1 + gamma2 + 1_k.
      for (const auto& g : params.gammas) {
        const std::uint64_t g1 = g.bits() & low_mask(k);
        const std::uint64_t g2 = g.bits() >> k;
        for (std::uint64_t xp = 0; xp < bit(k); ++xp) {
          const std::uint64_t x = xp | ((xp ^ g2) << k);
          for (std::uint64_t yp = 0; yp < bit(k); ++yp) {
            const std::uint64_t y = yp | ((yp ^ g1 ^ g2 ^ low_mask(k)) << k);
            members.push_back(x | (y << (2 * k)));
          }
        }
      }
      break;
    case Family::kG8K:
      // x in gamma + A, y in (gamma2, gamma1) + A.
      for (const auto& g : params.gammas) {
        const std::uint64_t sw = swap_halves(g.bits(), 2 * k);
        for (std::uint64_t a = 0; a < bit(2 * k); ++a) {
          for (std::uint64_t b = 0; b < bit(2 * k); ++b) {
            const std::uint64_t x = g.bits() ^ spread_pairs(a, 2 * k);
            const std::uint64_t y = sw ^ spread_pairs(b, 2 * k);
            members.push_back(x | (y << (4 * k)));
          }
        }
      }
      break;
    case Family::kH4K2: {
      // x'' = x' + e^{x_m} + gamma2 with x_m in E, y'' = y' + 1_k + gamma1 +
      // gamma2, y_m free.
      const int m = 2 * k;
      for (std::size_t i = 0; i < params.gammas.size(); ++i) {
        const std::uint64_t g1 = params.gammas[i].bits() & low_mask(k);
        const std::uint64_t g2 = params.gammas[i].bits() >> k;
        for (std::uint64_t xm = 0; xm < 2; ++xm) {
          if (!e_set_contains(params.e_sets[i], static_cast<int>(xm))) continue;
          for (std::uint64_t xp = 0; xp < bit(k); ++xp) {
            const std::uint64_t x = xp | ((xp ^ xm ^ g2) << k) | (xm << m);
            for (std::uint64_t yp = 0; yp < bit(k); ++yp) {
              const std::uint64_t y = yp | ((yp ^ g1 ^ g2 ^ low_mask(k)) << k);
              for (std::uint64_t ym = 0; ym < 2; ++ym) {
                members.push_back(x | ((y | (ym << m)) << (m + 1)));
              }
            }
          }
        }
      }
      break;
    }
    case Family::kH8K2: {
      // x_m in E, x + e^{x_m} in gamma + A, y in (gamma2, gamma1) + A, y_m free.
      const int m = 4 * k;
      for (std::size_t i = 0; i < params.gammas.size(); ++i) {
        const std::uint64_t g = params.gammas[i].bits();
        const std::uint64_t sw = swap_halves(g, 2 * k);
        for (std::uint64_t xm = 0; xm < 2; ++xm) {
          if (!e_set_contains(params.e_sets[i], static_cast<int>(xm))) continue;
          for (std::uint64_t a = 0; a < bit(2 * k); ++a) {
            const std::uint64_t x = (g ^ xm ^ spread_pairs(a, 2 * k)) | (xm << m);
            for (std::uint64_t b = 0; b < bit(2 * k); ++b) {
              const std::uint64_t y = sw ^ spread_pairs(b, 2 * k);
              for (std::uint64_t ym = 0; ym < 2; ++ym) {
                members.push_back(x | ((y | (ym << m)) << (m + 1)));
              }
            }
          }
        }
      }
      break;
    }
    default: {
      // (a, b) interleaved as (a_0, b_0, a_1, b_1, ...) with
      // a = x_ev + x_od + y_ev + y_od + 1_k and b = x_ev + y_ev.
      std::set<std::uint64_t> gammas;
      for (const auto& g : modifier_spec(family, params).gammas) gammas.insert(g.bits());
      for (std::uint64_t z = 0; z < bit(4 * k); ++z) {
        const std::uint64_t x = z & low_mask(2 * k);
        const std::uint64_t y = z >> (2 * k);
        const std::uint64_t s = x ^ y;
        const std::uint64_t a = (s ^ (s >> 1) ^ kEvenBits) & kEvenBits & low_mask(2 * k);
        const std::uint64_t b = (s & kEvenBits & low_mask(2 * k)) << 1;
        if (gammas.contains(a | b)) members.push_back(z);
      }
      break;
    }
  }
  return base ^ dual_set_function(n, members);
}

bool predicts_max_degree(Family family, const ConstructionParams& params) {
  validate_params(family, params);
  switch (family) {
    case Family::kG4K:
    case Family::kG8K:
      return params.gammas.size() % 2 == 1;
    case Family::kH4K2:
    case Family::kH8K2: {
      int total = 0;
      for (ESet e : params.e_sets) total += e_set_size(e);
      return total % 2 == 1;
    }
    case Family::kF2RS: {
      std::uint64_t total = 0;
      for (const auto& b : params.p) total += orbit(b).size();
      return total % 2 == 1;
    }
    default: {
      // Only the orbit of 1_{2k} contributes the top monomial.
      for (const auto& a : orbit_labels(family, params)) {
        if (a.bits() == low_mask(2 * params.k)) return true;
      }
      return false;
    }
  }
}

ConstructedFunction construct(Family family, const ConstructionParams& params) {
  validate_params(family, params);
  const GammaSpec spec = modifier_spec(family, params);
  BooleanFunction base = base_function(family_base(family), family_base_param(family, params.k));
  VectorSet set = build_modifier_set(spec);
  BooleanFunction function = base ^ characteristic_function(set);
  return ConstructedFunction{family,
                             params,
                             spec,
                             std::move(base),
                             std::move(set),
                             std::move(function),
                             closed_form_anf(family, params),
                             closed_form_dual(family, params),
                             predicts_max_degree(family, params),
                             family_max_degree(family, params.k)};
}

std::string describe(Family family, const ConstructionParams& params) {
  std::string out = to_string(family) + " k=" + std::to_string(params.k);
  if (!params.gammas.empty()) out += " gamma=" + format_gamma_list(params.gammas);
  if (!params.e_sets.empty()) out += " eset=" + format_e_list(params.e_sets);
  if (!params.p.empty()) out += " p=" + format_gamma_list(params.p);
  if (!params.a_set.empty()) out += " a=" + format_gamma_list(params.a_set);
  if (params.single_gamma) out += " gamma=" + params.single_gamma->to_string();
  return out;
}

}  // namespace bentneg
