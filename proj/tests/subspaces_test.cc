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


#include <cstdint>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "bentneg/errors.h"
#include "bentneg/subspaces.h"
#include "test_support.h"

namespace bentneg {
namespace {

using testing::Gen;

LinearSubspace span_of(int n, std::initializer_list<const char*> gens) {
  std::vector<BitVector> v;
  for (const char* g : gens) v.push_back(BitVector::parse(g));
  return LinearSubspace::span(n, v);
}

std::set<std::string> as_strings(const std::vector<BitVector>& v) {
  std::set<std::string> out;
  for (const auto& x : v) out.insert(x.to_string());
  return out;
}

TEST(LinearSubspaceTest, SpanDropsDependentGenerators) {
  const LinearSubspace h = span_of(4, {"1100", "0011", "1111"});
  EXPECT_EQ(h.dim(), 2);
  EXPECT_EQ(h.members().size(), 4u);
  EXPECT_TRUE(h.contains(BitVector::parse("1111")));
  EXPECT_FALSE(h.contains(BitVector::parse("1000")));
  EXPECT_EQ(LinearSubspace::whole(3).dim(), 3);
  EXPECT_EQ(LinearSubspace::zero(3).members(), (std::vector<std::uint64_t>{0}));
}

TEST(LinearSubspaceTest, RandomSpansAreClosed) {
  Gen gen;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = gen.uniform(1, 8);
    std::vector<BitVector> gens;
    for (int i = gen.uniform(0, 4); i > 0; --i) gens.push_back(gen.vector(n));
    const LinearSubspace h = LinearSubspace::span(n, gens);
    const std::vector<std::uint64_t> members = h.members();
    EXPECT_EQ(members.size(), std::uint64_t{1} << h.dim());
    for (const auto& g : gens) EXPECT_TRUE(h.contains(g));
    for (std::uint64_t a : members) {
      for (std::uint64_t b : members) ASSERT_TRUE(h.contains(a ^ b));
    }
  }
}

TEST(OrthogonalComplementTest, KnownCases) {
  EXPECT_EQ(orthogonal_complement(LinearSubspace::zero(2)), LinearSubspace::whole(2));
  const LinearSubspace diag = span_of(4, {"1010", "0101"});
  EXPECT_EQ(orthogonal_complement(diag), diag);
  const LinearSubspace ones = span_of(2, {"11"});
  EXPECT_EQ(orthogonal_complement(ones), ones);
}

TEST(OrthogonalComplementTest, DimensionsAddUpAndComplementIsOrthogonal) {
  Gen gen;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = gen.uniform(1, 8);
    std::vector<BitVector> gens;
    for (int i = gen.uniform(0, n); i > 0; --i) gens.push_back(gen.vector(n));
    const LinearSubspace h = LinearSubspace::span(n, gens);
    const LinearSubspace perp = orthogonal_complement(h);
    EXPECT_EQ(h.dim() + perp.dim(), n);
    for (std::uint64_t a : h.members()) {
      for (std::uint64_t b : perp.members()) ASSERT_EQ(parity(a & b), 0);
    }
    EXPECT_EQ(orthogonal_complement(perp), h);
  }
}

TEST(CosetTest, RepresentativesOfSmallSubspaces) {
  EXPECT_EQ(as_strings(coset_representatives(LinearSubspace::whole(3))),
            (std::set<std::string>{"000"}));
  EXPECT_EQ(as_strings(coset_representatives(pair_repetition_subspace(1))),
            (std::set<std::string>{"00", "10"}));
  EXPECT_EQ(coset_representatives(pair_repetition_subspace(2)).size(), 4u);
}

TEST(CosetTest, CosetsPartitionTheSpace) {
  Gen gen;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = gen.uniform(1, 8);
    std::vector<BitVector> gens;
    for (int i = gen.uniform(0, n); i > 0; --i) gens.push_back(gen.vector(n));
    const LinearSubspace h = LinearSubspace::span(n, gens);
    VectorSet covered(n);
    for (const auto& r : coset_representatives(h)) {
      const VectorSet c = h.coset(r.bits());
      EXPECT_FALSE(covered.intersects(c));
      EXPECT_EQ(h.reduce(r.bits()), r.bits());
      covered = covered.united(c);
    }
    EXPECT_EQ(covered, VectorSet::full(n));
  }
}

TEST(RepetitionSetsTest, SmallCases) {
  const RepetitionSets r11 = repetition_sets(1, 1);
  EXPECT_EQ(r11.a, VectorSet::from_members(2, {0b00, 0b11}));
  EXPECT_EQ(r11.b, VectorSet::from_members(2, {0b01, 0b10}));
  const RepetitionSets r21 = repetition_sets(2, 1);
  EXPECT_EQ(r21.a, VectorSet::from_members(4, {0b0000, 0b1111}));
  EXPECT_EQ(r21.b, VectorSet::from_members(4, {0b1100, 0b0011}));
  const RepetitionSets r12 = repetition_sets(1, 2);
  EXPECT_EQ(r12.a.size(), 4u);
  for (std::uint64_t a : r12.a.members()) {
    for (std::uint64_t b : r12.a.members()) EXPECT_TRUE(r12.a.contains(a ^ b));
  }
}

TEST(RepetitionSetsTest, PairPredicatesMatchSets) {
  for (int r = 1; r <= 4; ++r) {
    const RepetitionSets sets = repetition_sets(1, r);
    EXPECT_EQ(sets.a, pair_repetition_subspace(r).to_vector_set());
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << (2 * r)); ++x) {
      EXPECT_EQ(in_pair_repetition(x, r), sets.a.contains(x));
      EXPECT_EQ(in_pair_alternation(x, r), sets.b.contains(x));
    }
  }
}

TEST(RepetitionSetsTest, CharacterSumsOverPairRepetition) {
  // The plain sum picks out A_2^k and the i^{wt}-twisted sum picks out B_2^k.
  for (int k = 1; k <= 3; ++k) {
    const std::vector<std::uint64_t> members = pair_repetition_subspace(k).members();
    for (std::uint64_t u = 0; u < (std::uint64_t{1} << (2 * k)); ++u) {
      std::int64_t plain = 0;
      std::int64_t re = 0;
      std::int64_t im = 0;
      for (std::uint64_t x : members) {
        const int sign = parity(u & x) ? -1 : 1;
        plain += sign;
        // i^{wt(x)} is real here since wt(x) is even.
        const int w = popcount(x) % 4;
        re += sign * (w == 0 ? 1 : w == 2 ? -1 : 0);
        im += sign * (w == 1 ? 1 : w == 3 ? -1 : 0);
      }
      EXPECT_EQ(plain, in_pair_repetition(u, k) ? (1 << k) : 0);
      EXPECT_EQ(re, in_pair_alternation(u, k) ? (1 << k) : 0);
      EXPECT_EQ(im, 0);
    }
  }
}

TEST(OrbitTest, SmallOrbits) {
  EXPECT_EQ(orbit(BitVector::parse("0000")).size(), 1u);
  EXPECT_EQ(orbit(BitVector::parse("1000")).size(), 4u);
  EXPECT_EQ(orbit(BitVector::parse("1010")),
            VectorSet::from_members(4, {BitVector::parse("1010").bits(),
                                        BitVector::parse("0101").bits()}));
  EXPECT_EQ(orbit_representative(BitVector::parse("0110")).to_string(), "1100");
}

TEST(OrbitTest, Representatives) {
  EXPECT_EQ(as_strings(orbit_representatives(2)), (std::set<std::string>{"00", "10", "11"}));
  EXPECT_EQ(as_strings(orbit_representatives(4)),
            (std::set<std::string>{"0000", "1000", "1100", "1010", "1110", "1111"}));
  EXPECT_EQ(orbit_representatives(3).size(), 4u);
}

TEST(OrbitTest, OrbitsPartitionAndMatchBurnside) {
  // Necklace counts for n = 1..10.
  const std::vector<std::size_t> necklaces = {2, 3, 4, 6, 8, 14, 20, 36, 60, 108};
  for (int n = 1; n <= 10; ++n) {
    const std::vector<BitVector> reps = orbit_representatives(n);
    EXPECT_EQ(reps.size(), necklaces[static_cast<std::size_t>(n - 1)]);
    VectorSet covered(n);
    for (const auto& r : reps) {
      const VectorSet o = orbit(r);
      EXPECT_FALSE(covered.intersects(o));
      EXPECT_EQ(orbit_representative(r), r);
      covered = covered.united(o);
    }
    EXPECT_EQ(covered, VectorSet::full(n));
  }
}

GammaSpec spec_of(ModifierFamily family, int k, const char* gammas, const char* e_sets = "") {
  GammaSpec spec;
  spec.family = family;
  spec.k = k;
  spec.gammas = parse_gamma_list(gammas);
  if (*e_sets != '\0') spec.e_sets = parse_e_list(e_sets);
  return spec;
}

TEST(BuildS1Test, KnownSets) {
  // {(x0, x0, y0, y0)}.
  EXPECT_EQ(build_S1(spec_of(ModifierFamily::kS1, 1, "00")),
            VectorSet::from_members(4, {0b0000, 0b0011, 0b1100, 0b1111}));
  EXPECT_EQ(build_S1(spec_of(ModifierFamily::kS1, 1, "00,10,01,11")), VectorSet::full(4));
  // k = 2, gamma = 0001: x'' = x', y'' = y' + (0, 1).
  const VectorSet s = build_S1(spec_of(ModifierFamily::kS1, 2, "0001"));
  EXPECT_EQ(s.size(), 16u);
  for (std::uint64_t z : s.members()) {
    const std::uint64_t x = z & 0xf;
    const std::uint64_t y = z >> 4;
    EXPECT_EQ(x & 3, x >> 2);
    EXPECT_EQ((y & 3) ^ 0b10, y >> 2);
  }
}

TEST(BuildS2Test, KnownSets) {
  const VectorSet s = build_S2(spec_of(ModifierFamily::kS2, 1, "0000"));
  EXPECT_EQ(s.size(), 16u);
  const LinearSubspace a = pair_repetition_subspace(2);
  for (std::uint64_t z : s.members()) {
    EXPECT_TRUE(a.contains(z & 0xf));
    EXPECT_TRUE(a.contains(z >> 4));
  }
  EXPECT_EQ(build_S2(spec_of(ModifierFamily::kS2, 1, "0000,1000")).size(), 32u);
  EXPECT_THROW(build_S2(spec_of(ModifierFamily::kS2, 1, "0000,1100")), SpecError);
}

TEST(BuildS3Test, KnownSets) {
  EXPECT_EQ(build_S3(spec_of(ModifierFamily::kS3, 1, "00", "B")).size(), 16u);
  const VectorSet pinned = build_S3(spec_of(ModifierFamily::kS3, 1, "00", "0"));
  EXPECT_EQ(pinned.size(), 8u);
  // y_m is variable 2m + 1 = 5.
  for (std::uint64_t z : pinned.members()) EXPECT_EQ((z >> 5) & 1, 0u);
  GammaSpec spec = spec_of(ModifierFamily::kS3, 2, "1000");
  spec.e_sets = {ESet::kOne};
  EXPECT_EQ(build_S3(spec).size(), 32u);
  spec = spec_of(ModifierFamily::kS3, 2, "0101", "B");
  EXPECT_EQ(build_S3(spec).size(), 64u);
  EXPECT_EQ(build_S3(spec_of(ModifierFamily::kS3, 2, "1000,0101", "1,B")).size(), 96u);
}

TEST(BuildS4Test, KnownSets) {
  EXPECT_EQ(build_S4(spec_of(ModifierFamily::kS4, 1, "0000", "B")).size(), 64u);
  const VectorSet pinned = build_S4(spec_of(ModifierFamily::kS4, 1, "0000", "1"));
  EXPECT_EQ(pinned.size(), 32u);
  // y_m is variable 9.
  for (std::uint64_t z : pinned.members()) EXPECT_EQ((z >> 9) & 1, 1u);
  EXPECT_THROW(build_S4(spec_of(ModifierFamily::kS4, 1, "0000,0011", "0,0")), SpecError);
}

TEST(BuildTTest, KnownSets) {
  GammaSpec spec = spec_of(ModifierFamily::kT, 2, "1111");
  spec.rotation_closed = true;
  const VectorSet t = build_T(spec);
  EXPECT_EQ(t.size(), 16u);
  for (std::uint64_t z : t.members()) EXPECT_EQ((z & 0xf) ^ (z >> 4), 0xfu);
  spec = spec_of(ModifierFamily::kT, 1, "10,01");
  spec.rotation_closed = true;
  EXPECT_EQ(build_T(spec).size(), 8u);
  spec = spec_of(ModifierFamily::kT, 2, "1000");
  spec.rotation_closed = true;
  EXPECT_THROW(build_T(spec), SpecError);
}

TEST(BuildTTest, OrbitClosedSetsAreRotationInvariant) {
  for (int k = 1; k <= 2; ++k) {
    for (const auto& labels : testing::nonempty_subsets(orbit_representatives(2 * k))) {
      GammaSpec spec;
      spec.family = ModifierFamily::kT;
      spec.k = k;
      spec.rotation_closed = true;
      for (const auto& l : labels) {
        for (std::uint64_t g : orbit(l).members()) spec.gammas.emplace_back(2 * k, g);
      }
      const VectorSet t = build_T(spec);
      for (std::uint64_t z : t.members()) ASSERT_TRUE(t.contains(rotate_mask(z, 1, 4 * k)));
    }
  }
}

TEST(BuildTest, CardinalitiesOnRandomSpecs) {
  Gen gen;
  for (ModifierFamily family :
       {ModifierFamily::kS1, ModifierFamily::kS2, ModifierFamily::kS3, ModifierFamily::kS4}) {
    for (int trial = 0; trial < 10; ++trial) {
      const GammaSpec spec = gen.gamma_spec(family, gen.uniform(1, 2), gen.uniform(1, 4));
      std::uint64_t blocks = 0;
      for (std::size_t i = 0; i < spec.gammas.size(); ++i) {
        blocks += spec.e_sets.empty() ? 1 : static_cast<std::uint64_t>(e_set_size(spec.e_sets[i]));
      }
      EXPECT_EQ(build_modifier_set(spec).size(), blocks << (spec.ambient_dim() / 2));
    }
  }
}

TEST(GammaSpecTest, ValidationRejectsMalformedSpecs) {
  EXPECT_THROW(spec_of(ModifierFamily::kS1, 2, "01").validate(), SpecError);
  EXPECT_THROW(spec_of(ModifierFamily::kS1, 1, "01,01").validate(), SpecError);
  EXPECT_THROW(spec_of(ModifierFamily::kS3, 1, "01").validate(), SpecError);
  EXPECT_THROW(spec_of(ModifierFamily::kS1, 1, "01", "0").validate(), SpecError);
  GammaSpec empty;
  empty.family = ModifierFamily::kS1;
  empty.k = 1;
  EXPECT_THROW(empty.validate(), SpecError);
  empty.k = 0;
  EXPECT_THROW(empty.validate(), SpecError);
  EXPECT_NO_THROW(spec_of(ModifierFamily::kS4, 1, "0110,1000", "B,0").validate());
}

TEST(GammaListTest, ParseAndFormat) {
  const std::vector<BitVector> g = parse_gamma_list("1000, 0101");
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(format_gamma_list(g), "1000,0101");
  EXPECT_THROW(parse_gamma_list("10,"), ParseError);
  // Mixed lengths parse; validation rejects them against the family length.
  EXPECT_EQ(parse_gamma_list("10,1").size(), 2u);
  EXPECT_THROW(spec_of(ModifierFamily::kS1, 1, "10,1").validate(), SpecError);
  const std::vector<ESet> e = parse_e_list("1,B,0");
  EXPECT_EQ(e, (std::vector<ESet>{ESet::kOne, ESet::kBoth, ESet::kZero}));
  EXPECT_EQ(format_e_list(e), "1,B,0");
  EXPECT_THROW(parse_e_list("2"), ParseError);
  EXPECT_TRUE(e_set_contains(ESet::kBoth, 1));
  EXPECT_FALSE(e_set_contains(ESet::kZero, 1));
}

}  // namespace
}  // namespace bentneg
