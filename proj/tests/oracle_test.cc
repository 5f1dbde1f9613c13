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


#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "bentneg/constructions.h"
#include "bentneg/errors.h"
#include "bentneg/oracle.h"
#include "bentneg/worked_examples.h"
#include "test_support.h"

namespace bentneg::oracle {
namespace {

using testing::Gen;

void expect_failures_carry_points(const VerificationReport& report) {
  for (const Check& c : report.checks) {
    if (!c.pass) {
      EXPECT_TRUE(c.counterexample.has_value()) << report.subject << ": " << c.name;
    }
  }
}

void expect_sorted(const VerificationReport& report) {
  EXPECT_TRUE(std::is_sorted(report.checks.begin(), report.checks.end(),
                             [](const Check& a, const Check& b) { return a.name < b.name; }));
}

GammaSpec spec_of(ModifierFamily family, int k, const char* gammas, const char* e_sets = "") {
  GammaSpec spec;
  spec.family = family;
  spec.k = k;
  spec.gammas = parse_gamma_list(gammas);
  if (*e_sets != '\0') spec.e_sets = parse_e_list(e_sets);
  return spec;
}

TEST(NaiveTransformsTest, RefusesLargeTables) {
  EXPECT_THROW(naive_transforms(BooleanFunction(kNaiveMaxVariables + 1)), CapacityError);
}

TEST(FrameCoefficientsTest, BranchNames) {
  EXPECT_EQ(nega_branch({true, {0, 0}}), NegaBranch::kSame);
  EXPECT_EQ(nega_branch({true, {2, 0}}), NegaBranch::kNegated);
  EXPECT_EQ(nega_branch({true, {1, -1}}), NegaBranch::kTimesI);
  EXPECT_EQ(nega_branch({true, {1, 1}}), NegaBranch::kTimesMinusI);
  EXPECT_EQ(nega_branch({true, {1, 0}}), NegaBranch::kOther);
  EXPECT_EQ(nega_branch({false, {0, 0}}), NegaBranch::kOther);
}

TEST(FrameCoefficientsTest, BranchesPredictTheNewSpectrum) {
  // N_f = N_{f0} - 2 N_{f0,T} = (1 - twice) N_{f0}.
  const auto [family, params] = example_spec(2);
  const ConstructedFunction cf = construct(family, params);
  const FrameCoefficients frame = extract_frame_coefficients(cf.base, cf.modifier_set);
  EXPECT_TRUE(frame.walsh_ok);
  EXPECT_TRUE(frame.nega_ok);
  const NegaSpectrum base = nega_transform(cf.base);
  const NegaSpectrum out = nega_transform(cf.function);
  for (std::uint64_t u = 0; u < cf.function.size(); ++u) {
    const GaussianInteger factor = GaussianInteger{1, 0} - frame.nega_c[u].twice;
    ASSERT_EQ(out[u], base[u] * factor);
  }
  EXPECT_GT(frame.nega_branch_counts[static_cast<int>(NegaBranch::kTimesI)], 0u);
  EXPECT_GT(frame.nega_branch_counts[static_cast<int>(NegaBranch::kTimesMinusI)], 0u);
}

TEST(FrameCoefficientsTest, RequiresBentNegabentBase) {
  const BooleanFunction sigma2 = base_function(BaseFamily::kSigma2, 4);
  EXPECT_THROW(extract_frame_coefficients(sigma2, VectorSet(4)), NotBentError);
  EXPECT_THROW(extract_frame_coefficients(BooleanFunction(4), VectorSet(4)), NotBentError);
}

TEST(FrameCoefficientsTest, ArbitrarySetsUsuallyBreakTheFrame) {
  Gen gen;
  const BooleanFunction g0 = base_function(BaseFamily::kG0, 1);
  int broken = 0;
  for (int trial = 0; trial < 20; ++trial) {
    VectorSet t(4);
    for (std::uint64_t x = 0; x < 16; ++x) {
      if (gen.coin()) t.insert(x);
    }
    const FrameCoefficients frame = extract_frame_coefficients(g0, t);
    const Classification c = classify(g0 ^ characteristic_function(t));
    // The frame conditions are exactly flatness of the modified function.
    EXPECT_EQ(frame.walsh_ok, c.is_bent);
    EXPECT_EQ(frame.nega_ok, c.is_negabent);
    if (!frame.walsh_ok || !frame.nega_ok) ++broken;
  }
  EXPECT_GT(broken, 0);
}

TEST(LemmaTest, S1SingleCellAtAllSixteenPoints) {
  const LemmaOutcome out = evaluate_fragmentary_lemma(spec_of(ModifierFamily::kS1, 1, "00"));
  EXPECT_EQ(out.n, 4);
  EXPECT_FALSE(out.walsh_mismatch.has_value());
  EXPECT_FALSE(out.nega_mismatch.has_value());
  EXPECT_EQ(out.nega_zero + out.nega_full, 16u);
}

TEST(LemmaTest, S2SingleCellAtAllPoints) {
  const LemmaOutcome out = evaluate_fragmentary_lemma(spec_of(ModifierFamily::kS2, 1, "0000"));
  EXPECT_EQ(out.n, 8);
  EXPECT_FALSE(out.walsh_mismatch.has_value());
  EXPECT_FALSE(out.nega_mismatch.has_value());
  EXPECT_EQ(out.nega_zero + out.nega_full, 256u);
}

TEST(LemmaTest, S3HalfBranchSeesBothSigns) {
  const LemmaOutcome out =
      evaluate_fragmentary_lemma(spec_of(ModifierFamily::kS3, 1, "00", "B"));
  EXPECT_FALSE(out.nega_mismatch.has_value());
  EXPECT_GT(out.nega_half, 0u);
  EXPECT_TRUE(out.half_eps_seen[0]);
  EXPECT_TRUE(out.half_eps_seen[1]);
}

TEST(LemmaTest, S3TwoVectorBranch) {
  // Two gammas that both match at some points.
  const LemmaOutcome out =
      evaluate_fragmentary_lemma(spec_of(ModifierFamily::kS3, 1, "00,01", "B,B"));
  EXPECT_FALSE(out.nega_mismatch.has_value());
  EXPECT_FALSE(out.uniqueness_violation.has_value());
  EXPECT_EQ(out.max_nega_matches, 2u);
  EXPECT_GT(out.nega_full, 0u);
}

TEST(LemmaTest, AllSingleGammaSpecsAtKOne) {
  for (ModifierFamily family :
       {ModifierFamily::kS1, ModifierFamily::kS2, ModifierFamily::kS3, ModifierFamily::kS4}) {
    const std::vector<GammaSpec> specs = single_gamma_specs(family, 1);
    const bool h = family == ModifierFamily::kS3 || family == ModifierFamily::kS4;
    const std::size_t gammas = family == ModifierFamily::kS1 || family == ModifierFamily::kS3 ? 4 : 16;
    EXPECT_EQ(specs.size(), gammas * (h ? 3 : 1));
    for (const GammaSpec& spec : specs) {
      const VerificationReport r = verify_fragmentary_lemma(family, spec);
      EXPECT_TRUE(r.all_pass()) << r.subject;
      expect_failures_carry_points(r);
    }
  }
}

TEST(LemmaTest, RandomMultiGammaSpecs) {
  Gen gen(21);
  for (ModifierFamily family :
       {ModifierFamily::kS1, ModifierFamily::kS2, ModifierFamily::kS3, ModifierFamily::kS4}) {
    for (int trial = 0; trial < 12; ++trial) {
      const int k = family == ModifierFamily::kS1 || family == ModifierFamily::kS3
                        ? gen.uniform(1, 2)
                        : 1;
      const GammaSpec spec = gen.gamma_spec(family, k, gen.uniform(2, 4));
      const VerificationReport r = verify_fragmentary_lemma(family, spec);
      EXPECT_TRUE(r.all_pass()) << r.subject;
    }
  }
}

TEST(LemmaTest, S4MatchesAtMostOneGammaEverywhere) {
  Gen gen(22);
  for (int trial = 0; trial < 10; ++trial) {
    const GammaSpec spec = gen.gamma_spec(ModifierFamily::kS4, 1, gen.uniform(2, 4));
    const LemmaOutcome out = evaluate_fragmentary_lemma(spec);
    EXPECT_FALSE(out.uniqueness_violation.has_value());
    EXPECT_LE(out.max_walsh_matches, 1u);
    EXPECT_LE(out.max_nega_matches, 1u);
  }
}

TEST(LemmaTest, RejectsMismatchedFamily) {
  EXPECT_THROW(verify_fragmentary_lemma(ModifierFamily::kS2, spec_of(ModifierFamily::kS1, 1, "00")),
               SpecError);
  GammaSpec t = spec_of(ModifierFamily::kT, 1, "11");
  EXPECT_THROW(evaluate_fragmentary_lemma(t), SpecError);
}

TEST(Table1Test, AllRowsHold) {
  for (int k = 1; k <= 2; ++k) {
    const VerificationReport r = check_table1(k);
    EXPECT_TRUE(r.all_pass()) << k;
    expect_sorted(r);
    ASSERT_NE(r.find("sigma2 bent not negabent"), nullptr);
    ASSERT_NE(r.find("chi_T rotation order 1"), nullptr);
    ASSERT_NE(r.find("chi_S4 negabent not bent"), nullptr);
  }
  EXPECT_THROW(check_table1(0), SpecError);
}

TEST(SuConditionsTest, EveryCaseViolatesTheSecondCondition) {
  const std::vector<std::string> cosets = {
      "alpha + Lperp = {1000,0010,1101,0111}", "alpha + Lperp = {1000,0100,1011,0111}",
      "alpha + Lperp = {10000,00100,11010,01110}", "alpha + Lperp = {10000,01000,10110,01110}"};
  int i = 0;
  for (SuCase c : {SuCase::kI, SuCase::kII, SuCase::kIII, SuCase::kIV}) {
    const VerificationReport r = check_su_conditions(c);
    EXPECT_TRUE(r.all_pass()) << to_string(c);
    ASSERT_NE(r.find("c2 violated at witness"), nullptr);
    EXPECT_NE(r.find("c2 violated at witness")->details.find("{0,1}"), std::string::npos);
    EXPECT_EQ(r.find("witness coset matches")->details, cosets[static_cast<std::size_t>(i++)]);
  }
}

TEST(ExponentialSumsTest, LinearAndPairSums) {
  const VerificationReport r = check_exponential_sums(8, 3);
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.checks.size(), 2u);
}

TEST(VerifyConstructionTest, ExamplesPass) {
  for (int index = 1; index <= 3; ++index) {
    const auto [family, params] = example_spec(index);
    const VerificationReport r = verify_construction(construct(family, params), "example");
    EXPECT_TRUE(r.all_pass()) << index;
    expect_sorted(r);
    EXPECT_NE(r.find("naive-crosscheck"), nullptr);
  }
  const auto [family, params] = example_spec(3);
  const VerificationReport r = verify_construction(construct(family, params), "example");
  EXPECT_NE(r.find("rotation-order"), nullptr);
  EXPECT_NE(r.find("degree-equals-weight"), nullptr);
}

TEST(VerifyConstructionTest, SingleBitFlipFailsWithCounterexamples) {
  Gen gen(31);
  const auto [family, params] = example_spec(1);
  for (int trial = 0; trial < 20; ++trial) {
    ConstructedFunction cf = construct(family, params);
    cf.function.flip(gen.bits(8));
    const VerificationReport r = verify_construction(cf, "corrupted");
    EXPECT_FALSE(r.all_pass());
    ASSERT_NE(r.find("bent"), nullptr);
    EXPECT_FALSE(r.find("bent")->pass);
    EXPECT_FALSE(r.find("anf-closed-form")->pass);
    expect_failures_carry_points(r);
  }
}

TEST(VerifyConstructionTest, SweepReportsAreClean) {
  for (const auto& [family, params] : testing::soundness_sweep()) {
    const VerificationReport r = verify_construction(construct(family, params), "sweep");
    ASSERT_TRUE(r.all_pass()) << describe(family, params);
  }
}

TEST(VerifyFunctionTest, RandomTablesFailWithPoints) {
  Gen gen(32);
  for (int n = 2; n <= 10; n += 2) {
    const VerificationReport r = verify_function(gen.function(n), "random");
    expect_failures_carry_points(r);
    EXPECT_TRUE(r.find("parseval")->pass);
    EXPECT_TRUE(r.find("naive-crosscheck")->pass);
  }
  EXPECT_TRUE(verify_function(base_function(BaseFamily::kH0, 2), "h0").all_pass());
}

}  // namespace
}  // namespace bentneg::oracle
