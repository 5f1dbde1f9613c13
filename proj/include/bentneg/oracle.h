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

#ifndef BENTNEG_ORACLE_H_
#define BENTNEG_ORACLE_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bentneg/bit_vector.h"
#include "bentneg/boolean_function.h"
#include "bentneg/constructions.h"
#include "bentneg/spectra.h"
#include "bentneg/subspaces.h"

namespace bentneg::oracle {

inline constexpr int kNaiveMaxVariables = 14;
// verify_construction schedules the naive cross-check only up to this n.
inline constexpr int kCrossCheckMaxVariables = 10;

struct NaiveSpectra {
  WalshSpectrum walsh;
  NegaSpectrum nega;
};

// Literal double sums. Throws CapacityError above kNaiveMaxVariables.
NaiveSpectra naive_transforms(const BooleanFunction& f);

struct Check {
  std::string name;
  bool pass = false;
  std::optional<BitVector> counterexample;
  std::string details;
  double elapsed_ms = 0;
};

struct VerificationReport {
  std::string subject;
  // Sorted by name once finalized.
  std::vector<Check> checks;
  double elapsed_ms = 0;

  bool all_pass() const;
  std::size_t passed() const;
  const Check* find(const std::string& name) const;
};

// c = twice / 2 when half_integral holds. Otherwise c has a denominator that
// does not divide 2.
struct FrameCoefficient {
  bool half_integral = false;
  GaussianInteger twice;
};

// Outcome of N_f = N_{f0} - 2 N_{f0,T} at one point, by value of c.
enum class NegaBranch { kSame, kNegated, kTimesI, kTimesMinusI, kOther };

struct FrameCoefficients {
  std::vector<FrameCoefficient> walsh_c;
  std::vector<FrameCoefficient> nega_c;
  bool walsh_ok = false;
  bool nega_ok = false;
  std::optional<std::uint64_t> walsh_witness;
  std::optional<std::uint64_t> nega_witness;
  // Indexed by NegaBranch.
  std::array<std::uint64_t, 5> nega_branch_counts{};
};

// c = W_{f0,T} / W_{f0} and the nega analog at every point. Throws
// NotBentError unless f0 is bent and negabent.
FrameCoefficients extract_frame_coefficients(const BooleanFunction& f0, const VectorSet& t);
NegaBranch nega_branch(const FrameCoefficient& c);

// Pointwise comparison of directly summed fragmentary transforms with the
// closed-form case split for one S1..S4 spec.
struct LemmaOutcome {
  int n = 0;
  std::optional<std::uint64_t> walsh_mismatch;
  std::optional<std::uint64_t> nega_mismatch;
  // First point where more (gamma, eps) pairs match than the case split
  // allows: one for S1, S2, S4 and for Walsh conditions, two for S3 nega.
  std::optional<std::uint64_t> uniqueness_violation;
  std::uint64_t max_walsh_matches = 0;
  std::uint64_t max_nega_matches = 0;
  // Nega case counts: no match, one half-scaled match, two matches (S3) or
  // one full match (S1, S2).
  std::uint64_t nega_zero = 0;
  std::uint64_t nega_half = 0;
  std::uint64_t nega_full = 0;
  // Which eps values occurred in half-scaled matches.
  std::array<bool, 2> half_eps_seen{};
};

LemmaOutcome evaluate_fragmentary_lemma(const GammaSpec& spec);
// family must equal spec.family and be one of S1..S4; otherwise SpecError.
VerificationReport verify_fragmentary_lemma(ModifierFamily family, const GammaSpec& spec);

VerificationReport check_table1(int k);

enum class SuCase { kI, kII, kIII, kIV };
std::string to_string(SuCase c);
VerificationReport check_su_conditions(SuCase c);

// Sum over F_2^k of (-1)^{a.x} for k <= max_k, and the sums over A_2^k with
// and without the i^{wt(x)} factor for k <= max_pair_k.
VerificationReport check_exponential_sums(int max_k, int max_pair_k);

VerificationReport verify_construction(const ConstructedFunction& cf, const std::string& subject);
// Bent, negabent and Parseval checks for a table with no construction
// metadata, plus the naive cross-check up to kCrossCheckMaxVariables.
VerificationReport verify_function(const BooleanFunction& f, const std::string& subject);

// Every one-gamma spec of an S1..S4 family at k; for S3 and S4 each gamma is
// paired with each of the three E sets.
std::vector<GammaSpec> single_gamma_specs(ModifierFamily family, int k);

}  // namespace bentneg::oracle

#endif  // BENTNEG_ORACLE_H_
