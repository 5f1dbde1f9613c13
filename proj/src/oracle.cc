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

#include "bentneg/oracle.h"

#include <algorithm>
#include <chrono>
#include <set>
#include <string>
#include <utility>

#include "bentneg/errors.h"

namespace bentneg::oracle {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

class ReportBuilder {
 public:
  explicit ReportBuilder(std::string subject) : start_(Clock::now()) {
    report_.subject = std::move(subject);
  }

  // fn fills pass, details and counterexample of the check it receives.
  template <typename Fn>
  void run(std::string name, Fn&& fn) {
    const auto start = Clock::now();
    Check check;
    check.name = std::move(name);
    fn(check);
    check.elapsed_ms = ms_since(start);
    report_.checks.push_back(std::move(check));
  }

  VerificationReport finish() {
    std::stable_sort(report_.checks.begin(), report_.checks.end(),
                     [](const Check& a, const Check& b) { return a.name < b.name; });
    report_.elapsed_ms = ms_since(start_);
    return std::move(report_);
  }

 private:
  Clock::time_point start_;
  VerificationReport report_;
};

BitVector point(std::uint64_t x, int n) { return BitVector(n, x); }

std::optional<std::uint64_t> first_difference(const BooleanFunction& a, const BooleanFunction& b) {
  for (std::uint64_t x = 0; x < a.size(); ++x) {
    if (a(x) != b(x)) return x;
  }
  return std::nullopt;
}

// 2c for c = num / den, if 2c is a Gaussian integer.
FrameCoefficient divide_twice(const GaussianInteger& num, const GaussianInteger& den) {
  const std::int64_t norm = den.norm();
  const GaussianInteger scaled = num * den.conj() * 2;
  FrameCoefficient c;
  if (scaled.re % norm != 0 || scaled.im % norm != 0) return c;
  c.half_integral = true;
  c.twice = {scaled.re / norm, scaled.im / norm};
  return c;
}

std::uint64_t swap_halves(std::uint64_t g, int h) {
  return (g >> h) | ((g & low_mask(h)) << h);
}

}  // namespace

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }));
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

NaiveSpectra naive_transforms(const BooleanFunction& f) {
  const int n = f.num_vars();
  if (n > kNaiveMaxVariables) {
    throw CapacityError("naive transforms are limited to n <= " +
                        std::to_string(kNaiveMaxVariables));
  }
  const std::uint64_t size = f.size();
  NaiveSpectra out{WalshSpectrum{n, std::vector<std::int64_t>(size)},
                   NegaSpectrum{n, std::vector<GaussianInteger>(size)}};
  for (std::uint64_t u = 0; u < size; ++u) {
    std::int64_t w = 0;
    GaussianInteger z;
    for (std::uint64_t x = 0; x < size; ++x) {
      const bool negative = f(x) ^ static_cast<bool>(parity(u & x));
      w += negative ? -1 : 1;
      const GaussianInteger unit = GaussianInteger::i_power(popcount(x));
      z += negative ? -unit : unit;
    }
    out.walsh.values[u] = w;
    out.nega.values[u] = z;
  }
  return out;
}

NegaBranch nega_branch(const FrameCoefficient& c) {
  if (!c.half_integral) return NegaBranch::kOther;
  const GaussianInteger t = c.twice;
  if (t == GaussianInteger{0, 0}) return NegaBranch::kSame;
  if (t == GaussianInteger{2, 0}) return NegaBranch::kNegated;
  if (t == GaussianInteger{1, -1}) return NegaBranch::kTimesI;
  if (t == GaussianInteger{1, 1}) return NegaBranch::kTimesMinusI;
  return NegaBranch::kOther;
}

FrameCoefficients extract_frame_coefficients(const BooleanFunction& f0, const VectorSet& t) {
  const WalshSpectrum w = walsh_transform(f0);
  const NegaSpectrum nv = nega_transform(f0);
  if (auto u = walsh_flatness_witness(w)) {
    throw NotBentError("frame base is not bent at " + point(*u, f0.num_vars()).to_string());
  }
  if (auto u = nega_flatness_witness(nv)) {
    throw NotBentError("frame base is not negabent at " + point(*u, f0.num_vars()).to_string());
  }
  const WalshSpectrum wt = fragmentary_walsh_spectrum(f0, t);
  const NegaSpectrum nt = fragmentary_nega_spectrum(f0, t);
  FrameCoefficients out;
  out.walsh_c.resize(f0.size());
  out.nega_c.resize(f0.size());
  for (std::uint64_t u = 0; u < f0.size(); ++u) {
    const FrameCoefficient cw = divide_twice({wt[u], 0}, {w[u], 0});
    out.walsh_c[u] = cw;
    const bool walsh_admissible =
        cw.half_integral && (cw.twice == GaussianInteger{0, 0} || cw.twice == GaussianInteger{2, 0});
    if (!walsh_admissible && !out.walsh_witness) out.walsh_witness = u;
    const FrameCoefficient cn = divide_twice(nt[u], nv[u]);
    out.nega_c[u] = cn;
    const NegaBranch branch = nega_branch(cn);
    ++out.nega_branch_counts[static_cast<std::size_t>(branch)];
    if (branch == NegaBranch::kOther && !out.nega_witness) out.nega_witness = u;
  }
  out.walsh_ok = !out.walsh_witness;
  out.nega_ok = !out.nega_witness;
  return out;
}

LemmaOutcome evaluate_fragmentary_lemma(const GammaSpec& spec) {
  spec.validate();
  if (spec.family == ModifierFamily::kT) {
    throw SpecError("fragmentary lemma checks cover S1, S2, S3 and S4 only");
  }
  const int k = spec.k;
  const bool h = spec.family == ModifierFamily::kS3 || spec.family == ModifierFamily::kS4;
  const bool wide = spec.family == ModifierFamily::kS2 || spec.family == ModifierFamily::kS4;
  const BaseFamily base_family = h ? BaseFamily::kH0 : BaseFamily::kG0;
  const int t = wide ? 2 * k : k;
  const BooleanFunction base = base_function(base_family, t);
  const VectorSet set = build_modifier_set(spec);
  const WalshSpectrum w = walsh_transform(base);
  const NegaSpectrum nv = nega_transform(base);
  const int n = base.num_vars();
  // Length of the x block (x_m excluded).
  const int m = 2 * t;
  const int block_shift = h ? m + 1 : m;

  LemmaOutcome out;
  out.n = n;
  for (std::uint64_t p = 0; p < base.size(); ++p) {
    const std::uint64_t big_u = p & low_mask(block_shift);
    const std::uint64_t big_v = p >> block_shift;
    const std::uint64_t u = big_u & low_mask(m);
    const std::uint64_t v = big_v & low_mask(m);
    const int um = h ? static_cast<int>((big_u >> m) & 1) : 0;
    const int vm = h ? static_cast<int>((big_v >> m) & 1) : 0;
    const std::uint64_t u_fold = (u ^ (u >> t)) & low_mask(t);  // u' + u''
    const std::uint64_t v_fold = (v ^ (v >> t)) & low_mask(t);  // v' + v''

    std::uint64_t walsh_matches = 0;
    std::uint64_t nega_matches = 0;
    int matched_eps = -1;
    for (std::size_t i = 0; i < spec.gammas.size(); ++i) {
      const std::uint64_t g = spec.gammas[i].bits();
      const ESet e = h ? spec.e_sets[i] : ESet::kBoth;
      switch (spec.family) {
        case ModifierFamily::kS1: {
          const std::uint64_t g1 = g & low_mask(k);
          const std::uint64_t g2 = g >> k;
          if (g1 == (u_fold ^ v_fold ^ low_mask(k)) && g2 == u_fold) ++walsh_matches;
          if (g1 == v_fold && g2 == (u_fold ^ v_fold ^ low_mask(k))) ++nega_matches;
          break;
        }
        case ModifierFamily::kS2: {
          const std::uint64_t sw = swap_halves(g, 2 * k);
          if (in_pair_repetition(u ^ g, 2 * k) && in_pair_repetition(v ^ sw, 2 * k)) {
            ++walsh_matches;
          }
          if (in_pair_alternation(u ^ g, 2 * k) && in_pair_alternation(v ^ g ^ sw, 2 * k)) {
            ++nega_matches;
          }
          break;
        }
        case ModifierFamily::kS3: {
          const std::uint64_t g1 = g & low_mask(k);
          const std::uint64_t g2 = g >> k;
          if (g2 == (u_fold ^ static_cast<std::uint64_t>(um)) &&
              (g1 ^ g2) == (v_fold ^ low_mask(k)) && e_set_contains(e, um)) {
            ++walsh_matches;
          }
          for (int eps = 0; eps < 2; ++eps) {
            if (!e_set_contains(e, eps)) continue;
            if (g1 == v_fold &&
                (g1 ^ g2) == (u_fold ^ low_mask(k) ^ static_cast<std::uint64_t>(eps))) {
              ++nega_matches;
              matched_eps = eps;
            }
          }
          break;
        }
        case ModifierFamily::kS4: {
          const std::uint64_t sw = swap_halves(g, 2 * k);
          if (e_set_contains(e, um) &&
              in_pair_repetition(u ^ static_cast<std::uint64_t>(um) ^ g, 2 * k) &&
              in_pair_repetition(v ^ sw, 2 * k)) {
            ++walsh_matches;
          }
          for (int eps = 0; eps < 2; ++eps) {
            if (!e_set_contains(e, eps)) continue;
            if (in_pair_alternation(u ^ g ^ static_cast<std::uint64_t>(eps), 2 * k) &&
                in_pair_alternation(v ^ g ^ sw, 2 * k)) {
              ++nega_matches;
              matched_eps = eps;
            }
          }
          break;
        }
        case ModifierFamily::kT:
          break;
      }
    }
    out.max_walsh_matches = std::max(out.max_walsh_matches, walsh_matches);
    out.max_nega_matches = std::max(out.max_nega_matches, nega_matches);
    const std::uint64_t nega_limit = spec.family == ModifierFamily::kS3 ? 2 : 1;
    if ((walsh_matches > 1 || nega_matches > nega_limit) && !out.uniqueness_violation) {
      out.uniqueness_violation = p;
    }

    const std::int64_t predicted_w = walsh_matches > 0 ? w[p] : 0;
    // Twice the predicted nega value, exact in Gaussian integers.
    GaussianInteger predicted_n2;
    if (nega_matches == 0) {
      ++out.nega_zero;
    } else if (h && nega_matches == 1) {
      ++out.nega_half;
      out.half_eps_seen[static_cast<std::size_t>(matched_eps)] = true;
      const int tb = t;  // index of the first coordinate of u'' and v''
      const int exponent = static_cast<int>(u & 1) + static_cast<int>((u >> tb) & 1) +
                           static_cast<int>((v >> tb) & 1) + vm + um + matched_eps;
      const GaussianInteger factor{1, (exponent % 2 == 0) ? 1 : -1};
      predicted_n2 = factor * nv[p];
    } else {
      ++out.nega_full;
      predicted_n2 = nv[p] * 2;
    }

    const BitVector pt = point(p, n);
    if (!out.walsh_mismatch && fragmentary_walsh(base, set, pt) != predicted_w) {
      out.walsh_mismatch = p;
    }
    if (!out.nega_mismatch && fragmentary_nega(base, set, pt) * 2 != predicted_n2) {
      out.nega_mismatch = p;
    }
  }
  return out;
}

VerificationReport verify_fragmentary_lemma(ModifierFamily family, const GammaSpec& spec) {
  if (family != spec.family) {
    throw SpecError("lemma family " + to_string(family) + " does not match a " +
                    to_string(spec.family) + " spec");
  }
  std::string subject = "lemma " + to_string(family) + " k=" + std::to_string(spec.k) +
                        " gamma=" + format_gamma_list(spec.gammas);
  if (!spec.e_sets.empty()) subject += " eset=" + format_e_list(spec.e_sets);
  ReportBuilder report(subject);
  LemmaOutcome outcome;
  report.run("evaluate", [&](Check& c) {
    outcome = evaluate_fragmentary_lemma(spec);
    c.pass = true;
    c.details = std::to_string(std::uint64_t{1} << outcome.n) + " points evaluated";
  });
  report.run("walsh-closed-form", [&](Check& c) {
    c.pass = !outcome.walsh_mismatch;
    if (!c.pass) c.counterexample = point(*outcome.walsh_mismatch, outcome.n);
    c.details = c.pass ? "direct sums match the case split at every point"
                       : "direct sum differs from the case split";
  });
  report.run("nega-closed-form", [&](Check& c) {
    c.pass = !outcome.nega_mismatch;
    if (!c.pass) c.counterexample = point(*outcome.nega_mismatch, outcome.n);
    c.details = c.pass ? "direct sums match the case split at every point"
                       : "direct sum differs from the case split";
  });
  report.run("gamma-uniqueness", [&](Check& c) {
    c.pass = !outcome.uniqueness_violation;
    if (!c.pass) c.counterexample = point(*outcome.uniqueness_violation, outcome.n);
    c.details = "max walsh matches " + std::to_string(outcome.max_walsh_matches) +
                ", max nega matches " + std::to_string(outcome.max_nega_matches);
  });
  report.run("nega-branches", [&](Check& c) {
    c.pass = outcome.nega_zero + outcome.nega_half + outcome.nega_full ==
             (std::uint64_t{1} << outcome.n);
    c.details = "zero " + std::to_string(outcome.nega_zero) + ", half-scaled " +
                std::to_string(outcome.nega_half) + ", full " +
                std::to_string(outcome.nega_full) + ", eps seen {" +
                (outcome.half_eps_seen[0] ? "0" : "") +
                (outcome.half_eps_seen[0] && outcome.half_eps_seen[1] ? "," : "") +
                (outcome.half_eps_seen[1] ? "1" : "") + "}";
  });
  return report.finish();
}

std::string to_string(SuCase c) {
  switch (c) {
    case SuCase::kI:
      return "i";
    case SuCase::kII:
      return "ii";
    case SuCase::kIII:
      return "iii";
    case SuCase::kIV:
      return "iv";
  }
  return "?";
}

namespace {

// Runs classify and records the verdicts against expectations; an empty
// expectation leaves that property unchecked.
void expect_flags(ReportBuilder& report, const std::string& name, const BooleanFunction& f,
                  std::optional<bool> want_bent, std::optional<bool> want_negabent) {
  report.run(name, [&](Check& c) {
    const Classification cls = classify(f);
    c.pass = (!want_bent || cls.is_bent == *want_bent) &&
             (!want_negabent || cls.is_negabent == *want_negabent);
    c.details = "n=" + std::to_string(f.num_vars()) + " bent=" + (cls.is_bent ? "yes" : "no") +
                " negabent=" + (cls.is_negabent ? "yes" : "no");
    if (c.pass) return;
    // A flat spectrum expected but missing yields its witness; an unexpected
    // flat spectrum has no single witness, so point 0 stands in.
    std::uint64_t witness = 0;
    if (want_bent.value_or(false) && cls.bent_witness) witness = *cls.bent_witness;
    if (want_negabent.value_or(false) && cls.negabent_witness) witness = *cls.negabent_witness;
    c.counterexample = point(witness, f.num_vars());
  });
}

GammaSpec zero_spec(ModifierFamily family, int k) {
  GammaSpec spec;
  spec.family = family;
  spec.k = k;
  spec.gammas = {BitVector::zeros(spec.gamma_length())};
  if (family == ModifierFamily::kS3 || family == ModifierFamily::kS4) {
    spec.e_sets = {ESet::kBoth};
  }
  return spec;
}

}  // namespace

VerificationReport check_table1(int k) {
  if (k < 1) throw SpecError("table check needs k >= 1");
  ReportBuilder report("table1 k=" + std::to_string(k));
  const int n = 4 * k;
  const BooleanFunction sigma2 = base_function(BaseFamily::kSigma2, n);
  const BooleanFunction g0 = base_function(BaseFamily::kG0, k);
  const BooleanFunction g0_wide = base_function(BaseFamily::kG0, 2 * k);
  const BooleanFunction h0 = base_function(BaseFamily::kH0, k);
  const BooleanFunction h0_wide = base_function(BaseFamily::kH0, 2 * k);
  const BooleanFunction f0 = base_function(BaseFamily::kF0, k);

  const BooleanFunction chi_s1 = characteristic_function(build_S1(zero_spec(ModifierFamily::kS1, k)));
  const BooleanFunction chi_s2 = characteristic_function(build_S2(zero_spec(ModifierFamily::kS2, k)));
  const BooleanFunction chi_s3 = characteristic_function(build_S3(zero_spec(ModifierFamily::kS3, k)));
  const BooleanFunction chi_s4 = characteristic_function(build_S4(zero_spec(ModifierFamily::kS4, k)));
  GammaSpec t_spec;
  t_spec.family = ModifierFamily::kT;
  t_spec.k = k;
  t_spec.gammas = {BitVector::ones(2 * k)};
  t_spec.rotation_closed = true;
  const BooleanFunction chi_t = characteristic_function(build_T(t_spec));

  expect_flags(report, "sigma2 bent not negabent", sigma2, true, false);
  expect_flags(report, "bent g0 plus sigma2 negabent", g0 ^ sigma2, std::nullopt, true);
  expect_flags(report, "negabent chi_S1 plus sigma2 bent", chi_s1 ^ sigma2, true, std::nullopt);
  expect_flags(report, "bent sigma2 plus sigma2 negabent", sigma2 ^ sigma2, std::nullopt, true);
  expect_flags(report, "g0 bent-negabent", g0, true, true);
  expect_flags(report, "g0 (8k) bent-negabent", g0_wide, true, true);
  expect_flags(report, "h0 bent-negabent", h0, true, true);
  expect_flags(report, "h0 (8k+2) bent-negabent", h0_wide, true, true);
  expect_flags(report, "f0 bent-negabent", f0, true, true);
  expect_flags(report, "chi_S1 negabent not bent", chi_s1, false, true);
  expect_flags(report, "chi_S2 negabent not bent", chi_s2, false, true);
  expect_flags(report, "chi_S3 negabent not bent", chi_s3, false, true);
  expect_flags(report, "chi_S4 negabent not bent", chi_s4, false, true);
  expect_flags(report, "chi_T negabent not bent", chi_t, false, true);
  expect_flags(report, "g0 plus chi_S1 bent-negabent", g0 ^ chi_s1, true, true);
  expect_flags(report, "g0 plus chi_S2 bent-negabent", g0_wide ^ chi_s2, true, true);
  expect_flags(report, "h0 plus chi_S3 bent-negabent", h0 ^ chi_s3, true, true);
  expect_flags(report, "h0 plus chi_S4 bent-negabent", h0_wide ^ chi_s4, true, true);
  expect_flags(report, "f0 plus chi_T bent-negabent", f0 ^ chi_t, true, true);

  const auto expect_order = [&](const std::string& name, const BooleanFunction& f, int want) {
    report.run(name, [&](Check& c) {
      const int order = rotation_symmetry_order(f);
      c.pass = order == want;
      c.details = "rotation order " + std::to_string(order) + ", expected " + std::to_string(want);
      if (c.pass) return;
      // A point moved by the smallest expected shift, or point 0.
      std::uint64_t witness = 0;
      for (std::uint64_t x = 0; x < f.size(); ++x) {
        if (f(rotate_mask(x, want, f.num_vars())) != f(x)) {
          witness = x;
          break;
        }
      }
      c.counterexample = point(witness, f.num_vars());
    });
  };
  expect_order("chi_T rotation order 1", chi_t, 1);
  expect_order("f0 rotation order 2", f0, 2);
  expect_order("f0 plus chi_T rotation order 2", f0 ^ chi_t, 2);
  return report.finish();
}

namespace {

struct SuCaseData {
  std::string label;
  // Dimension of the X block, and the polynomial size m of phi's argument.
  int dim = 0;
  std::vector<std::uint64_t> l_generators;
  std::vector<std::uint64_t> expected_lperp_generators;
  bool shifted_pi = false;  // pi(Y) = (y0 + y_m, y1, ..., y_m)
  int t = 0;                // phi(Y) = y' . y'' over the first 2t coordinates
  std::uint64_t alpha = 0;
  std::vector<std::string> printed_coset;
  GammaSpec modifier;
};

SuCaseData su_case_data(SuCase c) {
  SuCaseData d;
  switch (c) {
    case SuCase::kI:
      // k = 2, L = {x' = x''} in F_2^4.
      d.dim = 4;
      d.t = 2;
      d.l_generators = {0b0101, 0b1010};
      d.expected_lperp_generators = d.l_generators;
      d.alpha = 0b0001;
      d.printed_coset = {"1000", "0010", "1101", "0111"};
      d.modifier.family = ModifierFamily::kS1;
      d.modifier.k = 2;
      d.modifier.gammas = {BitVector::zeros(d.modifier.gamma_length())};
      break;
    case SuCase::kII:
      // k = 1, L = A_2^2 in F_2^4.
      d.dim = 4;
      d.t = 2;
      d.l_generators = {0b0011, 0b1100};
      d.expected_lperp_generators = d.l_generators;
      d.alpha = 0b0001;
      d.printed_coset = {"1000", "0100", "1011", "0111"};
      d.modifier.family = ModifierFamily::kS2;
      d.modifier.k = 1;
      d.modifier.gammas = {BitVector::zeros(d.modifier.gamma_length())};
      break;
    case SuCase::kIII:
      // k = 2, L = {x' = x''} x F_2 in F_2^5.
      d.dim = 5;
      d.t = 2;
      d.shifted_pi = true;
      d.l_generators = {0b00101, 0b01010, 0b10000};
      d.expected_lperp_generators = {0b00101, 0b01010};
      d.alpha = 0b00001;
      d.printed_coset = {"10000", "11010", "00100", "01110"};
      d.modifier.family = ModifierFamily::kS3;
      d.modifier.k = 2;
      d.modifier.gammas = {BitVector::zeros(d.modifier.gamma_length())};
      d.modifier.e_sets = {ESet::kZero};
      break;
    case SuCase::kIV:
      // k = 1, L = A_2^2 x F_2 in F_2^5.
      d.dim = 5;
      d.t = 2;
      d.shifted_pi = true;
      d.l_generators = {0b00011, 0b01100, 0b10000};
      d.expected_lperp_generators = {0b00011, 0b01100};
      d.alpha = 0b00001;
      d.printed_coset = {"10000", "01000", "10110", "01110"};
      d.modifier.family = ModifierFamily::kS4;
      d.modifier.k = 1;
      d.modifier.gammas = {BitVector::zeros(d.modifier.gamma_length())};
      d.modifier.e_sets = {ESet::kZero};
      break;
  }
  d.label = to_string(c);
  return d;
}

LinearSubspace span_masks(int n, const std::vector<std::uint64_t>& masks) {
  std::vector<BitVector> gens;
  for (std::uint64_t m : masks) gens.emplace_back(n, m);
  return LinearSubspace::span(n, gens);
}

}  // namespace

VerificationReport check_su_conditions(SuCase which) {
  const SuCaseData d = su_case_data(which);
  ReportBuilder report("su-check case (" + d.label + ")");
  const int n = d.dim;
  const int m = d.shifted_pi ? n - 1 : n;  // index of y_m when present
  const auto pi = [&](std::uint64_t y) -> std::uint64_t {
    if (!d.shifted_pi) return y;
    return y ^ ((y >> m) & 1);
  };
  const auto phi = [&](std::uint64_t y) -> int {
    return parity(y & (y >> d.t) & low_mask(d.t));
  };
  const LinearSubspace l = span_masks(n, d.l_generators);
  const LinearSubspace lperp = orthogonal_complement(l);

  report.run("lperp matches", [&](Check& c) {
    c.pass = lperp == span_masks(n, d.expected_lperp_generators);
    c.details = "dim L = " + std::to_string(l.dim()) + ", dim Lperp = " +
                std::to_string(lperp.dim());
    if (!c.pass) c.counterexample = point(lperp.basis().empty() ? 0 : lperp.basis()[0], n);
  });
  report.run("c1 pi linear", [&](Check& c) {
    c.pass = pi(0) == 0;
    std::uint64_t bad = 0;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n) && c.pass; ++a) {
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        if (pi(a ^ b) != (pi(a) ^ pi(b))) {
          c.pass = false;
          bad = a;
          break;
        }
      }
    }
    c.details = d.shifted_pi ? "pi(Y) = (y0 + y_m, y1, ..., y_m)" : "pi = identity";
    if (!c.pass) c.counterexample = point(bad, n);
  });
  report.run("c1 pi preserves lperp", [&](Check& c) {
    c.pass = true;
    for (std::uint64_t y : lperp.members()) {
      if (!lperp.contains(pi(y))) {
        c.pass = false;
        c.counterexample = point(y, n);
        break;
      }
    }
    c.details = "pi maps each of the " + std::to_string(lperp.members().size()) +
                " members of Lperp into Lperp";
  });
  const VectorSet coset = lperp.coset(d.alpha);
  report.run("witness coset matches", [&](Check& c) {
    std::vector<std::uint64_t> printed;
    for (const auto& s : d.printed_coset) printed.push_back(BitVector::parse(s).bits());
    c.pass = coset == VectorSet::from_members(n, printed);
    std::string listed;
    for (std::uint64_t y : coset.members()) {
      listed += (listed.empty() ? "" : ",") + point(y, n).to_string();
    }
    c.details = "alpha + Lperp = {" + listed + "}";
    if (!c.pass) c.counterexample = point(d.alpha, n);
  });
  report.run("c2 violated at witness", [&](Check& c) {
    std::set<int> image;
    for (std::uint64_t y : coset.members()) image.insert(phi(y));
    c.pass = image.size() == 2;
    c.details = "phi(alpha) = " + std::to_string(phi(d.alpha)) + ", phi(alpha + Lperp) = {" +
                (image.contains(0) ? std::string("0") : "") + (image.size() == 2 ? "," : "") +
                (image.contains(1) ? "1" : "") + "}";
    if (!c.pass) c.counterexample = point(d.alpha, n);
  });
  report.run("set matches modifier", [&](Check& c) {
    // S = {(X, Y) : X in L, Y in Lperp} with X on the low block.
    VectorSet s(2 * n);
    for (std::uint64_t x : l.members()) {
      for (std::uint64_t y : lperp.members()) s.insert(x | (y << n));
    }
    const VectorSet ours = build_modifier_set(d.modifier);
    c.pass = s == ours;
    c.details = to_string(d.modifier.family) + " with gamma = 0 has " +
                std::to_string(ours.size()) + " members";
    if (!c.pass) {
      for (std::uint64_t z = 0; z < (std::uint64_t{1} << (2 * n)); ++z) {
        if (s.contains(z) != ours.contains(z)) {
          c.counterexample = point(z, 2 * n);
          break;
        }
      }
    }
  });
  return report.finish();
}

VerificationReport check_exponential_sums(int max_k, int max_pair_k) {
  ReportBuilder report("exponential sums");
  report.run("linear sums over F_2^k", [&](Check& c) {
    c.pass = true;
    for (int k = 1; k <= max_k && c.pass; ++k) {
      for (std::uint64_t a = 0; a < (std::uint64_t{1} << k); ++a) {
        std::int64_t sum = 0;
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x) sum += parity(a & x) ? -1 : 1;
        const std::int64_t want = a == 0 ? (std::int64_t{1} << k) : 0;
        if (sum != want) {
          c.pass = false;
          c.counterexample = point(a, k);
          break;
        }
      }
    }
    c.details = "k = 1.." + std::to_string(max_k);
  });
  report.run("sums over A_2^k", [&](Check& c) {
    c.pass = true;
    for (int k = 1; k <= max_pair_k && c.pass; ++k) {
      const int n = 2 * k;
      const std::vector<std::uint64_t> members = pair_repetition_subspace(k).members();
      for (std::uint64_t u = 0; u < (std::uint64_t{1} << n) && c.pass; ++u) {
        std::int64_t plain = 0;
        GaussianInteger twisted;
        for (std::uint64_t x : members) {
          const bool neg = parity(u & x);
          plain += neg ? -1 : 1;
          const GaussianInteger unit = GaussianInteger::i_power(popcount(x));
          twisted += neg ? -unit : unit;
        }
        const std::int64_t full = std::int64_t{1} << k;
        const bool ok = plain == (in_pair_repetition(u, k) ? full : 0) &&
                        twisted == GaussianInteger{in_pair_alternation(u, k) ? full : 0, 0};
        if (!ok) {
          c.pass = false;
          c.counterexample = point(u, n);
        }
      }
    }
    c.details = "k = 1.." + std::to_string(max_pair_k) + ", plain and i^wt-twisted";
  });
  return report.finish();
}

namespace {

std::int64_t expected_modifier_size(const GammaSpec& spec) {
  // Each gamma (and each admissible x_m value for S3, S4) contributes a
  // disjoint block of 2^{n/2} points.
  const int half = spec.ambient_dim() / 2;
  std::int64_t blocks = 0;
  for (std::size_t i = 0; i < spec.gammas.size(); ++i) {
    const bool h = spec.family == ModifierFamily::kS3 || spec.family == ModifierFamily::kS4;
    blocks += h ? e_set_size(spec.e_sets[i]) : 1;
  }
  return blocks << half;
}

}  // namespace

VerificationReport verify_construction(const ConstructedFunction& cf, const std::string& subject) {
  ReportBuilder report(subject);
  const BooleanFunction& f = cf.function;
  const int n = f.num_vars();
  const WalshSpectrum w = walsh_transform(f);
  const NegaSpectrum nv = nega_transform(f);
  const AnfPolynomial anf = anf_from_truth_table(f);
  const std::int64_t full_energy = std::int64_t{1} << (2 * n);

  report.run("anf-closed-form", [&](Check& c) {
    const AnfPolynomial diff = anf + cf.closed_anf;
    c.pass = diff.num_terms() == 0;
    c.details = std::to_string(anf.num_terms()) + " terms, closed form " +
                std::to_string(cf.closed_anf.num_terms()) + " terms";
    if (!c.pass) {
      c.counterexample = point(diff.monomials().front(), n);
      c.details += ", first differing monomial " + monomial_to_string(diff.monomials().front());
    }
  });
  report.run("bent", [&](Check& c) {
    const auto u = walsh_flatness_witness(w);
    c.pass = !u;
    c.details = "W_f(0) = " + std::to_string(w[0]);
    if (u) {
      c.counterexample = point(*u, n);
      c.details += ", W_f(u) = " + std::to_string(w[*u]);
    }
  });
  report.run("negabent", [&](Check& c) {
    const auto u = nega_flatness_witness(nv);
    c.pass = !u;
    c.details = "N_f(0) = " + to_string(nv[0]);
    if (u) {
      c.counterexample = point(*u, n);
      c.details += ", N_f(u) = " + to_string(nv[*u]);
    }
  });
  report.run("parseval", [&](Check& c) {
    c.pass = w.energy() == full_energy && nv.energy() == full_energy;
    c.details = "walsh energy " + std::to_string(w.energy()) + ", nega energy " +
                std::to_string(nv.energy()) + ", expected " + std::to_string(full_energy);
    if (!c.pass) c.counterexample = point(0, n);
  });

  // The dual checks need a bent function; a non-bent one already fails above.
  std::optional<BooleanFunction> spectral_dual;
  if (!walsh_flatness_witness(w)) spectral_dual = dual_from_spectrum(w);
  report.run("dual-closed-form", [&](Check& c) {
    if (!spectral_dual) {
      c.pass = false;
      c.details = "function is not bent";
      c.counterexample = point(*walsh_flatness_witness(w), n);
      return;
    }
    const auto x = first_difference(*spectral_dual, cf.closed_dual);
    c.pass = !x;
    c.details = "closed-form dual against sign of W_f";
    if (x) c.counterexample = point(*x, n);
  });
  report.run("dual-bent-negabent", [&](Check& c) {
    if (!spectral_dual) {
      c.pass = false;
      c.details = "function is not bent";
      c.counterexample = point(*walsh_flatness_witness(w), n);
      return;
    }
    const Classification cls = classify(*spectral_dual);
    c.pass = cls.is_bent && cls.is_negabent;
    c.details = std::string("dual bent=") + (cls.is_bent ? "yes" : "no") +
                " negabent=" + (cls.is_negabent ? "yes" : "no");
    if (!c.pass) {
      c.counterexample = point(cls.bent_witness.value_or(cls.negabent_witness.value_or(0)), n);
    }
  });
  report.run("dual-involution", [&](Check& c) {
    if (!spectral_dual) {
      c.pass = false;
      c.details = "function is not bent";
      c.counterexample = point(*walsh_flatness_witness(w), n);
      return;
    }
    const auto x = first_difference(dual(*spectral_dual), f);
    c.pass = !x;
    c.details = "dual of the dual against f";
    if (x) c.counterexample = point(*x, n);
  });
  report.run("degree-prediction", [&](Check& c) {
    const int degree = anf.degree();
    if (cf.predicts_max_degree) {
      c.pass = degree == cf.max_degree;
    } else {
      // A family maximum of 2 is reached by the quadratic base alone.
      c.pass = cf.max_degree <= 2 ? degree == cf.max_degree : degree < cf.max_degree;
    }
    c.details = "degree " + std::to_string(degree) + ", maximum " +
                std::to_string(cf.max_degree) + ", predicted " +
                (cf.predicts_max_degree ? "maximum" : "below maximum");
    if (!c.pass) {
      std::uint64_t top = low_mask(cf.max_degree);
      for (std::uint64_t mono : anf.monomials()) {
        if (popcount(mono) == degree) top = mono;
      }
      c.counterexample = point(top, n);
    }
  });

  const FrameCoefficients frame = extract_frame_coefficients(cf.base, cf.modifier_set);
  report.run("frame-walsh", [&](Check& c) {
    c.pass = frame.walsh_ok;
    c.details = "c in {0, 1} at every point";
    if (frame.walsh_witness) c.counterexample = point(*frame.walsh_witness, n);
  });
  report.run("frame-nega", [&](Check& c) {
    c.pass = frame.nega_ok;
    const auto& b = frame.nega_branch_counts;
    c.details = "branches N=" + std::to_string(b[0]) + " -N=" + std::to_string(b[1]) +
                " iN=" + std::to_string(b[2]) + " -iN=" + std::to_string(b[3]) +
                " other=" + std::to_string(b[4]);
    if (frame.nega_witness) c.counterexample = point(*frame.nega_witness, n);
  });

  const bool rotating = cf.family == Family::kF2RS || cf.family == Family::kF2RSA ||
                        cf.family == Family::kF2RSOrbit;
  if (rotating) {
    report.run("rotation-order", [&](Check& c) {
      const int order = rotation_symmetry_order(f);
      c.pass = order == 2;
      c.details = "rotation order " + std::to_string(order) + ", expected 2";
      if (c.pass) return;
      std::uint64_t witness = 0;
      for (std::uint64_t x = 0; x < f.size(); ++x) {
        if (f(rotate_mask(x, 2, n)) != f(x)) {
          witness = x;
          break;
        }
      }
      c.counterexample = point(witness, n);
    });
  }
  if (cf.family == Family::kF2RSOrbit && cf.params.single_gamma) {
    report.run("degree-equals-weight", [&](Check& c) {
      const int weight = cf.params.single_gamma->weight();
      c.pass = anf.degree() == weight;
      c.details = "degree " + std::to_string(anf.degree()) + ", wt(gamma) " +
                  std::to_string(weight);
      if (!c.pass) c.counterexample = *cf.params.single_gamma;
    });
  }
  if (n <= kCrossCheckMaxVariables) {
    report.run("naive-crosscheck", [&](Check& c) {
      const NaiveSpectra naive = naive_transforms(f);
      c.pass = true;
      for (std::uint64_t u = 0; u < f.size(); ++u) {
        if (naive.walsh[u] != w[u] || naive.nega[u] != nv[u]) {
          c.pass = false;
          c.counterexample = point(u, n);
          break;
        }
      }
      c.details = "direct sums against butterflies at " + std::to_string(f.size()) + " points";
    });
  }
  report.run("modifier-set-size", [&](Check& c) {
    const std::int64_t want = expected_modifier_size(cf.modifier);
    const auto got = static_cast<std::int64_t>(cf.modifier_set.size());
    c.pass = got == want;
    c.details = std::to_string(got) + " members, expected " + std::to_string(want);
    if (!c.pass) c.counterexample = cf.modifier.gammas.front();
  });
  return report.finish();
}

VerificationReport verify_function(const BooleanFunction& f, const std::string& subject) {
  ReportBuilder report(subject);
  const int n = f.num_vars();
  const WalshSpectrum w = walsh_transform(f);
  const NegaSpectrum nv = nega_transform(f);
  const std::int64_t full_energy = std::int64_t{1} << (2 * n);
  report.run("bent", [&](Check& c) {
    const auto u = walsh_flatness_witness(w);
    c.pass = !u;
    c.details = "W_f(0) = " + std::to_string(w[0]);
    if (u) c.counterexample = point(*u, n);
  });
  report.run("negabent", [&](Check& c) {
    const auto u = nega_flatness_witness(nv);
    c.pass = !u;
    c.details = "N_f(0) = " + to_string(nv[0]);
    if (u) c.counterexample = point(*u, n);
  });
  report.run("parseval", [&](Check& c) {
    c.pass = w.energy() == full_energy && nv.energy() == full_energy;
    c.details = "walsh energy " + std::to_string(w.energy()) + ", nega energy " +
                std::to_string(nv.energy()) + ", expected " + std::to_string(full_energy);
    if (!c.pass) c.counterexample = point(0, n);
  });
  if (n <= kCrossCheckMaxVariables) {
    report.run("naive-crosscheck", [&](Check& c) {
      const NaiveSpectra naive = naive_transforms(f);
      c.pass = true;
      for (std::uint64_t u = 0; u < f.size(); ++u) {
        if (naive.walsh[u] != w[u] || naive.nega[u] != nv[u]) {
          c.pass = false;
          c.counterexample = point(u, n);
          break;
        }
      }
      c.details = "direct sums against butterflies at " + std::to_string(f.size()) + " points";
    });
  }
  return report.finish();
}

std::vector<GammaSpec> single_gamma_specs(ModifierFamily family, int k) {
  if (family == ModifierFamily::kT) {
    throw SpecError("single-gamma enumeration covers S1, S2, S3 and S4 only");
  }
  GammaSpec probe;
  probe.family = family;
  probe.k = k;
  const int len = probe.gamma_length();
  check_capacity(len);
  const bool h = family == ModifierFamily::kS3 || family == ModifierFamily::kS4;
  std::vector<GammaSpec> out;
  for (std::uint64_t g = 0; g < (std::uint64_t{1} << len); ++g) {
    for (ESet e : {ESet::kZero, ESet::kOne, ESet::kBoth}) {
      GammaSpec spec = probe;
      spec.gammas = {BitVector(len, g)};
      if (h) spec.e_sets = {e};
      out.push_back(std::move(spec));
      if (!h) break;
    }
  }
  return out;
}

}  // namespace bentneg::oracle
