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


#include "cli.h"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "bentneg/errors.h"
#include "bentneg/packed_bits.h"
#include "bentneg/spectra.h"
#include "bentneg/worked_examples.h"

namespace bentneg::cli {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Thrown for unreadable or unwritable paths; reported as a usage error.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family;
  int k = 1;
  std::string gamma;
  std::string eset;
  std::string p;
  std::string a_set;
  std::string single_gamma;
  std::string in;
  std::string out;
  std::string format = "text";
  int max_n = 0;
  bool no_timing = false;
  // Table input outside of function files.
  std::string tt;
  std::string poly;
  int n = 0;
  std::string transform = "walsh";
  std::string su_case;
};

ReportFormat report_format(const Options& o) {
  return o.format == "json" ? ReportFormat::kJson : ReportFormat::kText;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw IoError("cannot write " + o.out);
  file << text;
}

ConstructionParams params_from_options(Family family, const Options& o) {
  ConstructionParams params;
  params.k = o.k;
  if (!o.gamma.empty()) {
    if (family == Family::kF2RSOrbit) {
      params.single_gamma = BitVector::parse(o.gamma);
    } else {
      params.gammas = parse_gamma_list(o.gamma);
    }
  }
  if (!o.eset.empty()) params.e_sets = parse_e_list(o.eset);
  if (!o.p.empty()) params.p = parse_gamma_list(o.p);
  if (!o.a_set.empty()) params.a_set = parse_gamma_list(o.a_set);
  if (!o.single_gamma.empty()) params.single_gamma = BitVector::parse(o.single_gamma);
  return params;
}

struct LoadedFunction {
  BooleanFunction function{0};
  std::optional<Family> family;
  std::optional<ConstructionParams> params;
  json file;
  std::string subject;
};

LoadedFunction load_function_file(const std::string& path) {
  LoadedFunction loaded;
  try {
    loaded.file = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  const json& file = loaded.file;
  if (!file.is_object() || !file.contains("n") || !file.contains("tt_hex")) {
    throw ParseError(path + ": function file needs n and tt_hex");
  }
  const int n = file.at("n").get<int>();
  check_capacity(n);
  loaded.function = BooleanFunction::from_hex(n, file.at("tt_hex").get<std::string>());
  loaded.subject = path;
  if (file.contains("family")) {
    const Family family = parse_family(file.at("family").get<std::string>());
    loaded.family = family;
    loaded.params = params_from_json(family, file.value("params", json::object()));
    loaded.subject = describe(family, *loaded.params);
  }
  return loaded;
}

// Resolution order: --in, then --family, then --tt or --poly with --n.
LoadedFunction load_function(const Options& o) {
  if (!o.in.empty()) return load_function_file(o.in);
  LoadedFunction loaded;
  if (!o.family.empty()) {
    const Family family = parse_family(o.family);
    const ConstructionParams params = params_from_options(family, o);
    loaded.function = construct(family, params).function;
    loaded.family = family;
    loaded.params = params;
    loaded.subject = describe(family, params);
    return loaded;
  }
  if (o.n <= 0) throw ParseError("a function needs --in, --family, or --tt/--poly with --n");
  check_capacity(o.n);
  if (!o.tt.empty()) {
    loaded.function = BooleanFunction::from_hex(o.n, o.tt);
    loaded.subject = "table n=" + std::to_string(o.n);
  } else if (!o.poly.empty()) {
    loaded.function = truth_table_from_anf(AnfPolynomial::parse(o.n, o.poly));
    loaded.subject = "polynomial n=" + std::to_string(o.n);
  } else {
    throw ParseError("--n needs --tt or --poly");
  }
  return loaded;
}

void strip_timing(oracle::VerificationReport& report) {
  report.elapsed_ms = 0;
  for (auto& c : report.checks) c.elapsed_ms = 0;
}

void sort_checks(oracle::VerificationReport& report) {
  std::stable_sort(report.checks.begin(), report.checks.end(),
                   [](const oracle::Check& a, const oracle::Check& b) { return a.name < b.name; });
}

int finish_report(oracle::VerificationReport report, const Options& o, std::ostream& out) {
  if (o.no_timing) strip_timing(report);
  write_output(o, out, emit_report(report, report_format(o)));
  return report.all_pass() ? kExitOk : kExitVerificationFailure;
}

int finish_reports(std::vector<oracle::VerificationReport> reports, const Options& o,
                   std::ostream& out) {
  bool all = true;
  std::string text;
  if (report_format(o) == ReportFormat::kJson) {
    ordered_json array = ordered_json::array();
    for (auto& r : reports) {
      if (o.no_timing) strip_timing(r);
      all = all && r.all_pass();
      array.push_back(ordered_json::parse(emit_report(r, ReportFormat::kJson)));
    }
    text = array.dump(2) + "\n";
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (o.no_timing) strip_timing(reports[i]);
      all = all && reports[i].all_pass();
      if (i > 0) text += "\n";
      text += emit_report(reports[i], ReportFormat::kText);
    }
  }
  write_output(o, out, text);
  return all ? kExitOk : kExitVerificationFailure;
}

// Checks the optional fields of a function file against its table.
void append_file_checks(const LoadedFunction& loaded, oracle::VerificationReport& report) {
  const BooleanFunction& f = loaded.function;
  const int n = f.num_vars();
  if (loaded.file.contains("anf")) {
    oracle::Check c;
    c.name = "file-anf";
    const AnfPolynomial stored = AnfPolynomial::parse(n, loaded.file.at("anf").get<std::string>());
    const AnfPolynomial diff = stored + anf_from_truth_table(f);
    c.pass = diff.num_terms() == 0;
    c.details = "stored ANF against the table";
    if (!c.pass) c.counterexample = BitVector(n, diff.monomials().front());
    report.checks.push_back(std::move(c));
  }
  if (loaded.file.contains("dual_tt_hex")) {
    oracle::Check c;
    c.name = "file-dual";
    const BooleanFunction stored =
        BooleanFunction::from_hex(n, loaded.file.at("dual_tt_hex").get<std::string>());
    const WalshSpectrum w = walsh_transform(f);
    if (auto u = walsh_flatness_witness(w)) {
      c.pass = false;
      c.details = "table is not bent";
      c.counterexample = BitVector(n, *u);
    } else {
      const BooleanFunction spectral = dual_from_spectrum(w);
      c.pass = stored == spectral;
      c.details = "stored dual against sign of W_f";
      for (std::uint64_t x = 0; x < f.size() && !c.pass; ++x) {
        if (stored(x) != spectral(x)) {
          c.counterexample = BitVector(n, x);
          break;
        }
      }
    }
    report.checks.push_back(std::move(c));
  }
  sort_checks(report);
}

int cmd_gen(const Options& o, std::ostream& out) {
  if (o.family.empty()) throw ParseError("gen needs --family");
  const Family family = parse_family(o.family);
  const ConstructedFunction cf = construct(family, params_from_options(family, o));
  write_output(o, out, function_file(cf).dump(2) + "\n");
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const LoadedFunction loaded = load_function(o);
  oracle::VerificationReport report;
  if (loaded.family) {
    ConstructedFunction cf = construct(*loaded.family, *loaded.params);
    if (cf.function.num_vars() != loaded.function.num_vars()) {
      throw DimensionError("table has " + std::to_string(loaded.function.num_vars()) +
                           " variables, the parameters give " +
                           std::to_string(cf.function.num_vars()));
    }
    cf.function = loaded.function;
    report = oracle::verify_construction(cf, loaded.subject);
  } else {
    report = oracle::verify_function(loaded.function, loaded.subject);
  }
  append_file_checks(loaded, report);
  return finish_report(std::move(report), o, out);
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const LoadedFunction loaded = load_function(o);
  if (o.transform == "walsh") {
    write_output(o, out, format_spectrum(walsh_transform(loaded.function)));
  } else {
    write_output(o, out, format_spectrum(nega_transform(loaded.function)));
  }
  return kExitOk;
}

int cmd_anf(const Options& o, std::ostream& out) {
  const LoadedFunction loaded = load_function(o);
  // A polynomial input converts to a table; anything else to a polynomial.
  const bool to_table = o.in.empty() && o.family.empty() && !o.poly.empty();
  const std::string text =
      to_table ? loaded.function.to_hex() : anf_from_truth_table(loaded.function).to_string();
  if (report_format(o) == ReportFormat::kJson) {
    ordered_json j;
    j["n"] = loaded.function.num_vars();
    j["tt_hex"] = loaded.function.to_hex();
    j["anf"] = anf_from_truth_table(loaded.function).to_string();
    write_output(o, out, j.dump(2) + "\n");
  } else {
    write_output(o, out, text + "\n");
  }
  return kExitOk;
}

int cmd_dual(const Options& o, std::ostream& out) {
  const LoadedFunction loaded = load_function(o);
  const BooleanFunction d = dual(loaded.function);
  if (report_format(o) == ReportFormat::kJson) {
    ordered_json j;
    j["n"] = d.num_vars();
    j["tt_hex"] = d.to_hex();
    j["anf"] = anf_from_truth_table(d).to_string();
    write_output(o, out, j.dump(2) + "\n");
  } else {
    write_output(o, out, d.to_hex() + "\n");
  }
  return kExitOk;
}

int cmd_orbits(const Options& o, std::ostream& out) {
  if (o.n <= 0) throw ParseError("orbits needs --n");
  check_capacity(o.n);
  const std::vector<BitVector> reps = orbit_representatives(o.n);
  if (report_format(o) == ReportFormat::kJson) {
    ordered_json array = ordered_json::array();
    for (const auto& r : reps) {
      ordered_json j;
      j["representative"] = r.to_string();
      j["size"] = orbit(r).size();
      array.push_back(std::move(j));
    }
    write_output(o, out, array.dump(2) + "\n");
  } else {
    std::string text;
    for (const auto& r : reps) text += r.to_string() + "\t" + std::to_string(orbit(r).size()) + "\n";
    write_output(o, out, text);
  }
  return kExitOk;
}

ModifierFamily parse_modifier_family(const std::string& name) {
  std::string upper = name;
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
  for (ModifierFamily m :
       {ModifierFamily::kS1, ModifierFamily::kS2, ModifierFamily::kS3, ModifierFamily::kS4}) {
    if (upper == to_string(m)) return m;
  }
  switch (parse_family(name)) {
    case Family::kG4K:
      return ModifierFamily::kS1;
    case Family::kG8K:
      return ModifierFamily::kS2;
    case Family::kH4K2:
      return ModifierFamily::kS3;
    case Family::kH8K2:
      return ModifierFamily::kS4;
    default:
      throw SpecError("lemma checks cover S1, S2, S3 and S4 only");
  }
}

std::string spec_label(const GammaSpec& spec) {
  std::string label = to_string(spec.family) + " k=" + std::to_string(spec.k) +
                      " gamma=" + format_gamma_list(spec.gammas);
  if (!spec.e_sets.empty()) label += " eset=" + format_e_list(spec.e_sets);
  return label;
}

int cmd_lemma_check(const Options& o, std::ostream& out) {
  std::vector<ModifierFamily> families;
  if (o.family.empty()) {
    families = {ModifierFamily::kS1, ModifierFamily::kS2, ModifierFamily::kS3,
                ModifierFamily::kS4};
  } else {
    families = {parse_modifier_family(o.family)};
  }
  if (!o.gamma.empty()) {
    if (families.size() != 1) throw ParseError("--gamma needs --family");
    GammaSpec spec;
    spec.family = families.front();
    spec.k = o.k;
    spec.gammas = parse_gamma_list(o.gamma);
    if (!o.eset.empty()) spec.e_sets = parse_e_list(o.eset);
    return finish_report(oracle::verify_fragmentary_lemma(spec.family, spec), o, out);
  }
  // One summary check per single-gamma spec.
  oracle::VerificationReport summary;
  summary.subject = "lemma sweep k=" + std::to_string(o.k);
  for (ModifierFamily family : families) {
    for (const GammaSpec& spec : oracle::single_gamma_specs(family, o.k)) {
      const oracle::VerificationReport r = oracle::verify_fragmentary_lemma(family, spec);
      oracle::Check c;
      c.name = spec_label(spec);
      c.pass = r.all_pass();
      c.elapsed_ms = r.elapsed_ms;
      c.details = std::to_string(r.passed()) + "/" + std::to_string(r.checks.size()) + " checks";
      for (const auto& sub : r.checks) {
        if (sub.pass) continue;
        c.details += ", failed " + sub.name;
        if (!c.counterexample) c.counterexample = sub.counterexample;
      }
      summary.elapsed_ms += r.elapsed_ms;
      summary.checks.push_back(std::move(c));
    }
  }
  sort_checks(summary);
  return finish_report(std::move(summary), o, out);
}

std::optional<oracle::SuCase> parse_su_case(const std::string& text) {
  if (text.empty()) return std::nullopt;
  for (oracle::SuCase c :
       {oracle::SuCase::kI, oracle::SuCase::kII, oracle::SuCase::kIII, oracle::SuCase::kIV}) {
    if (text == oracle::to_string(c)) return c;
  }
  throw ParseError("unknown case '" + text + "', expected i, ii, iii or iv");
}

int cmd_su_check(const Options& o, std::ostream& out) {
  if (auto c = parse_su_case(o.su_case)) {
    return finish_report(oracle::check_su_conditions(*c), o, out);
  }
  std::vector<oracle::VerificationReport> reports;
  for (oracle::SuCase c :
       {oracle::SuCase::kI, oracle::SuCase::kII, oracle::SuCase::kIII, oracle::SuCase::kIV}) {
    reports.push_back(oracle::check_su_conditions(c));
  }
  return finish_reports(std::move(reports), o, out);
}

int cmd_repro_examples(const Options& o, std::ostream& out) {
  const std::vector<ExampleOutcome> outcomes = reproduce_examples();
  bool all = true;
  std::string text;
  if (report_format(o) == ReportFormat::kJson) {
    ordered_json array = ordered_json::array();
    for (const auto& e : outcomes) {
      ordered_json j;
      j["index"] = e.index;
      j["label"] = e.label;
      j["pass"] = e.pass;
      j["details"] = e.details;
      array.push_back(std::move(j));
      all = all && e.pass;
    }
    text = array.dump(2) + "\n";
  } else {
    for (const auto& e : outcomes) {
      text += std::string(e.pass ? "PASS" : "FAIL") + " " + e.label + ": " + e.details + "\n";
      all = all && e.pass;
    }
  }
  write_output(o, out, text);
  return all ? kExitOk : kExitVerificationFailure;
}

void add_construction_flags(CLI::App* sub, Options& o) {
  sub->add_option("--family", o.family, "G4K, G8K, H4K2, H8K2, F2RS, F2RS_A or F2RS_ORBIT");
  sub->add_option("--k", o.k, "family parameter k")->check(CLI::PositiveNumber);
  sub->add_option("--gamma", o.gamma, "comma-separated gamma bit strings");
  sub->add_option("--eset", o.eset, "comma-separated E sets: 0, 1 or B");
  sub->add_option("--p", o.p, "F2RS orbit labels");
  sub->add_option("--a-set", o.a_set, "F2RS_A orbit labels");
  sub->add_option("--single-gamma", o.single_gamma, "F2RS_ORBIT gamma");
}

void add_table_flags(CLI::App* sub, Options& o) {
  sub->add_option("--in", o.in, "function file");
  sub->add_option("--tt", o.tt, "truth table in hex");
  sub->add_option("--poly", o.poly, "ANF such as x0*x1+x2");
  sub->add_option("--n", o.n, "variable count for --tt and --poly");
}

std::string error_line(const std::string& cls, const std::string& message) {
  std::string line = message;
  std::replace(line.begin(), line.end(), '\n', ' ');
  return "error: " + cls + ": " + line + "\n";
}

}  // namespace

ordered_json params_to_json(Family family, const ConstructionParams& params) {
  ordered_json j;
  j["k"] = params.k;
  switch (family) {
    case Family::kG4K:
    case Family::kG8K:
      j["gamma"] = format_gamma_list(params.gammas);
      break;
    case Family::kH4K2:
    case Family::kH8K2:
      j["gamma"] = format_gamma_list(params.gammas);
      j["eset"] = format_e_list(params.e_sets);
      break;
    case Family::kF2RS:
      j["p"] = format_gamma_list(params.p);
      break;
    case Family::kF2RSA:
      j["a_set"] = format_gamma_list(params.a_set);
      break;
    case Family::kF2RSOrbit:
      if (params.single_gamma) j["single_gamma"] = params.single_gamma->to_string();
      break;
  }
  return j;
}

ConstructionParams params_from_json(Family family, const json& params) {
  if (!params.is_object()) throw ParseError("params must be an object");
  ConstructionParams out;
  out.k = params.value("k", 1);
  const auto text = [&](const char* key) { return params.value(key, std::string()); };
  if (!text("gamma").empty()) {
    if (family == Family::kF2RSOrbit) {
      out.single_gamma = BitVector::parse(text("gamma"));
    } else {
      out.gammas = parse_gamma_list(text("gamma"));
    }
  }
  if (!text("eset").empty()) out.e_sets = parse_e_list(text("eset"));
  if (!text("p").empty()) out.p = parse_gamma_list(text("p"));
  if (!text("a_set").empty()) out.a_set = parse_gamma_list(text("a_set"));
  if (!text("single_gamma").empty()) out.single_gamma = BitVector::parse(text("single_gamma"));
  return out;
}

ordered_json function_file(const ConstructedFunction& cf) {
  ordered_json j;
  j["n"] = cf.function.num_vars();
  j["family"] = to_string(cf.family);
  j["params"] = params_to_json(cf.family, cf.params);
  j["tt_hex"] = cf.function.to_hex();
  j["anf"] = anf_from_truth_table(cf.function).to_string();
  j["dual_tt_hex"] = cf.closed_dual.to_hex();
  j["predicts_max_degree"] = cf.predicts_max_degree;
  return j;
}

std::string emit_report(const oracle::VerificationReport& report, ReportFormat format) {
  if (format == ReportFormat::kJson) {
    ordered_json j;
    j["subject"] = report.subject;
    j["checks"] = ordered_json::array();
    for (const auto& c : report.checks) {
      ordered_json check;
      check["name"] = c.name;
      check["pass"] = c.pass;
      if (c.counterexample) check["counterexample"] = c.counterexample->to_string();
      check["details"] = c.details;
      j["checks"].push_back(std::move(check));
    }
    j["elapsed_ms"] = report.elapsed_ms;
    return j.dump(2) + "\n";
  }
  std::size_t name_w = 5;
  std::size_t cx_w = 14;
  for (const auto& c : report.checks) {
    name_w = std::max(name_w, c.name.size());
    if (c.counterexample) cx_w = std::max(cx_w, c.counterexample->to_string().size());
  }
  std::ostringstream os;
  os << "subject: " << report.subject << "\n";
  os << std::left << std::setw(static_cast<int>(name_w)) << "check" << "  " << std::setw(6)
     << "result" << "  " << std::setw(static_cast<int>(cx_w)) << "counterexample" << "  details\n";
  if (report.checks.empty()) return os.str();
  for (const auto& c : report.checks) {
    os << std::setw(static_cast<int>(name_w)) << c.name << "  " << std::setw(6)
       << (c.pass ? "PASS" : "FAIL") << "  " << std::setw(static_cast<int>(cx_w))
       << (c.counterexample ? c.counterexample->to_string() : "-") << "  " << c.details << "\n";
  }
  os << report.passed() << "/" << report.checks.size() << " passed\n";
  return os.str();
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Constructs and verifies bent-negabent Boolean functions.", "bentneg"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "report format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", o.out, "output path (default stdout)");
  app.add_option("--max-n", o.max_n, "raise or lower the variable-count limit");
  app.add_flag("--no-timing", o.no_timing, "write 0 for elapsed_ms");

  CLI::App* gen = app.add_subcommand("gen", "construct a function and write a function file");
  add_construction_flags(gen, o);
  CLI::App* verify = app.add_subcommand("verify", "verify a function or function file");
  add_construction_flags(verify, o);
  add_table_flags(verify, o);
  CLI::App* spectrum = app.add_subcommand("spectrum", "dump the Walsh or nega spectrum");
  add_construction_flags(spectrum, o);
  add_table_flags(spectrum, o);
  spectrum->add_option("--transform", o.transform, "walsh or nega")
      ->check(CLI::IsMember({"walsh", "nega"}));
  CLI::App* anf = app.add_subcommand("anf", "convert between truth tables and ANF");
  add_construction_flags(anf, o);
  add_table_flags(anf, o);
  CLI::App* dual_cmd = app.add_subcommand("dual", "dual of a bent function");
  add_construction_flags(dual_cmd, o);
  add_table_flags(dual_cmd, o);
  CLI::App* orbits = app.add_subcommand("orbits", "cyclic orbit representatives of F_2^n");
  orbits->add_option("--n", o.n, "dimension")->required();
  CLI::App* lemma = app.add_subcommand("lemma-check", "fragmentary transform case splits");
  lemma->add_option("--family", o.family, "S1..S4 or G4K, G8K, H4K2, H8K2");
  lemma->add_option("--k", o.k, "parameter k")->check(CLI::PositiveNumber);
  lemma->add_option("--gamma", o.gamma, "gamma list; omit to sweep single-gamma specs");
  lemma->add_option("--eset", o.eset, "E sets for S3 and S4");
  CLI::App* table1 = app.add_subcommand("table1", "relations between bent and negabent functions");
  table1->add_option("--k", o.k, "parameter k")->check(CLI::PositiveNumber);
  CLI::App* su = app.add_subcommand("su-check", "subspace conditions C-1 and C-2");
  su->add_option("--case", o.su_case, "i, ii, iii or iv; omit for all four");
  CLI::App* repro = app.add_subcommand("repro-examples", "rebuild the three worked examples");

  const int saved_max = max_variables();
  int code = kExitOk;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (o.max_n != 0) set_max_variables(o.max_n);
    if (gen->parsed()) {
      code = cmd_gen(o, out);
    } else if (verify->parsed()) {
      code = cmd_verify(o, out);
    } else if (spectrum->parsed()) {
      code = cmd_spectrum(o, out);
    } else if (anf->parsed()) {
      code = cmd_anf(o, out);
    } else if (dual_cmd->parsed()) {
      code = cmd_dual(o, out);
    } else if (orbits->parsed()) {
      code = cmd_orbits(o, out);
    } else if (lemma->parsed()) {
      code = cmd_lemma_check(o, out);
    } else if (table1->parsed()) {
      code = finish_report(oracle::check_table1(o.k), o, out);
    } else if (su->parsed()) {
      code = cmd_su_check(o, out);
    } else if (repro->parsed()) {
      code = cmd_repro_examples(o, out);
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    code = kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    code = kExitOk;
  } catch (const CLI::ParseError& e) {
    err << error_line("usage", e.what());
    code = kExitUsage;
  } catch (const IoError& e) {
    err << error_line("usage", e.what());
    code = kExitUsage;
  } catch (const ParseError& e) {
    err << error_line("parse", e.what());
    code = kExitUsage;
  } catch (const json::exception& e) {
    err << error_line("parse", e.what());
    code = kExitUsage;
  } catch (const CapacityError& e) {
    err << error_line("capacity", e.what());
    code = kExitCapacity;
  } catch (const NotBentError& e) {
    err << error_line("verification", e.what());
    code = kExitVerificationFailure;
  } catch (const SpecError& e) {
    err << error_line("spec", e.what());
    code = kExitSpecMismatch;
  } catch (const DimensionError& e) {
    err << error_line("spec", e.what());
    code = kExitSpecMismatch;
  }
  set_max_variables(saved_max);
  return code;
}

}  // namespace bentneg::cli
