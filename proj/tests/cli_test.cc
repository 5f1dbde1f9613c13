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
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "bentneg/packed_bits.h"
#include "bentneg/worked_examples.h"
#include "cli.h"

namespace bentneg::cli {
namespace {

using nlohmann::json;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = run_command(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string temp_path(const std::string& name) { return ::testing::TempDir() + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int count_lines(const std::string& text) {
  int lines = 0;
  for (char c : text) lines += c == '\n';
  return lines;
}

TEST(GenTest, ExampleOneFunctionFile) {
  const Result r = run({"gen", "--family", "g4k", "--k", "2", "--gamma", "0001"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json file = json::parse(r.out);
  EXPECT_EQ(file.at("n"), 8);
  EXPECT_EQ(file.at("family"), "G4K");
  EXPECT_EQ(file.at("params").at("gamma"), "0001");
  EXPECT_EQ(file.at("anf"), expected_example_anf(1).to_string());
  EXPECT_EQ(file.at("predicts_max_degree"), true);
  // Keys keep their documented order.
  std::vector<std::string> keys;
  for (auto it = file.begin(); it != file.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys.size(), 7u);
}

TEST(GenTest, OutputIsDeterministic) {
  const std::vector<std::string> args = {"gen", "--family", "h4k2", "--k", "2",
                                         "--gamma", "1000,0101", "--eset", "1,B"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(GenTest, RoundTripThroughVerifyForEveryFamily) {
  const std::vector<std::vector<std::string>> specs = {
      {"--family", "g4k", "--k", "1", "--gamma", "00"},
      {"--family", "g8k", "--k", "1", "--gamma", "0000,1000"},
      {"--family", "h4k2", "--k", "1", "--gamma", "01", "--eset", "B"},
      {"--family", "h8k2", "--k", "1", "--gamma", "0000", "--eset", "1"},
      {"--family", "f2rs", "--k", "1", "--p", "11,10"},
      {"--family", "f2rs_a", "--k", "1", "--a-set", "00"},
      {"--family", "f2rs_orbit", "--k", "1", "--single-gamma", "11"},
  };
  int i = 0;
  for (const auto& spec : specs) {
    const std::string path = temp_path("round_trip_" + std::to_string(i++) + ".json");
    std::vector<std::string> gen = {"gen", "--out", path};
    gen.insert(gen.end(), spec.begin(), spec.end());
    ASSERT_EQ(run(gen).code, kExitOk) << spec[1];
    const Result verify = run({"verify", "--in", path});
    EXPECT_EQ(verify.code, kExitOk) << spec[1] << "\n" << verify.out;
    EXPECT_NE(verify.out.find("passed"), std::string::npos);
  }
}

TEST(VerifyTest, CorruptedFileFails) {
  const std::string path = temp_path("corrupt.json");
  ASSERT_EQ(run({"gen", "--family", "g4k", "--k", "2", "--gamma", "0001", "--out", path}).code,
            kExitOk);
  json file = json::parse(slurp(path));
  std::string tt = file.at("tt_hex");
  tt[0] = tt[0] == '0' ? '1' : '0';
  file["tt_hex"] = tt;
  std::ofstream(path) << file.dump();
  const Result text = run({"verify", "--in", path});
  EXPECT_EQ(text.code, kExitVerificationFailure);
  EXPECT_NE(text.out.find("bent"), std::string::npos);
  EXPECT_NE(text.out.find("FAIL"), std::string::npos);
  const Result js = run({"verify", "--in", path, "--format", "json"});
  const json report = json::parse(js.out);
  bool bent_failed = false;
  for (const auto& c : report.at("checks")) {
    if (c.at("pass") == false) {
      EXPECT_TRUE(c.contains("counterexample")) << c.at("name");
    }
    if (c.at("name") == "bent") bent_failed = c.at("pass") == false;
  }
  EXPECT_TRUE(bent_failed);
}

TEST(VerifyTest, StoredAnfAndDualAreChecked) {
  const std::string path = temp_path("stale_anf.json");
  ASSERT_EQ(run({"gen", "--family", "g4k", "--k", "1", "--gamma", "00", "--out", path}).code,
            kExitOk);
  json file = json::parse(slurp(path));
  file["anf"] = "x0";
  std::ofstream(path) << file.dump();
  const Result r = run({"verify", "--in", path});
  EXPECT_EQ(r.code, kExitVerificationFailure);
  EXPECT_NE(r.out.find("file-anf"), std::string::npos);
}

TEST(VerifyTest, PlainTablesAndJsonDeterminism) {
  // x0 x1 is bent but no two-variable function is negabent.
  const Result table = run({"verify", "--tt", "8", "--n", "2"});
  EXPECT_EQ(table.code, kExitVerificationFailure) << table.out;
  EXPECT_NE(table.out.find("negabent          FAIL"), std::string::npos) << table.out;
  const std::vector<std::string> args = {"verify", "--family", "g4k", "--k", "2", "--gamma",
                                         "0001", "--format", "json", "--no-timing"};
  const Result a = run(args);
  const Result b = run(args);
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  const nlohmann::ordered_json report = nlohmann::ordered_json::parse(a.out);
  EXPECT_EQ(report.at("elapsed_ms"), 0.0);
  EXPECT_EQ(report.begin().key(), "subject");
}

TEST(EmitReportTest, EmptyReportIsHeaderOnly) {
  oracle::VerificationReport report;
  report.subject = "empty";
  const std::string text = emit_report(report, ReportFormat::kText);
  EXPECT_EQ(count_lines(text), 2);
  EXPECT_EQ(text.find("passed"), std::string::npos);
  const json j = json::parse(emit_report(report, ReportFormat::kJson));
  EXPECT_TRUE(j.at("checks").empty());
}

TEST(EmitReportTest, SummaryAndCounterexample) {
  oracle::VerificationReport report;
  report.subject = "synthetic";
  oracle::Check ok;
  ok.name = "a";
  ok.pass = true;
  report.checks.push_back(ok);
  EXPECT_NE(emit_report(report, ReportFormat::kText).find("1/1 passed"), std::string::npos);
  oracle::Check bad;
  bad.name = "b";
  bad.counterexample = BitVector::parse("0110");
  bad.details = "broken";
  report.checks.push_back(bad);
  const std::string text = emit_report(report, ReportFormat::kText);
  EXPECT_NE(text.find("1/2 passed"), std::string::npos);
  EXPECT_NE(text.find("0110"), std::string::npos);
  const json j = json::parse(emit_report(report, ReportFormat::kJson));
  EXPECT_EQ(j.at("checks").at(1).at("counterexample"), "0110");
  EXPECT_FALSE(j.at("checks").at(0).contains("counterexample"));
}

TEST(ReproTest, ThreePassLines) {
  const Result r = run({"repro-examples"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(count_lines(r.out), 3);
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);) EXPECT_EQ(line.rfind("PASS", 0), 0u) << line;
}

TEST(UtilityCommandsTest, AnfConversions) {
  EXPECT_EQ(run({"anf", "--poly", "x0*x1+x2", "--n", "3"}).out, "87\n");
  EXPECT_EQ(run({"anf", "--tt", "87", "--n", "3"}).out, "x0*x1+x2\n");
  const json j = json::parse(run({"anf", "--tt", "8", "--n", "2", "--format", "json"}).out);
  EXPECT_EQ(j.at("anf"), "x0*x1");
}

TEST(UtilityCommandsTest, SpectrumAndDual) {
  EXPECT_EQ(run({"spectrum", "--tt", "8", "--n", "2"}).out, "0\t2\n1\t2\n2\t2\n3\t-2\n");
  const Result nega = run({"spectrum", "--tt", "0", "--n", "1", "--transform", "nega"});
  EXPECT_EQ(nega.out, "0\t1\t1\n1\t1\t-1\n");
  EXPECT_EQ(run({"dual", "--tt", "8", "--n", "2"}).out, "8\n");
  const Result not_bent = run({"dual", "--tt", "0", "--n", "2"});
  EXPECT_EQ(not_bent.code, kExitVerificationFailure);
  EXPECT_EQ(not_bent.err.rfind("error: verification:", 0), 0u);
}

TEST(UtilityCommandsTest, Orbits) {
  const Result r = run({"orbits", "--n", "4"});
  EXPECT_EQ(r.out, "0000\t1\n1000\t4\n1100\t4\n1010\t2\n1110\t4\n1111\t1\n");
}

TEST(OracleCommandsTest, ChecksPass) {
  EXPECT_EQ(run({"table1"}).code, kExitOk);
  EXPECT_EQ(run({"su-check"}).code, kExitOk);
  const Result one = run({"su-check", "--case", "ii"});
  EXPECT_EQ(one.code, kExitOk);
  EXPECT_NE(one.out.find("{1000,0100,1011,0111}"), std::string::npos);
  EXPECT_EQ(run({"lemma-check", "--family", "s4"}).code, kExitOk);
  EXPECT_EQ(run({"lemma-check", "--family", "h4k2", "--gamma", "00,01", "--eset", "B,B"}).code,
            kExitOk);
  const json all = json::parse(run({"su-check", "--format", "json"}).out);
  EXPECT_EQ(all.size(), 4u);
}

TEST(ErrorTest, ExitCodesAndOneLineDiagnostics) {
  struct Case {
    std::vector<std::string> args;
    int code;
    std::string prefix;
  };
  const std::vector<Case> cases = {
      {{}, kExitUsage, "error: usage:"},
      {{"gen", "--family", "g4k", "--bogus"}, kExitUsage, "error: usage:"},
      {{"gen", "--family", "g4k", "--gamma", "0x"}, kExitUsage, "error: parse:"},
      {{"gen", "--family", "nope"}, kExitUsage, "error: parse:"},
      {{"verify", "--in", temp_path("missing.json")}, kExitUsage, "error: usage:"},
      {{"gen", "--family", "g4k", "--k", "7", "--gamma", "00000000000000"}, kExitCapacity,
       "error: capacity:"},
      {{"--max-n", "6", "gen", "--family", "g4k", "--k", "2", "--gamma", "0001"}, kExitCapacity,
       "error: capacity:"},
      {{"gen", "--family", "g4k", "--k", "2", "--gamma", "01"}, kExitSpecMismatch, "error: spec:"},
      {{"su-check", "--case", "v"}, kExitUsage, "error: parse:"},
  };
  for (const Case& c : cases) {
    const Result r = run(c.args);
    EXPECT_EQ(r.code, c.code) << r.err;
    EXPECT_EQ(r.err.rfind(c.prefix, 0), 0u) << r.err;
    EXPECT_EQ(count_lines(r.err), 1) << r.err;
    EXPECT_TRUE(r.out.empty());
  }
  EXPECT_EQ(max_variables(), kDefaultMaxVariables);
}

TEST(ErrorTest, MalformedFunctionFile) {
  const std::string path = temp_path("malformed.json");
  std::ofstream(path) << "{\"n\": 2";
  EXPECT_EQ(run({"verify", "--in", path}).code, kExitUsage);
  std::ofstream(path) << "{\"n\": 3, \"tt_hex\": \"8\"}";
  EXPECT_EQ(run({"verify", "--in", path}).code, kExitUsage);
  std::ofstream(path) << "{\"n\": 4, \"tt_hex\": \"8000\", \"family\": \"G4K\", \"params\": "
                         "{\"k\": 2, \"gamma\": \"0001\"}}";
  EXPECT_EQ(run({"verify", "--in", path}).code, kExitSpecMismatch);
}

TEST(HelpTest, PrintsUsage) {
  const Result r = run({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("repro-examples"), std::string::npos);
}

}  // namespace
}  // namespace bentneg::cli
