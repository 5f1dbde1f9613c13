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


#ifndef BENTNEG_TOOLS_CLI_H_
#define BENTNEG_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "bentneg/constructions.h"
#include "bentneg/oracle.h"

namespace bentneg::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailure = 1,
  kExitUsage = 2,
  kExitCapacity = 3,
  kExitSpecMismatch = 4,
};

enum class ReportFormat { kJson, kText };

// Renders one report. JSON follows {subject, checks, elapsed_ms}; text is a
// table followed by "P/N passed", or the header alone when there are no
// checks. Counterexamples use the bit-string syntax.
std::string emit_report(const oracle::VerificationReport& report, ReportFormat format);

// Function file: {n, family, params, tt_hex, anf, dual_tt_hex,
// predicts_max_degree}. Keys appear in that order.
nlohmann::ordered_json function_file(const ConstructedFunction& cf);
nlohmann::ordered_json params_to_json(Family family, const ConstructionParams& params);
ConstructionParams params_from_json(Family family, const nlohmann::json& params);

// args excludes the program name. Diagnostics go to err as one line
// "error: <class>: <message>".
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bentneg::cli

#endif  // BENTNEG_TOOLS_CLI_H_
