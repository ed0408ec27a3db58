// Copyright 2026 The cubefill Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The `cubefill` command line.
//
//   cubefill gen-minimizer <n> <k> [--out FILE] [--json]
//   cubefill fill <FILE> [--strategy linear|recursive|exact] [--budget N]
//                        [--out FILE] [--json]
//   cubefill verify <FILE> [--json]
//   cubefill sharpness <k> <n_max> [--csv | --json]
//   cubefill random <n> <k> [--density D] [--seed S] [--out FILE] [--json]
//
// Every command except a bare chain dump prints a report with the fields
// command / inputs / results / status, as JSON with --json and as aligned
// text otherwise.

#ifndef CUBEFILL_TOOLS_CLI_H_
#define CUBEFILL_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace cubefill::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 2,
  kBoundViolation = 3,
  kIoError = 4,
};

enum class Status { kOk, kBoundViolation, kInvalidInput };
const char* StatusName(Status s);

struct Report {
  std::string command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  Status status = Status::kOk;

  nlohmann::ordered_json ToJson() const;
  static Report FromJson(const nlohmann::ordered_json& j);
};

void PrintReport(std::ostream& out, const Report& report, bool json);

// Entry point shared by main() and the tests. args[0] is the program name.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace cubefill::cli

#endif  // CUBEFILL_TOOLS_CLI_H_
