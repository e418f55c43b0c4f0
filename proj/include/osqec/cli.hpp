// Copyright 2026 The osqec Authors
//
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace osqec::cli {

// Parsed command-line scenario.  Commands print a JSON report (all numbers
// with 17 significant digits) to stdout, and to --out when given; reports are
// byte-identical across runs for identical inputs and seed.
//
// Exit codes: 0 on success / positive verdict, 2 on a negative verdict
// (conditions violated, span violation), 1 on input or usage errors.
struct ScenarioSpec {
  std::string channel_path;
  std::string code_path;
  std::string split_path;      // UserProvided split file
  std::string reference_path;  // optional correctable reference channel
  std::string out_path;
  bool auto_split = false;
  double tol = 1e-9;
  long samples = 200;
  long refine = 200;
  std::uint64_t seed = 12345;
  std::vector<double> t_sweep;
};

int cmd_check_perfect(const ScenarioSpec& spec, std::ostream& out);
int cmd_bound(const ScenarioSpec& spec, std::ostream& out);
int cmd_worst_case(const ScenarioSpec& spec, std::ostream& out);
int cmd_verify_expansion(const ScenarioSpec& spec, std::ostream& out);
int cmd_report(const ScenarioSpec& spec, std::ostream& out);

// Full argv entry point used by the binary.
int run(int argc, const char* const* argv);

}  // namespace osqec::cli
