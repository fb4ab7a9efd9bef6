// Copyright 2026 The nsalg Authors
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

// The analysis commands of the nsalg tool. Each one maps onto a library
// pipeline and returns an Outcome; run_cli adds argument parsing, the
// report envelope and exit codes.

#ifndef NSALG_TOOLS_COMMANDS_H_
#define NSALG_TOOLS_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "report.h"

namespace nsalg::cli {

// Union of the command-specific flags. Unused fields are ignored.
struct Options {
  std::string in;
  std::string code;
  std::string errors;
  std::string group;
  std::string generators;    // stabilizer: "ZZI,IZZ"
  std::string pauli_errors;  // stabilizer: "III,XII,..."
  std::string sector;        // label or tag; empty = largest multiplicity
  std::string clusters;      // "3,3"
  std::string method = "structured";
  std::string role = "multiplicity";
  std::string code_out;
  std::string logical = "random";  // "random" or a basis index
  int n = 0;
  Index fixed = 0;
  Index gauge = 0;
  double t = 1.0;
  double rate = 1.0;
  int samples = 2;
  int steps = 100;
  int retries = 3;
  bool verify = true;
  bool basis = false;
  bool random_pair = false;
  bool dense = false;
};

const std::vector<std::string>& command_names();

// Throws nsalg::Error (or a subclass) on input or numerical failure.
Outcome run_command(const std::string& command, const Options& options,
                    std::uint64_t seed, double tol);

// Full command line without the program name. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nsalg::cli

#endif  // NSALG_TOOLS_COMMANDS_H_
