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

// Report envelope shared by all commands.

#ifndef NSALG_TOOLS_REPORT_H_
#define NSALG_TOOLS_REPORT_H_

#include <cstdint>
#include <string>

#include "nsalg/serialize.h"

namespace nsalg::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNegative = 2;

enum class Format { kJson, kText };

Format format_from_string(const std::string& text);

// What a command hands back before it is wrapped.
struct Outcome {
  Json inputs = Json::object();
  Json result = Json::object();
  std::string summary;  // aligned text tables
  bool negative = false;
};

struct RunInfo {
  std::string command;
  std::uint64_t seed = 0;
  double tol = 0.0;
  // Excluded from the determinism contract; tests blank it.
  bool with_timestamp = true;
};

// {schema_version, tool, version, command, seed, tol, timestamp, inputs,
//  result, status}.
Json make_report(const RunInfo& info, const Outcome& outcome);

std::string render(const Json& report, const Outcome& outcome, Format format);

// Throws Error if the path cannot be written.
void write_file(const std::string& path, const std::string& content);

std::string utc_timestamp();

}  // namespace nsalg::cli

#endif  // NSALG_TOOLS_REPORT_H_
