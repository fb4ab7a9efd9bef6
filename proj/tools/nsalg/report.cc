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

#include "report.h"

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

namespace nsalg::cli {

Format format_from_string(const std::string& text) {
  if (text == "json") return Format::kJson;
  if (text == "text") return Format::kText;
  throw InvalidInput("unknown format '" + text + "' (expected json or text)");
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json make_report(const RunInfo& info, const Outcome& outcome) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["tool"] = "nsalg";
  j["version"] = NSALG_VERSION;
  j["command"] = info.command;
  // As a string: u64 seeds do not survive every JSON reader as numbers.
  j["seed"] = std::to_string(info.seed);
  j["tol"] = info.tol;
  j["timestamp"] = info.with_timestamp ? utc_timestamp() : std::string();
  j["inputs"] = outcome.inputs;
  j["result"] = outcome.result;
  j["status"] = outcome.negative ? "negative" : "pass";
  return j;
}

std::string render(const Json& report, const Outcome& outcome, Format format) {
  if (format == Format::kJson) return report.dump(2) + "\n";
  std::ostringstream out;
  out << "nsalg " << report.at("version").get<std::string>() << "  "
      << report.at("command").get<std::string>() << "  seed=" << report.at("seed").get<std::string>()
      << "  tol=" << report.at("tol").get<double>() << "  status="
      << report.at("status").get<std::string>() << '\n';
  out << outcome.summary;
  if (!outcome.summary.empty() && outcome.summary.back() != '\n') out << '\n';
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot write '" + path + "'");
  f << content;
  if (!f) throw Error("write to '" + path + "' failed");
}

}  // namespace nsalg::cli
