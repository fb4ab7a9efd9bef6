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

// Operator files: the JSON inputs of the command-line tool. See
// docs/json_schema.md for the format.

#ifndef NSALG_TOOLS_OPERATOR_FILE_H_
#define NSALG_TOOLS_OPERATOR_FILE_H_

#include <filesystem>
#include <string>
#include <vector>

#include "nsalg/codes.h"
#include "nsalg/dynamics.h"
#include "nsalg/serialize.h"
#include "nsalg/symmetry.h"
#include "nsalg/types.h"

namespace nsalg::cli {

enum class OperatorKind { kGenerator, kHamiltonian, kLindblad, kKraus, kGroupElement, kError };

std::string_view to_string(OperatorKind kind);
OperatorKind operator_kind_from_string(std::string_view text);

struct NamedOperator {
  std::string name;
  OperatorKind kind = OperatorKind::kGenerator;
  Operator op;
  double rate = 0.0;  // lindblad only
};

struct OperatorFile {
  Index dim = 0;
  // Set when the file asks for its group elements to be closed under
  // multiplication ("generate": true).
  bool generate_group = false;
  std::vector<NamedOperator> operators;

  std::vector<Operator> of_kind(OperatorKind kind) const;
  std::vector<std::string> names_of_kind(OperatorKind kind) const;
  std::vector<Operator> all() const;
  bool has(OperatorKind kind) const;
};

// Validates shapes, dimensions, finiteness, hermiticity of hamiltonians and
// nonnegative rates. Errors name the offending operator.
OperatorFile parse_operator_json(const Json& j);
OperatorFile read_operator_file(const std::filesystem::path& path);

Json read_json_file(const std::filesystem::path& path);

// Lindblad model from the hamiltonian (summed; zero if absent) and the
// lindblad entries.
LindbladModel lindblad_model(const OperatorFile& file);
// All kraus entries form one map.
KrausMap kraus_map(const OperatorFile& file);

// Group from a file (group-element entries, or all entries if none are
// tagged) or a builtin name "pauli:N" / "symmetric:N" / "swap".
GroupRep load_group(const std::string& source);

// A code file holds either a CodeSubspace object or {"states": [...]}.
CodeSubspace read_code_file(const std::filesystem::path& path);

}  // namespace nsalg::cli

#endif  // NSALG_TOOLS_OPERATOR_FILE_H_
