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

#include "operator_file.h"

#include <cmath>
#include <fstream>

#include "nsalg/collective.h"
#include "nsalg/linalg.h"
#include "nsalg/pauli.h"

namespace nsalg::cli {
namespace {

[[noreturn]] void fail(const std::string& where, const std::string& why) {
  throw InvalidInput(where + ": " + why);
}

std::string where_of(std::size_t index, const std::string& name) {
  return "operator '" + name + "' (entry " + std::to_string(index) + ")";
}

Eigen::MatrixXd real_matrix(const Json& j, const std::string& where, const char* field) {
  if (!j.is_array() || j.empty()) fail(where, std::string("'") + field + "' must be a non-empty 2-D array");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array()) fail(where, std::string("row ") + std::to_string(i) + " of '" + field + "' is not an array");
    if (i == 0) cols = j[i].size();
    if (j[i].size() != cols) {
      fail(where, std::string("'") + field + "' is ragged: row " + std::to_string(i) + " has " +
                      std::to_string(j[i].size()) + " entries, row 0 has " + std::to_string(cols));
    }
  }
  Eigen::MatrixXd m(static_cast<Index>(rows), static_cast<Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < cols; ++k) {
      if (!j[i][k].is_number()) {
        fail(where, std::string("'") + field + "'[" + std::to_string(i) + "][" + std::to_string(k) +
                        "] is not a number");
      }
      m(static_cast<Index>(i), static_cast<Index>(k)) = j[i][k].get<double>();
    }
  }
  return m;
}

// One JSON entry may expand to several operators (collective shorthand).
std::vector<NamedOperator> expand_entry(const Json& e, std::size_t index) {
  if (!e.is_object()) fail("entry " + std::to_string(index), "must be an object");
  const std::string name = e.value("name", "op" + std::to_string(index));
  const std::string where = where_of(index, name);
  NamedOperator base;
  base.name = name;
  base.kind = operator_kind_from_string(e.value("kind", std::string("generator")));
  if (base.kind == OperatorKind::kLindblad) {
    if (!e.contains("rate") || !e.at("rate").is_number()) fail(where, "lindblad entry needs a numeric 'rate'");
    base.rate = e.at("rate").get<double>();
    if (!(base.rate >= 0.0) || !std::isfinite(base.rate)) fail(where, "rate must be finite and >= 0");
  }
  double scale = 1.0;
  if (e.contains("scale")) {
    if (!e.at("scale").is_number()) fail(where, "'scale' must be a number");
    scale = e.at("scale").get<double>();
  }

  const int forms = static_cast<int>(e.contains("re")) + static_cast<int>(e.contains("pauli")) +
                    static_cast<int>(e.contains("permutation")) +
                    static_cast<int>(e.contains("collective"));
  if (forms != 1) fail(where, "exactly one of 're', 'pauli', 'permutation', 'collective' is required");

  std::vector<NamedOperator> out;
  if (e.contains("re")) {
    const Eigen::MatrixXd re = real_matrix(e.at("re"), where, "re");
    Eigen::MatrixXd im = Eigen::MatrixXd::Zero(re.rows(), re.cols());
    if (e.contains("im")) {
      im = real_matrix(e.at("im"), where, "im");
      if (im.rows() != re.rows() || im.cols() != re.cols()) fail(where, "'im' shape differs from 're'");
    }
    if (re.rows() != re.cols()) {
      fail(where, "matrix is " + std::to_string(re.rows()) + "x" + std::to_string(re.cols()) +
                      ", expected square");
    }
    base.op = Operator(re.rows(), re.cols());
    base.op.real() = re;
    base.op.imag() = im;
    out.push_back(base);
  } else if (e.contains("pauli")) {
    if (!e.at("pauli").is_string()) fail(where, "'pauli' must be a string");
    try {
      base.op = PauliString::parse(e.at("pauli").get<std::string>()).to_operator();
    } catch (const Error& err) {
      fail(where, err.what());
    }
    out.push_back(base);
  } else if (e.contains("permutation")) {
    if (!e.contains("qubits") || !e.at("qubits").is_number_integer()) {
      fail(where, "permutation entry needs an integer 'qubits'");
    }
    const int n = e.at("qubits").get<int>();
    try {
      base.op = perm_rep(n, Permutation::parse(e.at("permutation").get<std::string>(), n));
    } catch (const Error& err) {
      fail(where, err.what());
    }
    out.push_back(base);
  } else {
    if (!e.at("collective").is_number_integer()) fail(where, "'collective' must be the qubit count");
    const int n = e.at("collective").get<int>();
    CollectiveSystem sys;
    try {
      sys = collective_ops(n);
    } catch (const Error& err) {
      fail(where, err.what());
    }
    const std::string axis = e.value("axis", std::string("xyz"));
    for (char a : axis) {
      NamedOperator op = base;
      op.name = name + "_" + a;
      if (a == 'x') op.op = sys.sx;
      else if (a == 'y') op.op = sys.sy;
      else if (a == 'z') op.op = sys.sz;
      else fail(where, "axis letters must be x, y or z");
      out.push_back(std::move(op));
    }
  }
  for (auto& op : out) {
    op.op *= scale;
    if (!op.op.allFinite()) fail(where, "matrix has non-finite entries");
  }
  return out;
}

GroupRep builtin_group(const std::string& source) {
  const auto colon = source.find(':');
  const std::string kind = source.substr(0, colon);
  int n = 1;
  if (colon != std::string::npos) {
    try {
      n = std::stoi(source.substr(colon + 1));
    } catch (const std::exception&) {
      throw InvalidInput("group '" + source + "': qubit count is not an integer");
    }
  }
  if (kind == "pauli") {
    if (n < 1 || n > 3) throw InvalidInput("group '" + source + "': pauli groups need 1..3 qubits");
    std::vector<Operator> gens;
    std::vector<std::string> labels;
    for (int q = 0; q < n; ++q) {
      gens.push_back(embed_single(pauli_x(), q, n));
      labels.push_back("X" + std::to_string(q + 1));
      gens.push_back(embed_single(pauli_z(), q, n));
      labels.push_back("Z" + std::to_string(q + 1));
    }
    return close_group(gens, 4096, labels);
  }
  if (kind == "symmetric") {
    if (n < 2 || n > 5) throw InvalidInput("group '" + source + "': symmetric groups need 2..5 qubits");
    std::vector<Operator> gens;
    std::vector<std::string> labels;
    for (int q = 1; q < n; ++q) {
      const std::string word = "(" + std::to_string(q) + " " + std::to_string(q + 1) + ")";
      gens.push_back(perm_rep(n, Permutation::parse(word, n)));
      labels.push_back(word);
    }
    return close_group(gens, 4096, labels);
  }
  if (kind == "swap") {
    return close_group({perm_rep(2, Permutation::parse("(1 2)", 2))}, 4096, {"SWAP"});
  }
  throw InvalidInput("unknown group '" + source + "' (expected a file, pauli:N, symmetric:N or swap)");
}

}  // namespace

std::string_view to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::kGenerator: return "generator";
    case OperatorKind::kHamiltonian: return "hamiltonian";
    case OperatorKind::kLindblad: return "lindblad";
    case OperatorKind::kKraus: return "kraus";
    case OperatorKind::kGroupElement: return "group-element";
    case OperatorKind::kError: return "error";
  }
  return "generator";
}

OperatorKind operator_kind_from_string(std::string_view text) {
  for (auto k : {OperatorKind::kGenerator, OperatorKind::kHamiltonian, OperatorKind::kLindblad,
                 OperatorKind::kKraus, OperatorKind::kGroupElement, OperatorKind::kError}) {
    if (to_string(k) == text) return k;
  }
  throw InvalidInput("unknown operator kind '" + std::string(text) +
                     "' (expected generator|hamiltonian|lindblad|kraus|group-element|error)");
}

std::vector<Operator> OperatorFile::of_kind(OperatorKind kind) const {
  std::vector<Operator> out;
  for (const auto& o : operators) {
    if (o.kind == kind) out.push_back(o.op);
  }
  return out;
}

std::vector<std::string> OperatorFile::names_of_kind(OperatorKind kind) const {
  std::vector<std::string> out;
  for (const auto& o : operators) {
    if (o.kind == kind) out.push_back(o.name);
  }
  return out;
}

std::vector<Operator> OperatorFile::all() const {
  std::vector<Operator> out;
  for (const auto& o : operators) out.push_back(o.op);
  return out;
}

bool OperatorFile::has(OperatorKind kind) const {
  for (const auto& o : operators) {
    if (o.kind == kind) return true;
  }
  return false;
}

OperatorFile parse_operator_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("operator file: top level must be an object");
  if (j.contains("schema_version") && j.at("schema_version") != kSchemaVersion) {
    throw InvalidInput("operator file: unsupported schema_version " + j.at("schema_version").dump());
  }
  if (!j.contains("operators") || !j.at("operators").is_array()) {
    throw InvalidInput("operator file: missing 'operators' array");
  }
  OperatorFile file;
  file.generate_group = j.value("generate", false);
  if (j.contains("dim")) {
    if (!j.at("dim").is_number_integer() || j.at("dim").get<Index>() < 1) {
      throw InvalidInput("operator file: 'dim' must be a positive integer");
    }
    file.dim = j.at("dim").get<Index>();
  }
  const Json& ops = j.at("operators");
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (auto& op : expand_entry(ops[i], i)) {
      const std::string where = where_of(i, op.name);
      if (file.dim == 0) file.dim = op.op.rows();
      if (op.op.rows() != file.dim) {
        fail(where, "dimension " + std::to_string(op.op.rows()) + " does not match file dimension " +
                        std::to_string(file.dim));
      }
      if (op.kind == OperatorKind::kHamiltonian &&
          (op.op - op.op.adjoint()).norm() > 1e-12 * std::max(1.0, op.op.norm())) {
        fail(where, "tagged hamiltonian but not hermitian");
      }
      file.operators.push_back(std::move(op));
    }
  }
  if (file.operators.empty()) throw InvalidInput("operator file: no operators");
  return file;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

OperatorFile read_operator_file(const std::filesystem::path& path) {
  const Json j = read_json_file(path);
  try {
    return parse_operator_json(j);
  } catch (const Json::exception& e) {
    throw InvalidInput("'" + path.string() + "': " + e.what());
  } catch (const InvalidInput& e) {
    throw InvalidInput("'" + path.string() + "': " + e.what());
  }
}

LindbladModel lindblad_model(const OperatorFile& file) {
  LindbladModel m;
  m.hamiltonian = Operator::Zero(file.dim, file.dim);
  for (const auto& o : file.operators) {
    if (o.kind == OperatorKind::kHamiltonian) m.hamiltonian += o.op;
    if (o.kind == OperatorKind::kLindblad) m.channels.push_back({o.op, o.rate});
  }
  return m;
}

KrausMap kraus_map(const OperatorFile& file) {
  return KrausMap{file.of_kind(OperatorKind::kKraus)};
}

GroupRep load_group(const std::string& source) {
  if (!std::filesystem::exists(source)) return builtin_group(source);
  const OperatorFile file = read_operator_file(source);
  std::vector<Operator> elems;
  std::vector<std::string> labels;
  const bool tagged = file.has(OperatorKind::kGroupElement);
  for (const auto& o : file.operators) {
    if (tagged && o.kind != OperatorKind::kGroupElement) continue;
    elems.push_back(o.op);
    labels.push_back(o.name);
  }
  if (file.generate_group) return close_group(elems, 4096, labels);
  return GroupRep::from_elements(elems, labels);
}

CodeSubspace read_code_file(const std::filesystem::path& path) {
  const Json j = read_json_file(path);
  try {
    if (j.contains("states")) {
      const Json& states = j.at("states");
      if (!states.is_array() || states.empty()) throw InvalidInput("code: 'states' must be a non-empty array");
      Eigen::MatrixXcd basis;
      for (std::size_t k = 0; k < states.size(); ++k) {
        const Eigen::VectorXcd v = vector_from_json(states[k]);
        if (k == 0) basis.resize(v.size(), static_cast<Index>(states.size()));
        if (v.size() != basis.rows()) throw InvalidInput("code: state " + std::to_string(k) + " has the wrong length");
        basis.col(static_cast<Index>(k)) = v;
      }
      return make_code(std::move(basis), 1e-8);
    }
    return j.get<CodeSubspace>();
  } catch (const Json::exception& e) {
    throw InvalidInput("'" + path.string() + "': " + e.what());
  } catch (const InvalidInput& e) {
    throw InvalidInput("'" + path.string() + "': " + e.what());
  }
}

}  // namespace nsalg::cli
