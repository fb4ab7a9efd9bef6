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

// Codes read off a block decomposition, the Knill-Laflamme check, and the
// stabilizer specialization.

#ifndef NSALG_CODES_H_
#define NSALG_CODES_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsalg/pauli.h"
#include "nsalg/types.h"
#include "nsalg/wedderburn.h"

namespace nsalg {

enum class CodeRole {
  kMultiplicity,  // span{|J lambda mu>, lambda varies}: corrects errors in A
  kGauge,         // span{|J lambda mu>, mu varies}: corrects errors in A'
};

std::string_view to_string(CodeRole role);
CodeRole code_role_from_string(std::string_view text);

struct CodeSubspace {
  Index dim = 0;
  Eigen::MatrixXcd basis;  // dim x size, orthonormal columns
  int sector = 0;
  Index fixed_index = 0;   // mu for kMultiplicity, lambda for kGauge (0-based)
  CodeRole role = CodeRole::kMultiplicity;

  Index size() const { return basis.cols(); }
};

// Reads the code off the columns of bs.basis_change.
CodeSubspace extract_code(const BlockStructure& bs, int sector,
                          Index fixed_index, CodeRole role);

// Wraps explicit orthonormal state vectors (columns) as a code.
CodeSubspace make_code(Eigen::MatrixXcd basis, double tol = kDefaultTol);

struct KLReport {
  // c(i, j): the common value of <v_a| e_i^dagger e_j |v_a>.
  Eigen::MatrixXcd c;
  double off_diagonal_violation = 0.0;  // max |<v_a|e_i^+ e_j|v_b>|, a != b
  double diagonal_violation = 0.0;      // max |<v_a|e_i^+ e_j|v_a> - c_ij|
  bool passed = false;
  bool degenerate = false;
  Index c_rank = 0;
  Index error_count = 0;
  double tol = 0.0;
};

// Knill-Laflamme condition <v_a|e_i^+ e_j|v_b> = delta_ab c_ij over all code
// basis pairs. The rank of c uses singular values above tol * (largest).
KLReport kl_check(const CodeSubspace& code, const std::vector<Operator>& errors,
                  double tol = kVerifyTol);

// Joint eigenspaces of commuting, independent, hermitian Pauli generators.
// Sector label = syndrome integer, first generator in the most significant
// bit (bit set <=> eigenvalue -1); n = 2^(N-k), d = 1.
BlockStructure stabilizer_decompose(const std::vector<PauliString>& generators,
                                    int num_qubits);

enum class ErrorClass { kInGroup, kAnticommutes, kUndetectable };
std::string_view to_string(ErrorClass c);

struct ErrorPairClassification {
  ErrorClass kind = ErrorClass::kUndetectable;
  // e_i^dagger e_j itself.
  PauliString product;
  // kInGroup: product = phase * (product of the listed generators).
  Complex phase{1.0, 0.0};
  std::vector<int> generators_used;
  // kAnticommutes: first generator anticommuting with the product.
  std::optional<int> anticommuting_generator;
};

ErrorPairClassification classify_error_pair(
    const PauliString& e_i, const PauliString& e_j,
    const std::vector<PauliString>& generators);

// Throws InvalidInput unless the generators are hermitian, pairwise
// commuting and independent over GF(2).
void validate_stabilizer(const std::vector<PauliString>& generators,
                         int num_qubits);

}  // namespace nsalg

#endif  // NSALG_CODES_H_
