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

#include "nsalg/codes.h"

#include <algorithm>
#include <cmath>

#include "nsalg/linalg.h"
#include "span_builder.h"

namespace nsalg {
namespace {

using BitRow = std::vector<std::uint8_t>;

BitRow symplectic_row(const PauliString& p) {
  BitRow row(p.x());
  row.insert(row.end(), p.z().begin(), p.z().end());
  return row;
}

// Row-reduced generator matrix over GF(2) with, for every row, the set of
// input generators whose sum it is.
struct Gf2Basis {
  std::vector<BitRow> rows;
  std::vector<BitRow> combos;
  std::vector<std::size_t> pivots;

  explicit Gf2Basis(const std::vector<PauliString>& gens) {
    const std::size_t k = gens.size();
    for (std::size_t g = 0; g < k; ++g) {
      BitRow row = symplectic_row(gens[g]);
      BitRow combo(k, 0);
      combo[g] = 1;
      reduce(row, combo);
      const auto it = std::find(row.begin(), row.end(), std::uint8_t{1});
      if (it == row.end()) continue;
      const std::size_t pivot = static_cast<std::size_t>(it - row.begin());
      // Keep earlier rows reduced with respect to the new pivot.
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][pivot]) {
          xor_into(rows[r], row);
          xor_into(combos[r], combo);
        }
      }
      rows.push_back(std::move(row));
      combos.push_back(std::move(combo));
      pivots.push_back(pivot);
    }
  }

  static void xor_into(BitRow& dst, const BitRow& src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
  }

  void reduce(BitRow& row, BitRow& combo) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (row[pivots[r]]) {
        xor_into(row, rows[r]);
        xor_into(combo, combos[r]);
      }
    }
  }

  std::size_t rank() const { return rows.size(); }
};

}  // namespace

std::string_view to_string(CodeRole role) {
  return role == CodeRole::kMultiplicity ? "multiplicity" : "gauge";
}

CodeRole code_role_from_string(std::string_view text) {
  if (text == "multiplicity") return CodeRole::kMultiplicity;
  if (text == "gauge") return CodeRole::kGauge;
  throw InvalidInput("unknown code role \"" + std::string(text) +
                     "\" (expected multiplicity|gauge)");
}

std::string_view to_string(ErrorClass c) {
  switch (c) {
    case ErrorClass::kInGroup: return "IN_GROUP";
    case ErrorClass::kAnticommutes: return "ANTICOMMUTES";
    case ErrorClass::kUndetectable: return "UNDETECTABLE";
  }
  return "UNKNOWN";
}

CodeSubspace extract_code(const BlockStructure& bs, int sector,
                          Index fixed_index, CodeRole role) {
  const Sector& s = bs.sector(sector);
  const Index limit = role == CodeRole::kMultiplicity ? s.irrep_dim : s.multiplicity;
  if (fixed_index < 0 || fixed_index >= limit) {
    throw InvalidInput("extract_code: fixed index " + std::to_string(fixed_index) +
                       " out of range [0, " + std::to_string(limit) + ")");
  }
  CodeSubspace code;
  code.dim = bs.dim;
  code.sector = sector;
  code.fixed_index = fixed_index;
  code.role = role;
  if (role == CodeRole::kMultiplicity) {
    code.basis.resize(bs.dim, s.multiplicity);
    for (Index l = 0; l < s.multiplicity; ++l) {
      code.basis.col(l) = bs.basis_change.col(bs.column(s, l, fixed_index));
    }
  } else {
    code.basis.resize(bs.dim, s.irrep_dim);
    for (Index m = 0; m < s.irrep_dim; ++m) {
      code.basis.col(m) = bs.basis_change.col(bs.column(s, fixed_index, m));
    }
  }
  return code;
}

CodeSubspace make_code(Eigen::MatrixXcd basis, double tol) {
  if (basis.cols() == 0) throw InvalidInput("make_code: no basis vectors");
  const Eigen::MatrixXcd gram = basis.adjoint() * basis;
  const double err =
      (gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
  if (err > tol) {
    throw InvalidInput("make_code: basis vectors are not orthonormal (deviation " +
                       std::to_string(err) + ")");
  }
  CodeSubspace code;
  code.dim = basis.rows();
  code.basis = std::move(basis);
  return code;
}

KLReport kl_check(const CodeSubspace& code, const std::vector<Operator>& errors,
                  double tol) {
  if (errors.empty()) throw InvalidInput("kl_check: error list is empty");
  for (const auto& e : errors) require_dim(e, code.dim, "kl_check");
  const Index ne = static_cast<Index>(errors.size());
  const Index k = code.size();

  std::vector<Eigen::MatrixXcd> images;
  images.reserve(errors.size());
  for (const auto& e : errors) images.push_back(e * code.basis);

  KLReport r;
  r.tol = tol;
  r.error_count = ne;
  r.c.resize(ne, ne);
  for (Index i = 0; i < ne; ++i) {
    for (Index j = 0; j < ne; ++j) {
      const Eigen::MatrixXcd m = images[i].adjoint() * images[j];
      const Complex c = m.diagonal().mean();
      r.c(i, j) = c;
      for (Index a = 0; a < k; ++a) {
        r.diagonal_violation = std::max(r.diagonal_violation, std::abs(m(a, a) - c));
        for (Index b = 0; b < k; ++b) {
          if (a != b) {
            r.off_diagonal_violation = std::max(r.off_diagonal_violation, std::abs(m(a, b)));
          }
        }
      }
    }
  }
  r.passed = r.off_diagonal_violation < tol && r.diagonal_violation < tol;
  r.c_rank = numerical_rank(r.c, tol);
  r.degenerate = r.c_rank < ne;
  return r;
}

void validate_stabilizer(const std::vector<PauliString>& gens, int num_qubits) {
  for (std::size_t a = 0; a < gens.size(); ++a) {
    if (gens[a].num_qubits() != num_qubits) {
      throw InvalidInput("stabilizer: generator " + gens[a].str() + " acts on " +
                         std::to_string(gens[a].num_qubits()) + " qubits, expected " +
                         std::to_string(num_qubits));
    }
    if (!gens[a].is_hermitian()) {
      throw InvalidInput("stabilizer: generator " + gens[a].str() + " is not hermitian");
    }
    for (std::size_t b = 0; b < a; ++b) {
      if (!gens[a].commutes_with(gens[b])) {
        throw InvalidInput("stabilizer: generators " + gens[b].str() + " and " +
                           gens[a].str() + " anticommute");
      }
    }
  }
  if (Gf2Basis(gens).rank() != gens.size()) {
    throw InvalidInput("stabilizer: generators are dependent over GF(2)");
  }
}

BlockStructure stabilizer_decompose(const std::vector<PauliString>& gens,
                                    int num_qubits) {
  if (num_qubits < 1 || num_qubits > 12) {
    throw InvalidInput("stabilizer_decompose: qubit count must be in [1, 12]");
  }
  validate_stabilizer(gens, num_qubits);
  const Index dim = Index{1} << num_qubits;
  const std::size_t k = gens.size();
  const Index n = dim >> k;

  std::vector<Operator> ops;
  for (const auto& g : gens) ops.push_back(g.to_operator());

  BlockStructure bs;
  bs.dim = dim;
  bs.basis_change.resize(dim, dim);
  const std::size_t syndromes = std::size_t{1} << k;
  Index offset = 0;
  for (std::size_t s = 0; s < syndromes; ++s) {
    Operator proj = identity(dim);
    std::string bits;
    for (std::size_t j = 0; j < k; ++j) {
      const bool flipped = (s >> (k - 1 - j)) & 1U;
      bits += flipped ? '1' : '0';
      proj = proj * (0.5 * (identity(dim) + (flipped ? -1.0 : 1.0) * ops[j]));
    }
    internal::SpanBuilder range(dim, 1e-8);
    range.add(proj);
    if (range.size() != n) {
      throw NumericalError("stabilizer_decompose: syndrome space " + bits +
                           " has dimension " + std::to_string(range.size()));
    }
    bs.basis_change.middleCols(offset, n) = range.basis();
    Sector sec;
    sec.label = static_cast<int>(s);
    sec.tag = k == 0 ? std::string() : "syndrome " + bits;
    sec.multiplicity = n;
    sec.irrep_dim = 1;
    sec.offset = offset;
    bs.sectors.push_back(sec);
    offset += n;
  }
  return bs;
}

ErrorPairClassification classify_error_pair(const PauliString& e_i,
                                            const PauliString& e_j,
                                            const std::vector<PauliString>& gens) {
  const int n = e_i.num_qubits();
  if (e_j.num_qubits() != n) {
    throw DimensionError("classify_error_pair: qubit counts differ");
  }
  validate_stabilizer(gens, n);

  ErrorPairClassification out;
  out.product = e_i.dagger() * e_j;

  const Gf2Basis basis(gens);
  BitRow row = symplectic_row(out.product);
  BitRow combo(gens.size(), 0);
  basis.reduce(row, combo);
  if (std::none_of(row.begin(), row.end(), [](auto b) { return b != 0; })) {
    out.kind = ErrorClass::kInGroup;
    PauliString element(n);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (combo[g]) {
        element = element * gens[g];
        out.generators_used.push_back(static_cast<int>(g));
      }
    }
    const PauliString ratio(out.product.x(), out.product.z(),
                            out.product.phase() - element.phase());
    out.phase = ratio.phase_factor();
    return out;
  }
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (!out.product.commutes_with(gens[g])) {
      out.kind = ErrorClass::kAnticommutes;
      out.anticommuting_generator = static_cast<int>(g);
      return out;
    }
  }
  out.kind = ErrorClass::kUndetectable;
  return out;
}

}  // namespace nsalg
