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

// Block decomposition of a finite-dimensional *-algebra,
//
//   A ~= (+)_J 1_{n_J} (x) M(d_J),    H ~= (+)_J C^{n_J} (x) C^{d_J},
//
// and the noiseless subsystems (n_J >= 2) it exposes.

#ifndef NSALG_WEDDERBURN_H_
#define NSALG_WEDDERBURN_H_

#include <cstdint>
#include <string>
#include <vector>

#include "nsalg/algebra.h"
#include "nsalg/types.h"

namespace nsalg {

struct Sector {
  int label = 0;
  // Free-form physical tag ("J=1/2", "syndrome 01", ...). May be empty.
  std::string tag;
  Index multiplicity = 1;  // n_J
  Index irrep_dim = 1;     // d_J
  Index offset = 0;        // first column of the sector in basis_change

  Index size() const { return multiplicity * irrep_dim; }
};

// Result of a decomposition. Column offset + lambda * d + mu of
// basis_change is |J lambda mu> (0-based lambda < n, mu < d).
struct BlockStructure {
  Index dim = 0;
  std::vector<Sector> sectors;
  Operator basis_change;
  // Seed that produced this structure (after retries); 0 when not random.
  std::uint64_t seed = 0;

  const Sector& sector(int label) const;
  Index column(const Sector& s, Index lambda, Index mu) const {
    return s.offset + lambda * s.irrep_dim + mu;
  }
  // dim x (n d) isometry onto the sector subspace.
  Eigen::MatrixXcd sector_basis(int label) const;
  // Central projector Q_J.
  Operator sector_projector(int label) const;
};

struct VerificationReport {
  double algebra_form_residual = 0.0;    // max over A basis of ||A - 1 (x) M||
  double commutant_form_residual = 0.0;  // max over A' basis of ||B - M (x) 1||
  double unitarity_residual = 0.0;       // ||U^dagger U - I||
  Index sum_nd = 0;
  Index ambient_dim = 0;
  Index sum_d2 = 0;
  Index algebra_dim = 0;
  Index sum_n2 = 0;
  Index commutant_dim = 0;
  double tol = 0.0;
  bool passed = false;
};

struct DecomposeOptions {
  double verify_tol = kVerifyTol;
  // Eigenvalue clusters split where the gap exceeds this fraction of the
  // spectral range.
  double cluster_gap = 1e-6;
  // Successor seeds tried after a failed certification.
  int max_retries = 5;
  double span_tol = kDefaultTol;
};

// Randomized decomposition of a unital, dagger-closed algebra.
//
// A seeded random hermitian element of A is diagonalized; within a sector
// it acts as 1_n (x) M with M generic, so its eigenspaces are the spaces
// span{|J lambda mu>, lambda} for fixed mu, each of dimension n_J.
// Eigenspaces linked by some basis element of A belong to the same sector.
// Within a sector the first eigenspace is the reference; the others get
// their basis by transporting it with the algebra element of largest
// overlap, polar-normalized. The result is certified by checking every
// basis element of A for 1 (x) M form and sum d_J^2 = dim A; on failure the
// next seed is tried. Sectors are sorted by (d, n, diagonal of Q_J
// descending lexicographically) and labelled 0, 1, ...
BlockStructure decompose(const OperatorAlgebra& alg, std::uint64_t seed,
                         double tol = kVerifyTol);
BlockStructure decompose(const OperatorAlgebra& alg, std::uint64_t seed,
                         const DecomposeOptions& options);

// Full certification: also computes the commutant and checks M (x) 1 form
// and sum n_J^2 = dim A'.
VerificationReport verify_structure(const OperatorAlgebra& alg,
                                    const BlockStructure& bs,
                                    double tol = kVerifyTol);

struct NoiselessSubsystem {
  int label = 0;
  Index ns_dim = 0;     // n_J
  Index gauge_dim = 0;  // d_J
  // dim x n_J isometry |lambda> -> |J lambda 0>.
  Eigen::MatrixXcd encoder;
};

// One entry per sector with n_J >= 2, in sector order.
std::vector<NoiselessSubsystem> noiseless_subsystems(const BlockStructure& bs);

// U^dagger X U.
Operator to_block_basis(const Operator& x, const BlockStructure& bs);

// Deviation of X from the block form (+)_J 1 (x) M_J (algebra side) or
// (+)_J M_J (x) 1 (commutant side), measured in the block basis. Includes
// the weight outside the diagonal sector blocks.
double algebra_form_residual(const Operator& x, const BlockStructure& bs);
double commutant_form_residual(const Operator& x, const BlockStructure& bs);

// sum_{lambda, mu} logical_lambda gauge_mu |J lambda mu>.
StateVector encode_state(const BlockStructure& bs, int label,
                         const StateVector& logical, const StateVector& gauge);

// Structure of the scalar algebra C*1: one sector with n = dim, d = 1,
// identity basis change.
BlockStructure scalar_structure(Index dim);

}  // namespace nsalg

#endif  // NSALG_WEDDERBURN_H_
