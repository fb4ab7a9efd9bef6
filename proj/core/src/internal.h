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

#ifndef NSALG_SRC_INTERNAL_H_
#define NSALG_SRC_INTERNAL_H_

#include <utility>
#include <vector>

#include "nsalg/types.h"
#include "nsalg/wedderburn.h"

namespace nsalg::internal {

// Splits ascending eigenvalues into (start, size) runs wherever consecutive
// values differ by more than max(rel_gap * range, 1e-12 * max|value|).
std::vector<std::pair<Index, Index>> cluster_spectrum(
    const Eigen::VectorXd& evals, double rel_gap);

struct PendingSector {
  Sector sector;             // label and offset are assigned on assembly
  Eigen::MatrixXcd columns;  // dim x (n d), lambda-major
};

// Sorts sectors canonically (irrep dimension, multiplicity, then the
// diagonal of Q_J, larger weight on earlier basis states first), labels
// them 0, 1, ... and stacks their columns into the basis change.
// Deviation of a matrix already in the block basis of bs from the form
// (+)_J 1 (x) M_J (algebra side) or (+)_J M_J (x) 1, off-sector weight
// included.
double block_form_residual(const Operator& z, const BlockStructure& bs,
                           bool algebra_side);

BlockStructure assemble_structure(Index dim, std::vector<PendingSector> pending,
                                  std::uint64_t seed);

}  // namespace nsalg::internal

#endif  // NSALG_SRC_INTERNAL_H_
