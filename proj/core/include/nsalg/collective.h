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

// Collective decoherence on N qubits: S_alpha = sum_i sigma_alpha^(i), the
// qubit-permutation representation, and the Schur-Weyl block structure.

#ifndef NSALG_COLLECTIVE_H_
#define NSALG_COLLECTIVE_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nsalg/types.h"
#include "nsalg/wedderburn.h"

namespace nsalg {

inline constexpr int kMaxCollectiveQubits = 12;
inline constexpr int kMaxDecomposeQubits = 10;

struct CollectiveSystem {
  int num_qubits = 0;
  Operator sx, sy, sz;

  std::vector<Operator> ops() const { return {sx, sy, sz}; }
};

// 1 <= N <= 12. No factor 1/2: S_z has eigenvalues N, N-2, ..., -N.
CollectiveSystem collective_ops(int num_qubits);

// Permutation of qubit positions, 0-based: image[j] = pi(j).
struct Permutation {
  std::vector<int> image;

  int size() const { return static_cast<int>(image.size()); }
  bool is_identity() const;

  // Disjoint cycles in 1-based notation, e.g. "(1 2)(3)" or "(1 3 2)".
  // "()" and "" denote the identity. Throws InvalidInput when malformed.
  static Permutation parse(std::string_view text, int num_qubits);
  std::string str() const;
};

// Unitary moving the qubit in position j to position pi(j):
// |x_0 ... x_{N-1}> -> |y> with y_{pi(j)} = x_j. A transposition gives the
// SWAP of the two qubits.
Operator perm_rep(int num_qubits, const Permutation& perm);

// n_J = (2J+1) C(N, N/2 - J) / (N/2 + J + 1), from exact integer
// arithmetic; 0 when 2J and N have different parity or 2J > N.
Index predicted_multiplicity(int num_qubits, int two_j);

struct SchurWeylStructure {
  BlockStructure structure;
  std::vector<int> two_j;  // per sector label
  // max over S_x, S_y, S_z of the 1 (x) M form residual.
  double certification_residual = 0.0;
};

// Block structure of the collective algebra for N <= 10. The basis is
// built from highest-weight vectors (kernel of S_+ at maximal S_z)
// lowered with S_-, so mu = 0 is M = J and mu runs down to M = -J.
// Sectors are tagged "J=1/2", "J=1", ... in ascending J. Throws
// NumericalError if a multiplicity disagrees with predicted_multiplicity
// or the generators fail the block-form check. The seed is recorded only.
SchurWeylStructure schur_weyl_decompose(int num_qubits, std::uint64_t seed = 0);

std::string spin_label(int two_j);

struct CodeState {
  int alpha = 0;  // logical index (1-based, as printed)
  int beta = 0;   // gauge index (1-based)
  std::string name;
  StateVector state;
};

// The four 3-qubit J = 1/2 states psi_beta^alpha; qubit 1 is the leftmost
// factor.
std::vector<CodeState> three_qubit_code_states();

struct ClusterSectorInfo {
  Index multiplicity = 0;
  Index irrep_dim = 0;
};

struct ClusterReport {
  std::vector<int> cluster_sizes;
  BlockStructure structure;
  std::vector<ClusterSectorInfo> sectors;    // from the decomposition
  std::vector<ClusterSectorInfo> predicted;  // products over clusters
  bool matches_prediction = false;
  std::vector<Index> ns_dims;  // sector multiplicities >= 2, sorted
  Index max_ns_dim = 1;
  // "dense": generate_algebra + decompose; "product": tensor product of the
  // per-cluster Schur-Weyl bases.
  std::string method;
  double certification_residual = 0.0;
  std::uint64_t seed = 0;
};

// Collective noise acting independently on consecutive clusters of qubits
// (cluster 0 holds the leftmost qubits). For N <= 6 the generated algebra
// is decomposed directly; larger systems use the tensor product of the
// per-cluster structures, certified on the generators.
ClusterReport cluster_decompose(const std::vector<int>& cluster_sizes,
                                std::uint64_t seed = 0);

// Collective operators restricted to one cluster, embedded in N qubits.
std::vector<Operator> cluster_generators(const std::vector<int>& cluster_sizes);

}  // namespace nsalg

#endif  // NSALG_COLLECTIVE_H_
