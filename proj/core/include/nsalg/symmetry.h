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

// Finite unitary groups, the group-average projector (twirl), and the
// symmetrization pipelines built on it.

#ifndef NSALG_SYMMETRY_H_
#define NSALG_SYMMETRY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "nsalg/algebra.h"
#include "nsalg/types.h"
#include "nsalg/wedderburn.h"

namespace nsalg {

// A finite group of unitaries given by its full element list. The identity
// is element 0.
class GroupRep {
 public:
  GroupRep() = default;

  // Validates unitarity (1e-10), presence of the identity and closure under
  // products (1e-8). Reorders so that the identity comes first.
  static GroupRep from_elements(std::vector<Operator> elements,
                                std::vector<std::string> labels = {});

  Index dim() const { return dim_; }
  Index order() const { return static_cast<Index>(elements_.size()); }
  const std::vector<Operator>& elements() const { return elements_; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  GroupRep(Index dim, std::vector<Operator> elements,
           std::vector<std::string> labels)
      : dim_(dim), elements_(std::move(elements)), labels_(std::move(labels)) {}

  friend GroupRep close_group(const std::vector<Operator>&, Index,
                              const std::vector<std::string>&);

  Index dim_ = 0;
  std::vector<Operator> elements_;
  std::vector<std::string> labels_;
};

// Breadth-first closure of the generators under multiplication; elements
// closer than 1e-8 (HS distance) are identified, so global phases count.
// When generator labels are given, element labels are words in them.
// Throws if the order would exceed max_order.
GroupRep close_group(const std::vector<Operator>& generators,
                     Index max_order = 4096,
                     const std::vector<std::string>& generator_labels = {});

// |G|^-1 sum_g g X g^dagger, summed in element order.
Operator twirl(const Operator& x, const GroupRep& group);

struct SuppressionReport {
  double invariance_residual = 0.0;  // ||twirl(H) - H||
  bool hamiltonian_invariant = false;
  std::vector<double> coupling_norms;  // ||twirl(S_alpha)||
  std::vector<bool> suppressed;
  bool all_suppressed = false;
  // Condition (i) holds and every coupling averages to zero.
  bool unitary_effective_dynamics = false;
  double tol = 0.0;
};

SuppressionReport check_suppression(const Operator& hamiltonian,
                                    const std::vector<Operator>& couplings,
                                    const GroupRep& group,
                                    double tol = kVerifyTol);

struct GroupNoiselessReport {
  OperatorAlgebra group_algebra;  // span of the group elements
  BlockStructure structure;       // its decomposition
  std::vector<double> containment_residuals;  // per interaction generator
  bool contained = false;
  double tol = 0.0;
};

// If every interaction generator lies in span(G), the interaction algebra
// is contained in the group algebra and supports noiseless subsystems of
// (at least) the multiplicities n_J of the group algebra's structure.
GroupNoiselessReport ns_from_group(const std::vector<Operator>& interaction,
                                   const GroupRep& group, std::uint64_t seed = 0,
                                   double tol = kVerifyTol);

struct UniversalityReport {
  Index lie_dim = 0;        // dimension of the Lie algebra of {iK1, iK2}
  Index projected_dim = 0;  // dimension after restriction to the sector's
                            // multiplicity factor
  Index ns_dim = 0;         // n_J of the sector
  Index u_threshold = 0;    // n_J^2
  Index su_threshold = 0;   // n_J^2 - 1
  bool universal_u = false;
  bool universal_su = false;
  double twirl_invariance = 0.0;  // max ||twirl(K) - K|| for K1, K2
  std::uint64_t seed = 0;         // caller-recorded, informational
};

// Twirls both Hamiltonians, closes {iK1, iK2} under commutators and
// measures how much of u(n_J) the closure reaches on sector `sector` of bs
// (partial trace over the d_J factor in the block basis). The closure is
// computed over C; for anti-hermitian generators its complex dimension
// equals the real dimension of the Lie algebra.
UniversalityReport symmetrized_universality(const Operator& h1,
                                            const Operator& h2,
                                            const GroupRep& group,
                                            const BlockStructure& bs, int sector,
                                            double tol = kDefaultTol);

// Real dimension of the Lie algebra generated by the anti-hermitian
// operators (each must satisfy X^dagger = -X).
Index lie_closure_dimension(const std::vector<Operator>& anti_hermitian,
                            double tol = kDefaultTol);

}  // namespace nsalg

#endif  // NSALG_SYMMETRY_H_
