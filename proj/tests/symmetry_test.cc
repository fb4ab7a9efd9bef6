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

#include <set>

#include <gtest/gtest.h>

#include "nsalg/algebra.h"
#include "nsalg/collective.h"
#include "nsalg/linalg.h"
#include "nsalg/random.h"
#include "nsalg/symmetry.h"
#include "testing/oracles.h"

namespace nsalg {
namespace {

GroupRep pauli_group_1() { return close_group({pauli_x(), pauli_z()}); }

GroupRep s3() {
  return close_group({testing::permutation_matrix({1, 0, 2}), testing::permutation_matrix({0, 2, 1})});
}

GroupRep swap_group() { return close_group({testing::permutation_matrix({1, 0})}); }

Operator heisenberg3() {
  Operator h = Operator::Zero(8, 8);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      for (const auto& p : {pauli_x(), pauli_y(), pauli_z()}) {
        h += embed_single(p, i, 3) * embed_single(p, j, 3);
      }
    }
  }
  return h;
}

TEST(CloseGroup, Orders) {
  EXPECT_EQ(swap_group().order(), 2);
  EXPECT_EQ(s3().order(), 6);
  // {+-I, +-X, +-Z, +-iY}: generated by X and Z, phases +-1 only.
  EXPECT_EQ(pauli_group_1().order(), 8);
}

TEST(CloseGroup, IdentityFirstAndLabels) {
  const GroupRep g = close_group({pauli_x(), pauli_z()}, 64, {"X", "Z"});
  EXPECT_LT((g.elements()[0] - identity(2)).norm(), 1e-12);
  EXPECT_EQ(g.labels()[0], "e");
  EXPECT_EQ(g.labels().size(), g.elements().size());
}

TEST(CloseGroup, OverflowAndNonUnitaryThrow) {
  Operator r = Operator::Identity(2, 2);
  r(1, 1) = std::polar(1.0, 1.0);  // infinite order
  EXPECT_THROW(close_group({r}, 50), InvalidInput);
  EXPECT_THROW(close_group({2.0 * identity(2)}), InvalidInput);
}

TEST(GroupRep, FromElementsValidates) {
  const Operator swap = testing::permutation_matrix({1, 0});
  const GroupRep g = GroupRep::from_elements({swap, identity(4)});
  EXPECT_EQ(g.order(), 2);
  EXPECT_LT((g.elements()[0] - identity(4)).norm(), 1e-12);
  EXPECT_THROW(GroupRep::from_elements({swap}), InvalidInput);  // no identity
  EXPECT_THROW(GroupRep::from_elements({identity(2), pauli_x(), pauli_z()}), InvalidInput);
}

TEST(Twirl, PauliGroupGivesScalar) {
  testing::Rng rng(1);
  const GroupRep g = pauli_group_1();
  for (int k = 0; k < 5; ++k) {
    const Operator x = testing::gaussian(2, 2, rng);
    EXPECT_LT((twirl(x, g) - x.trace() / 2.0 * identity(2)).norm(), 1e-10);
  }
}

TEST(Twirl, SwapAverage) {
  const Operator zi = kron(pauli_z(), identity(2));
  const Operator iz = kron(identity(2), pauli_z());
  EXPECT_LT((twirl(zi, swap_group()) - (zi + iz) / 2.0).norm(), 1e-14);
}

TEST(Twirl, FixesTheCommutant) {
  const Operator sz = collective_ops(3).sz;
  EXPECT_LT((twirl(sz, s3()) - sz).norm(), 1e-12);
}

TEST(Twirl, ContractProperties) {
  testing::Rng rng(44);
  for (const GroupRep& g : {pauli_group_1(), s3(), swap_group()}) {
    for (int k = 0; k < 10; ++k) {
      const Operator x = testing::gaussian(g.dim(), g.dim(), rng);
      const Operator t = twirl(x, g);
      EXPECT_LT((twirl(t, g) - t).norm(), 1e-10);
      for (const auto& e : g.elements()) EXPECT_LT((e * t - t * e).norm(), 1e-8);
      EXPECT_LT(std::abs(t.trace() - x.trace()), 1e-10);
      const Operator h = (x + x.adjoint()) / 2.0;
      const Operator th = twirl(h, g);
      EXPECT_LT((th - th.adjoint()).norm(), 1e-12);
    }
  }
}

TEST(Twirl, DimensionMismatchThrows) {
  EXPECT_THROW(twirl(identity(3), swap_group()), DimensionError);
}

TEST(CheckSuppression, PauliGroupSuppressesSigmaZ) {
  const SuppressionReport r = check_suppression(identity(2), {pauli_z()}, pauli_group_1());
  EXPECT_TRUE(r.hamiltonian_invariant);
  ASSERT_EQ(r.suppressed.size(), 1u);
  EXPECT_TRUE(r.suppressed[0]);
  EXPECT_LT(r.coupling_norms[0], 1e-12);
  EXPECT_TRUE(r.unitary_effective_dynamics);
}

TEST(CheckSuppression, HeisenbergUnderS3DoesNotSuppressCollectiveCoupling) {
  const Operator sz = collective_ops(3).sz;
  const SuppressionReport r = check_suppression(heisenberg3(), {sz}, s3());
  EXPECT_TRUE(r.hamiltonian_invariant);
  EXPECT_LT(r.invariance_residual, 1e-10);
  EXPECT_FALSE(r.suppressed[0]);
  EXPECT_NEAR(r.coupling_norms[0], sz.norm(), 1e-10);
  EXPECT_FALSE(r.unitary_effective_dynamics);
}

TEST(CheckSuppression, AnticommutingConjugationBreaksInvariance) {
  const GroupRep g = GroupRep::from_elements({identity(2), pauli_z()});
  const SuppressionReport r = check_suppression(pauli_x(), {}, g);
  EXPECT_FALSE(r.hamiltonian_invariant);
  EXPECT_NEAR(r.invariance_residual, pauli_x().norm(), 1e-12);
}

TEST(NsFromGroup, SwapOnTwoQubits) {
  const Operator swap = testing::permutation_matrix({1, 0});
  const GroupNoiselessReport r = ns_from_group({swap}, swap_group());
  EXPECT_TRUE(r.contained);
  std::multiset<std::pair<Index, Index>> shape;
  for (const auto& s : r.structure.sectors) shape.emplace(s.multiplicity, s.irrep_dim);
  const std::multiset<std::pair<Index, Index>> expected = {{3, 1}, {1, 1}};
  EXPECT_EQ(shape, expected);
}

TEST(NsFromGroup, NegativeControl) {
  const Operator xi = kron(pauli_x(), identity(2));
  const GroupNoiselessReport r = ns_from_group({xi}, swap_group());
  EXPECT_FALSE(r.contained);
  ASSERT_EQ(r.containment_residuals.size(), 1u);
  // XI is HS-orthogonal to both I and SWAP.
  EXPECT_NEAR(r.containment_residuals[0], 2.0, 1e-10);
}

TEST(NsFromGroup, EmptyInteractionIsContained) {
  const GroupNoiselessReport r = ns_from_group({}, s3());
  EXPECT_TRUE(r.contained);
  Index total = 0;
  for (const auto& s : r.structure.sectors) total += s.size();
  EXPECT_EQ(total, 8);
}

// Symmetrized couplings generate an algebra inside the commutant of
// span(G), and its noiseless dimensions include the group's d_J.
TEST(NsFromGroup, SymmetrizedAlgebraLivesInTheCommutant) {
  const GroupRep g = s3();
  const OperatorAlgebra group_alg = OperatorAlgebra::from_spanning_set(g.elements(), true);
  const OperatorAlgebra group_comm = commutant(group_alg);
  const BlockStructure gbs = ns_from_group({}, g).structure;
  std::set<Index> group_d;
  for (const auto& s : gbs.sectors) group_d.insert(s.irrep_dim);
  testing::Rng rng(6);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<Operator> sym;
    for (int k = 0; k < 3; ++k) sym.push_back(twirl(testing::random_hermitian_matrix(8, rng), g));
    const OperatorAlgebra alg = generate_algebra(sym);
    EXPECT_LT(containment_residual(alg, group_comm), 1e-8);
    const BlockStructure bs = decompose(alg, 1);
    std::set<Index> ns;
    for (const auto& s : bs.sectors) ns.insert(s.multiplicity);
    for (Index d : group_d) EXPECT_TRUE(ns.count(d)) << "missing multiplicity " << d;
  }
}

TEST(Universality, TrivialGroupOnAQubit) {
  const GroupRep g = GroupRep::from_elements({identity(2)});
  const BlockStructure bs = ns_from_group({}, g).structure;
  Rng rng(3);
  const UniversalityReport r =
      symmetrized_universality(random_hermitian(2, rng), random_hermitian(2, rng), g, bs, 0);
  EXPECT_EQ(r.ns_dim, 2);
  EXPECT_EQ(r.projected_dim, 4);
  EXPECT_TRUE(r.universal_u);
}

TEST(Universality, S3SpinHalfSector) {
  const GroupRep g = s3();
  const BlockStructure bs = ns_from_group({}, g).structure;
  int label = -1;
  for (const auto& s : bs.sectors) {
    if (s.multiplicity == 2) label = s.label;
  }
  ASSERT_GE(label, 0);
  bool reached = false;
  for (std::uint64_t seed = 0; seed < 3 && !reached; ++seed) {
    Rng rng(seed);
    const Operator h1 = random_hermitian(8, rng);
    const Operator h2 = random_hermitian(8, rng);
    const UniversalityReport r = symmetrized_universality(h1, h2, g, bs, label);
    reached = r.projected_dim == 4 && r.universal_u && r.universal_su;
  }
  EXPECT_TRUE(reached);
}

TEST(Universality, DegeneratePairIsNotUniversal) {
  const GroupRep g = s3();
  const BlockStructure bs = ns_from_group({}, g).structure;
  int label = -1;
  for (const auto& s : bs.sectors) {
    if (s.multiplicity == 2) label = s.label;
  }
  Rng rng(5);
  const Operator h = random_hermitian(8, rng);
  const UniversalityReport r = symmetrized_universality(h, h, g, bs, label);
  EXPECT_EQ(r.projected_dim, 1);
  EXPECT_FALSE(r.universal_u);
}

TEST(Universality, RejectsNonHermitian) {
  const GroupRep g = swap_group();
  const BlockStructure bs = ns_from_group({}, g).structure;
  Operator a = Operator::Zero(4, 4);
  a(0, 1) = 1.0;
  EXPECT_THROW(symmetrized_universality(a, identity(4), g, bs, 0), InvalidInput);
}

TEST(LieClosure, Dimensions) {
  const Complex i(0.0, 1.0);
  EXPECT_EQ(lie_closure_dimension({i * pauli_x(), i * pauli_y()}), 3);
  EXPECT_EQ(lie_closure_dimension({i * pauli_z()}), 1);
  // su(4) from generic two-qubit hermitians.
  Rng rng(2);
  EXPECT_EQ(lie_closure_dimension({i * random_hermitian(4, rng), i * random_hermitian(4, rng)}), 16);
  EXPECT_THROW(lie_closure_dimension({pauli_x()}), InvalidInput);
}

}  // namespace
}  // namespace nsalg
