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

#include <cmath>

#include <gtest/gtest.h>

#include "nsalg/algebra.h"
#include "nsalg/collective.h"
#include "nsalg/dynamics.h"
#include "nsalg/linalg.h"
#include "nsalg/random.h"
#include "nsalg/wedderburn.h"
#include "testing/oracles.h"

namespace nsalg {
namespace {

Operator plus_state() {
  Operator r(2, 2);
  r.setConstant(0.5);
  return r;
}

LindbladModel dephasing(double rate) {
  return LindbladModel{Operator::Zero(2, 2), {{pauli_z(), rate}}};
}

Operator random_density(Index dim, Rng& rng) {
  const Operator g = random_ginibre(dim, dim, rng);
  const Operator r = g * g.adjoint();
  return r / r.trace().real();
}

TEST(LindbladModel, Validation) {
  EXPECT_NO_THROW(dephasing(1.0).validate());
  EXPECT_THROW(dephasing(-1.0).validate(), InvalidInput);
  Operator sp = Operator::Zero(2, 2);
  sp(0, 1) = 1.0;
  EXPECT_THROW((LindbladModel{sp, {}}).validate(), InvalidInput);
  EXPECT_THROW((LindbladModel{identity(2), {{identity(3), 1.0}}}).validate(), DimensionError);
}

TEST(ValidateDensity, Rejects) {
  EXPECT_NO_THROW(validate_density(plus_state()));
  EXPECT_THROW(validate_density(identity(2)), InvalidInput);  // trace 2
  Operator neg = Operator::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  EXPECT_THROW(validate_density(neg), InvalidInput);
}

TEST(LindbladEvolve, ClosedPrecessionKeepsPurity) {
  const LindbladModel m{pauli_z(), {}};
  const Operator r = lindblad_evolve(m, plus_state(), 2.0, 400);
  EXPECT_NEAR((r * r).trace().real(), 1.0, 1e-8);
  // Exact: rho_01(t) = e^{-2it}/2.
  EXPECT_LT(std::abs(r(0, 1) - 0.5 * std::exp(Complex(0.0, -4.0))), 1e-8);
}

TEST(LindbladEvolve, AnalyticDephasing) {
  for (double lambda : {0.3, 1.0, 2.0}) {
    const Operator r = lindblad_evolve(dephasing(lambda), plus_state(), 1.0, 200);
    EXPECT_LT((r - testing::dephased_qubit(plus_state(), lambda, 1.0)).norm(), 1e-6);
  }
}

TEST(LindbladEvolve, TracePreservedForRandomModels) {
  Rng rng(12);
  for (int trial = 0; trial < 5; ++trial) {
    LindbladModel m{random_hermitian(4, rng), {}};
    for (int k = 0; k < 2; ++k) m.channels.push_back({random_ginibre(4, 4, rng) * 0.3, 0.5});
    const Operator r0 = random_density(4, rng);
    const Operator r = lindblad_evolve(m, r0, 1.0, 400);
    EXPECT_NEAR(r.trace().real(), 1.0, 1e-8);
    EXPECT_LT(std::abs(r.trace().imag()), 1e-8);
    EXPECT_LT((r - r.adjoint()).norm(), 1e-14);
    // Matches the exact exponential of the Liouvillian.
    const Operator exact = testing::exact_evolution(liouvillian(m), r0, 1.0);
    EXPECT_LT((r - exact).norm(), 1e-6);
  }
}

TEST(Liouvillian, MatchesRhs) {
  Rng rng(3);
  LindbladModel m{random_hermitian(3, rng), {{random_ginibre(3, 3, rng), 0.7}}};
  const Operator rho = random_density(3, rng);
  const Operator l = liouvillian(m);
  const Eigen::VectorXcd v = l * vec(rho);
  EXPECT_LT((unvec(v, 3) - lindblad_rhs(m, rho)).norm(), 1e-12);
}

TEST(LindbladEvolve, CoarseStepsAreRejected) {
  // Strong dephasing with one RK4 step per unit time leaves the stability
  // region and produces a negative eigenvalue.
  EXPECT_THROW(lindblad_evolve(dephasing(20.0), plus_state(), 1.0, 1), NumericalError);
  EXPECT_THROW(lindblad_evolve(dephasing(1.0), plus_state(), -1.0, 10), InvalidInput);
  EXPECT_THROW(lindblad_evolve(dephasing(1.0), plus_state(), 1.0, 0), InvalidInput);
}

TEST(LindbladEvolve, FourthOrderConvergence) {
  const double lambda = 1.0;
  const Operator exact = testing::dephased_qubit(plus_state(), lambda, 1.0);
  double previous = 0.0;
  for (int steps : {4, 8, 16, 32}) {
    const double err = (lindblad_evolve(dephasing(lambda), plus_state(), 1.0, steps) - exact).norm();
    if (previous > 0.0) {
      const double ratio = previous / err;
      EXPECT_GT(ratio, 12.0) << "steps " << steps;
      EXPECT_LT(ratio, 20.0) << "steps " << steps;
    }
    previous = err;
  }
}

TEST(ApplyKraus, Identity) {
  Rng rng(1);
  const Operator r = random_density(3, rng);
  EXPECT_LT((apply_kraus(KrausMap{{identity(3)}}, r) - r).norm(), 1e-15);
}

TEST(ApplyKraus, FullyDepolarizing) {
  const double p = 0.75;
  const KrausMap map{{std::sqrt(1 - p) * identity(2), std::sqrt(p / 3) * pauli_x(),
                      std::sqrt(p / 3) * pauli_y(), std::sqrt(p / 3) * pauli_z()}};
  Rng rng(2);
  for (int k = 0; k < 3; ++k) {
    EXPECT_LT((apply_kraus(map, random_density(2, rng)) - identity(2) / 2.0).norm(), 1e-12);
  }
}

TEST(ApplyKraus, PhaseFlipScalesCoherence) {
  const double p = 0.2;
  const KrausMap map{{std::sqrt(1 - p) * identity(2), std::sqrt(p) * pauli_z()}};
  const Operator r = apply_kraus(map, plus_state());
  EXPECT_NEAR(r(0, 1).real(), 0.5 * (1 - 2 * p), 1e-14);
  EXPECT_NEAR(r(0, 0).real(), 0.5, 1e-14);
}

TEST(ApplyKraus, IncompleteMapThrows) {
  EXPECT_THROW(apply_kraus(KrausMap{{0.5 * identity(2)}}, plus_state()), InvalidInput);
}

TEST(BlockCoherence, Examples) {
  const BlockStructure bs = schur_weyl_decompose(2).structure;  // J=0 (1), J=1 (3)
  EXPECT_NEAR(block_coherence(identity(4) / 4.0, bs), 0.0, 1e-14);
  const StateVector a = bs.sector_basis(0).col(0);
  const StateVector b = bs.sector_basis(1).col(0);
  const Operator block_diag = 0.5 * (a * a.adjoint() + b * b.adjoint());
  EXPECT_NEAR(block_coherence(block_diag, bs), 0.0, 1e-14);
  const StateVector phi = (a + b) / std::sqrt(2.0);
  EXPECT_NEAR(block_coherence(phi * phi.adjoint(), bs), 1.0 / std::sqrt(2.0), 1e-12);
}

struct ThreeQubit {
  BlockStructure bs;
  int half = 0;
};

const ThreeQubit& three_qubit() {
  static const ThreeQubit value = [] {
    ThreeQubit v;
    v.bs = schur_weyl_decompose(3).structure;
    for (const auto& s : v.bs.sectors) {
      if (s.tag == "J=1/2") v.half = s.label;
    }
    return v;
  }();
  return value;
}

TEST(NsFidelity, CollectiveDephasingIsHarmless) {
  const auto& t = three_qubit();
  const LindbladModel m{Operator::Zero(8, 8), {{collective_ops(3).sz, 1.0}}};
  Rng rng(9);
  const FidelityTrace tr = ns_fidelity_experiment(t.bs, t.half, m, random_state(2, rng),
                                                  StateVector::Unit(2, 0), {5.0, 50, 20});
  EXPECT_TRUE(tr.noise_contained);
  EXPECT_EQ(tr.times.size(), 50u);
  EXPECT_GT(tr.min_fidelity(), 1.0 - 1e-6);
  for (double leak : tr.leakage) EXPECT_LT(std::abs(leak), 1e-8);
}

// NS protection as a property: random noise drawn from the collective
// algebra, random logical and gauge states, gauge independence.
class NsProtection : public ::testing::TestWithParam<int> {};

TEST_P(NsProtection, RandomAlgebraNoise) {
  const auto& t = three_qubit();
  const OperatorAlgebra alg = generate_algebra(collective_ops(3).ops());
  Rng rng(100 + GetParam());
  const Operator g = random_element(alg, rng);
  const Operator h = (g + g.adjoint()) / 2.0;
  const LindbladModel m{h, {{random_element(alg, rng) * 0.3, 1.0}, {random_element(alg, rng) * 0.3, 0.5}}};
  const StateVector logical = random_state(2, rng);
  const FidelityTrace a = ns_fidelity_experiment(t.bs, t.half, m, logical, random_state(2, rng),
                                                 {1.0, 6, 100});
  const FidelityTrace b = ns_fidelity_experiment(t.bs, t.half, m, logical, random_state(2, rng),
                                                 {1.0, 6, 100});
  EXPECT_TRUE(a.noise_contained);
  EXPECT_GT(a.min_fidelity(), 1.0 - 1e-6);
  for (std::size_t k = 0; k < a.fidelity.size(); ++k) {
    EXPECT_NEAR(a.fidelity[k], b.fidelity[k], 1e-8);
    // Sector weights are conserved.
    for (std::size_t s = 0; s < a.sector_weights[k].size(); ++s) {
      EXPECT_NEAR(a.sector_weights[k][s], a.sector_weights[0][s], 1e-8);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, NsProtection, ::testing::Range(0, 4));

TEST(NsFidelity, BareQubitDephasing) {
  const BlockStructure bs = scalar_structure(2);  // whole qubit as one n = 2 sector
  StateVector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const FidelityTrace tr =
      ns_fidelity_experiment(bs, 0, dephasing(1.0), plus, StateVector::Unit(1, 0), {1.0, 2, 200});
  EXPECT_FALSE(tr.noise_contained);
  EXPECT_NEAR(tr.fidelity.back(), (1.0 + std::exp(-2.0)) / 2.0, 1e-6);
}

TEST(NsFidelity, ExchangeErrorIsDetected) {
  const auto& t = three_qubit();
  const Operator swap = perm_rep(3, Permutation::parse("(1 2)", 3));
  const double p = 0.5;
  const KrausMap map{{std::sqrt(1 - p) * identity(8), std::sqrt(p) * swap}};
  Rng rng(7);
  const FidelityTrace tr = ns_fidelity_experiment(t.bs, t.half, std::vector<KrausMap>{map, map},
                                                  random_state(2, rng), StateVector::Unit(2, 0));
  EXPECT_FALSE(tr.noise_contained);
  EXPECT_EQ(tr.times.size(), 3u);
  EXPECT_LT(tr.min_fidelity(), 1.0 - 1e-3);
}

TEST(NsFidelity, TwoColumnTable) {
  const auto& t = three_qubit();
  const LindbladModel m{Operator::Zero(8, 8), {{collective_ops(3).sz, 1.0}}};
  const FidelityTrace tr = ns_fidelity_experiment(t.bs, t.half, m, StateVector::Unit(2, 0),
                                                  StateVector::Unit(2, 0), {1.0, 3, 10});
  const std::string table = tr.to_table();
  EXPECT_EQ(table.rfind("# time fidelity\n", 0), 0u);
  EXPECT_EQ(std::count(table.begin(), table.end(), '\n'), 4);
}

TEST(NsFidelity, DimensionErrors) {
  const auto& t = three_qubit();
  const LindbladModel m{Operator::Zero(8, 8), {}};
  EXPECT_THROW(ns_fidelity_experiment(t.bs, t.half, m, StateVector::Unit(3, 0), StateVector::Unit(2, 0)),
               DimensionError);
  EXPECT_THROW(ns_fidelity_experiment(t.bs, t.half, m, StateVector::Unit(2, 0), StateVector::Unit(4, 0)),
               DimensionError);
}

}  // namespace
}  // namespace nsalg
