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

#include <algorithm>

#include <gtest/gtest.h>

#include "nsalg/algebra.h"
#include "nsalg/codes.h"
#include "nsalg/collective.h"
#include "nsalg/linalg.h"
#include "nsalg/pauli.h"
#include "nsalg/random.h"
#include "nsalg/wedderburn.h"
#include "testing/oracles.h"

namespace nsalg {
namespace {

struct A3 {
  OperatorAlgebra alg;
  BlockStructure bs;
  int half = 0;  // label of the n = 2 sector
  int three_halves = 0;
};

const A3& a3() {
  static const A3 value = [] {
    A3 v;
    v.alg = generate_algebra(collective_ops(3).ops());
    v.bs = decompose(v.alg, 7);
    for (const auto& s : v.bs.sectors) {
      if (s.irrep_dim == 2) v.half = s.label;
      if (s.irrep_dim == 4) v.three_halves = s.label;
    }
    return v;
  }();
  return value;
}

// Direct evaluation of the Knill-Laflamme matrix elements.
double brute_kl_violation(const Eigen::MatrixXcd& basis, const std::vector<Operator>& errors) {
  double worst = 0.0;
  for (const auto& ei : errors) {
    for (const auto& ej : errors) {
      const Eigen::MatrixXcd m = basis.adjoint() * ei.adjoint() * ej * basis;
      for (Index a = 0; a < m.rows(); ++a) {
        for (Index b = 0; b < m.cols(); ++b) {
          worst = std::max(worst, a == b ? std::abs(m(a, a) - m(0, 0)) : std::abs(m(a, b)));
        }
      }
    }
  }
  return worst;
}

TEST(ExtractCode, MultiplicityCodeOfTheSpinHalfSector) {
  const CodeSubspace c = extract_code(a3().bs, a3().half, 0, CodeRole::kMultiplicity);
  EXPECT_EQ(c.size(), 2);
  EXPECT_EQ(c.dim, 8);
  EXPECT_LT((c.basis.adjoint() * c.basis - Operator::Identity(2, 2)).norm(), 1e-10);
  const Operator q = a3().bs.sector_projector(a3().half);
  EXPECT_LT((q * c.basis - c.basis).norm(), 1e-8);
}

TEST(ExtractCode, GaugeCodes) {
  EXPECT_EQ(extract_code(a3().bs, a3().half, 0, CodeRole::kGauge).size(), 2);
  EXPECT_EQ(extract_code(a3().bs, a3().three_halves, 0, CodeRole::kGauge).size(), 4);
}

TEST(ExtractCode, OutOfRangeThrows) {
  EXPECT_THROW(extract_code(a3().bs, a3().half, 2, CodeRole::kMultiplicity), InvalidInput);
  EXPECT_THROW(extract_code(a3().bs, 9, 0, CodeRole::kMultiplicity), InvalidInput);
}

TEST(KlCheck, SpinHalfCodeAgainstCollectiveOperators) {
  const CodeSubspace c = extract_code(a3().bs, a3().half, 0, CodeRole::kMultiplicity);
  auto errors = collective_ops(3).ops();
  errors.insert(errors.begin(), identity(8));
  const KLReport r = kl_check(c, errors);
  EXPECT_TRUE(r.passed);
  EXPECT_LT(brute_kl_violation(c.basis, errors), 1e-8);
}

TEST(KlCheck, SwapIsLambdaMixing) {
  const CodeSubspace c = extract_code(a3().bs, a3().half, 0, CodeRole::kMultiplicity);
  const KLReport r = kl_check(c, {identity(8), testing::permutation_matrix({1, 0, 2})});
  EXPECT_FALSE(r.passed);
  EXPECT_GT(brute_kl_violation(c.basis, {identity(8), testing::permutation_matrix({1, 0, 2})}),
            1e-3);
}

TEST(KlCheck, NoiselessCodeIsDegenerate) {
  // A one-dimensional-gauge (d = 1) sector is a noiseless code; errors from
  // the algebra act as scalars there, so c_ij = c_i c_j has rank 1.
  testing::Rng rng(4);
  const auto planted = testing::planted_algebra({{3, 1}, {1, 2}}, rng);
  const OperatorAlgebra alg = generate_algebra(planted.generators);
  const BlockStructure bs = decompose(alg, 2);
  int label = -1;
  for (const auto& s : bs.sectors) {
    if (s.irrep_dim == 1) label = s.label;
  }
  ASSERT_GE(label, 0);
  const CodeSubspace c = extract_code(bs, label, 0, CodeRole::kMultiplicity);
  Rng r2(9);
  std::vector<Operator> errors;
  for (int k = 0; k < 4; ++k) errors.push_back(random_element(alg, r2));
  const KLReport r = kl_check(c, errors);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.c_rank, 1);
  EXPECT_TRUE(r.degenerate);
}

TEST(KlCheck, RejectsEmptyAndMismatchedErrors) {
  const CodeSubspace c = extract_code(a3().bs, a3().half, 0, CodeRole::kMultiplicity);
  EXPECT_THROW(kl_check(c, {}), InvalidInput);
  EXPECT_THROW(kl_check(c, {identity(4)}), DimensionError);
}

TEST(KlCheck, MonotoneUnderSubsets) {
  const CodeSubspace c = extract_code(a3().bs, a3().half, 1, CodeRole::kMultiplicity);
  Rng rng(21);
  std::vector<Operator> errors;
  for (int k = 0; k < 8; ++k) errors.push_back(random_element(a3().alg, rng));
  ASSERT_TRUE(kl_check(c, errors).passed);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Operator> subset;
    for (const auto& e : errors) {
      if (coin(rng)) subset.push_back(e);
    }
    if (subset.empty()) subset.push_back(errors.front());
    EXPECT_TRUE(kl_check(c, subset).passed);
  }
}

// Every multiplicity-side code corrects sampled algebra errors; every
// gauge-side code corrects sampled commutant errors.
class CorrectabilityProperty : public ::testing::TestWithParam<int> {};

TEST_P(CorrectabilityProperty, HoldsOnPlantedStructures) {
  testing::Rng rng(300 + GetParam());
  const auto planted = testing::planted_algebra(testing::random_sector_list(10, rng), rng);
  const OperatorAlgebra alg = generate_algebra(planted.generators);
  const OperatorAlgebra comm = commutant(alg);
  const BlockStructure bs = decompose(alg, 1);
  Rng draw(GetParam());
  std::vector<Operator> alg_errors, comm_errors;
  for (int k = 0; k < 5; ++k) {
    alg_errors.push_back(random_element(alg, draw));
    comm_errors.push_back(random_element(comm, draw));
  }
  for (const auto& s : bs.sectors) {
    for (Index mu = 0; mu < s.irrep_dim; ++mu) {
      const KLReport r = kl_check(extract_code(bs, s.label, mu, CodeRole::kMultiplicity), alg_errors);
      EXPECT_TRUE(r.passed) << "sector " << s.label << " mu " << mu;
      EXPECT_LT(std::max(r.off_diagonal_violation, r.diagonal_violation), 1e-8);
    }
    for (Index lambda = 0; lambda < s.multiplicity; ++lambda) {
      EXPECT_TRUE(kl_check(extract_code(bs, s.label, lambda, CodeRole::kGauge), comm_errors).passed)
          << "sector " << s.label << " lambda " << lambda;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, CorrectabilityProperty, ::testing::Range(0, 6));

TEST(PauliString, ParsePrintRoundTrip) {
  for (const char* text : {"XZI", "-iXZI", "iY", "-ZZ", "IIII", "+XYZ"}) {
    const PauliString p = PauliString::parse(text);
    EXPECT_EQ(PauliString::parse(p.str()), p) << text;
  }
  EXPECT_EQ(PauliString::parse("-iXZI").str(), "-iXZI");
  EXPECT_THROW(PauliString::parse("XQ"), InvalidInput);
}

TEST(PauliString, OperatorMatchesKroneckerProduct) {
  const Operator zzi = PauliString::parse("ZZI").to_operator();
  EXPECT_EQ(zzi.rows(), 8);
  EXPECT_LT((zzi - kron(kron(pauli_z(), pauli_z()), identity(2))).norm(), 1e-15);
  const Operator y = PauliString::parse("Y").to_operator();
  EXPECT_LT((y - pauli_y()).norm(), 1e-15);
}

TEST(PauliString, ProductAndCommutationFromBits) {
  const char* letters[] = {"I", "X", "Y", "Z"};
  for (const char* a : letters) {
    for (const char* b : letters) {
      for (const char* c : letters) {
        for (const char* d : letters) {
          const PauliString p = PauliString::parse(std::string(a) + b);
          const PauliString q = PauliString::parse(std::string(c) + d);
          const Operator pq = p.to_operator() * q.to_operator();
          EXPECT_LT(((p * q).to_operator() - pq).norm(), 1e-14);
          const bool commute = (pq - q.to_operator() * p.to_operator()).norm() < 1e-12;
          EXPECT_EQ(p.commutes_with(q), commute);
        }
      }
    }
  }
}

TEST(StabilizerDecompose, ParityCode) {
  const BlockStructure bs = stabilizer_decompose({PauliString::parse("ZZ")}, 2);
  ASSERT_EQ(bs.sectors.size(), 2u);
  for (const auto& s : bs.sectors) EXPECT_EQ(s.size(), 2);
}

TEST(StabilizerDecompose, BitFlipCode) {
  const std::vector<PauliString> gens = {PauliString::parse("ZZI"), PauliString::parse("IZZ")};
  const BlockStructure bs = stabilizer_decompose(gens, 3);
  ASSERT_EQ(bs.sectors.size(), 4u);
  Index total = 0;
  for (const auto& s : bs.sectors) {
    EXPECT_EQ(s.multiplicity, 2);
    EXPECT_EQ(s.irrep_dim, 1);
    total += s.size();
  }
  EXPECT_EQ(total, 8);
  // Generators are diagonal +-1 in the block basis, with the syndrome
  // bits of the label (first generator = most significant, set = -1).
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const Operator y = to_block_basis(gens[g].to_operator(), bs);
    for (const auto& s : bs.sectors) {
      const int bit = (s.label >> (gens.size() - 1 - g)) & 1;
      for (Index k = 0; k < s.size(); ++k) {
        EXPECT_NEAR(y(s.offset + k, s.offset + k).real(), bit ? -1.0 : 1.0, 1e-12);
      }
    }
    Operator off = y;
    off.diagonal().setZero();
    EXPECT_LT(off.norm(), 1e-12);
  }
}

TEST(StabilizerDecompose, EmptyGroupIsOneSector) {
  const BlockStructure bs = stabilizer_decompose({}, 3);
  ASSERT_EQ(bs.sectors.size(), 1u);
  EXPECT_EQ(bs.sectors[0].size(), 8);
}

TEST(StabilizerDecompose, RejectsInvalidGenerators) {
  EXPECT_THROW(stabilizer_decompose({PauliString::parse("XI"), PauliString::parse("ZI")}, 2),
               InvalidInput);
  EXPECT_THROW(stabilizer_decompose({PauliString::parse("ZZ"), PauliString::parse("ZZ")}, 2),
               InvalidInput);
  EXPECT_THROW(stabilizer_decompose({PauliString::parse("-II")}, 2), InvalidInput);
}

TEST(StabilizerDecompose, AgreesWithDensePipeline) {
  const std::vector<std::vector<std::string>> cases = {
      {"ZZ"}, {"ZZI", "IZZ"}, {"XXXX", "ZZZZ"}, {"ZZIII", "IZZII", "IIIXX"}, {"XZZXI", "IXZZX"}};
  for (const auto& texts : cases) {
    std::vector<PauliString> gens;
    std::vector<Operator> ops;
    for (const auto& t : texts) {
      gens.push_back(PauliString::parse(t));
      ops.push_back(gens.back().to_operator());
    }
    const int nq = gens.front().num_qubits();
    const BlockStructure stab = stabilizer_decompose(gens, nq);
    const BlockStructure dense = decompose(generate_algebra(ops), 1);
    std::vector<Index> a, b;
    for (const auto& s : stab.sectors) a.push_back(s.size());
    for (const auto& s : dense.sectors) b.push_back(s.size());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b) << texts.front();
  }
}

TEST(ClassifyErrorPair, Examples) {
  const std::vector<PauliString> gens = {PauliString::parse("ZZI"), PauliString::parse("IZZ")};
  EXPECT_EQ(classify_error_pair(PauliString::parse("XII"), PauliString::parse("XII"), gens).kind,
            ErrorClass::kInGroup);
  const auto a = classify_error_pair(PauliString::parse("III"), PauliString::parse("XII"), gens);
  EXPECT_EQ(a.kind, ErrorClass::kAnticommutes);
  ASSERT_TRUE(a.anticommuting_generator.has_value());
  EXPECT_EQ(*a.anticommuting_generator, 0);
  const auto b = classify_error_pair(PauliString::parse("XII"), PauliString::parse("IXI"), gens);
  EXPECT_EQ(b.kind, ErrorClass::kAnticommutes);
  ASSERT_TRUE(b.anticommuting_generator.has_value());
  EXPECT_EQ(*b.anticommuting_generator, 1);
  // Z1 commutes with both generators and is not in the group.
  EXPECT_EQ(classify_error_pair(PauliString::parse("III"), PauliString::parse("ZII"), gens).kind,
            ErrorClass::kUndetectable);
  // Z1 Z2 is a generator.
  const auto c = classify_error_pair(PauliString::parse("ZII"), PauliString::parse("IZI"), gens);
  EXPECT_EQ(c.kind, ErrorClass::kInGroup);
  EXPECT_EQ(c.generators_used, std::vector<int>{0});
}

TEST(ClassifyErrorPair, SelfPairIsAlwaysInGroup) {
  const std::vector<PauliString> gens = {PauliString::parse("ZZI"), PauliString::parse("IZZ")};
  const char* letters = "IXYZ";
  for (int code = 0; code < 64; ++code) {
    std::string s;
    for (int q = 0; q < 3; ++q) s += letters[(code >> (2 * q)) & 3];
    const PauliString e = PauliString::parse(s);
    EXPECT_EQ(classify_error_pair(e, e, gens).kind, ErrorClass::kInGroup) << s;
  }
}

TEST(ClassifyErrorPair, PhaseMatchesOperatorProduct) {
  const std::vector<PauliString> gens = {PauliString::parse("XXXX"), PauliString::parse("ZZZZ")};
  const auto c = classify_error_pair(PauliString::parse("XYII"), PauliString::parse("IZXX"), gens);
  ASSERT_EQ(c.kind, ErrorClass::kInGroup);
  Operator prod = identity(16);
  for (int g : c.generators_used) prod = prod * gens[static_cast<std::size_t>(g)].to_operator();
  const Operator expected = PauliString::parse("XYII").to_operator().adjoint() *
                            PauliString::parse("IZXX").to_operator();
  EXPECT_LT((c.phase * prod - expected).norm(), 1e-12);
}

}  // namespace
}  // namespace nsalg
