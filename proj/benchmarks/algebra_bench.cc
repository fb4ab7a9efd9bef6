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

#include <benchmark/benchmark.h>

#include "nsalg/algebra.h"
#include "nsalg/collective.h"
#include "nsalg/wedderburn.h"

namespace {

// Algebra generated by the collective spin of N qubits.
void BM_GenerateCollectiveAlgebra(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ops = nsalg::collective_ops(n).ops();
  for (auto _ : state) {
    benchmark::DoNotOptimize(nsalg::generate_algebra(ops).dimension());
  }
}
BENCHMARK(BM_GenerateCollectiveAlgebra)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_DecomposeCollectiveAlgebra(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto alg = nsalg::generate_algebra(nsalg::collective_ops(n).ops());
  for (auto _ : state) {
    benchmark::DoNotOptimize(nsalg::decompose(alg, 1).sectors.size());
  }
}
BENCHMARK(BM_DecomposeCollectiveAlgebra)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_Commutant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ops = nsalg::collective_ops(n).ops();
  for (auto _ : state) {
    benchmark::DoNotOptimize(nsalg::commutant(ops).dimension());
  }
}
BENCHMARK(BM_Commutant)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_SchurWeylStructured(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nsalg::schur_weyl_decompose(n).structure.sectors.size());
  }
}
BENCHMARK(BM_SchurWeylStructured)->DenseRange(3, 9, 2)->Unit(benchmark::kMillisecond);

}  // namespace
