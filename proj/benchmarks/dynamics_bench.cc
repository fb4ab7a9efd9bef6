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

#include "nsalg/collective.h"
#include "nsalg/dynamics.h"
#include "nsalg/random.h"

namespace {

// Collective dephasing of N qubits from a random pure state.
void BM_LindbladEvolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto sys = nsalg::collective_ops(n);
  const nsalg::Index dim = sys.sz.rows();
  const nsalg::LindbladModel model{nsalg::Operator::Zero(dim, dim), {{sys.sz, 1.0}}};
  nsalg::Rng rng(3);
  const nsalg::StateVector psi = nsalg::random_state(dim, rng);
  const nsalg::DensityMatrix rho = psi * psi.adjoint();
  for (auto _ : state) {
    benchmark::DoNotOptimize(nsalg::lindblad_evolve(model, rho, 1.0, 100).data());
  }
}
BENCHMARK(BM_LindbladEvolve)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

}  // namespace
