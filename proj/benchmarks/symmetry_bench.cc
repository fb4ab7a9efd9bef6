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

#include <vector>

#include "nsalg/collective.h"
#include "nsalg/random.h"
#include "nsalg/symmetry.h"

namespace {

nsalg::GroupRep symmetric_group(int n) {
  std::vector<nsalg::Operator> gens;
  for (int q = 1; q < n; ++q) {
    const std::string cycle = "(" + std::to_string(q) + " " + std::to_string(q + 1) + ")";
    gens.push_back(nsalg::perm_rep(n, nsalg::Permutation::parse(cycle, n)));
  }
  return nsalg::close_group(gens);
}

// Twirl over the natural representation of S_N.
void BM_TwirlSymmetric(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const nsalg::GroupRep group = symmetric_group(n);
  nsalg::Rng rng(1);
  const nsalg::Operator x = nsalg::random_ginibre(group.dim(), group.dim(), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nsalg::twirl(x, group).data());
  }
  state.counters["order"] = static_cast<double>(group.order());
}
BENCHMARK(BM_TwirlSymmetric)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

}  // namespace
