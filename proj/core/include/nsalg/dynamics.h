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

// Markovian (Lindblad) and CP-map evolution, and the encode / evolve /
// decode experiment for a noiseless subsystem.

#ifndef NSALG_DYNAMICS_H_
#define NSALG_DYNAMICS_H_

#include <string>
#include <variant>
#include <vector>

#include "nsalg/types.h"
#include "nsalg/wedderburn.h"

namespace nsalg {

struct LindbladChannel {
  Operator op;
  double rate = 0.0;
};

//   drho/dt = -i[H, rho] + sum_mu rate_mu (L rho L^dagger - {L^dagger L, rho}/2)
struct LindbladModel {
  Operator hamiltonian;
  std::vector<LindbladChannel> channels;

  Index dim() const { return hamiltonian.rows(); }
  // H hermitian within 1e-12 (relative to max(1, ||H||)), rates >= 0 and
  // finite, all operators of one dimension.
  void validate() const;
};

// rho -> sum_i e_i rho e_i^dagger.
struct KrausMap {
  std::vector<Operator> operators;

  Index dim() const;
  // ||sum_i e_i^dagger e_i - I||_max.
  double completeness_error() const;
};

using DensityMatrix = Operator;

// Hermitian within 1e-10, unit trace within 1e-10, smallest eigenvalue at
// least -1e-10. Throws InvalidInput otherwise.
void validate_density(const DensityMatrix& rho);

Operator lindblad_rhs(const LindbladModel& model, const DensityMatrix& rho);

// Superoperator on column-major vec(rho): vec(A X B) = (B^T (x) A) vec(X).
Operator liouvillian(const LindbladModel& model);

// Fixed-step RK4 on the matrix form of the master equation; the state is
// re-hermitized after every step. Throws NumericalError if the smallest
// eigenvalue of the result drops below -1e-6 (step too coarse).
DensityMatrix lindblad_evolve(const LindbladModel& model, const DensityMatrix& rho0,
                              double t, int steps);

// Throws InvalidInput if the completeness error exceeds 1e-8.
DensityMatrix apply_kraus(const KrausMap& map, const DensityMatrix& rho);

// HS norm of the part of U^dagger rho U connecting different sectors.
double block_coherence(const DensityMatrix& rho, const BlockStructure& bs);

using Noise = std::variant<LindbladModel, std::vector<KrausMap>>;

struct Schedule {
  double t_final = 1.0;
  int samples = 2;              // time points, both ends included
  int steps_per_interval = 100; // RK4 steps between consecutive samples
};

struct FidelityTrace {
  int sector = 0;
  std::string noise_kind;  // "lindblad" or "kraus"
  // Lindblad: physical time. Kraus: number of maps applied so far.
  std::vector<double> times;
  std::vector<double> fidelity;  // <logical| rho_dec |logical>
  std::vector<double> leakage;   // 1 - tr(Q_J rho)
  std::vector<std::vector<double>> sector_weights;  // tr(Q_K rho), per time
  std::vector<double> coherence;  // block_coherence, per time
  // Largest deviation of a noise operator (H, L_mu or e_i) from the block
  // form of the algebra; the experiment still runs when this is large.
  double containment_residual = 0.0;
  bool noise_contained = false;

  double min_fidelity() const;
  // Two columns "time fidelity", one row per sample, with a '#' header.
  std::string to_table() const;
};

// Encodes |logical> (x) |gauge> into sector `sector` of bs, evolves it under
// the noise and decodes by restricting to the sector and tracing out the
// gauge factor. For a Kraus sequence the maps are applied in order and a
// sample is taken before the first map and after each one; the schedule
// is then ignored.
FidelityTrace ns_fidelity_experiment(const BlockStructure& bs, int sector,
                                     const Noise& noise, const StateVector& logical,
                                     const StateVector& gauge,
                                     const Schedule& schedule = {});

}  // namespace nsalg

#endif  // NSALG_DYNAMICS_H_
