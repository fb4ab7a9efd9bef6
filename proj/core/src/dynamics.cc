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

#include "nsalg/dynamics.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "nsalg/linalg.h"

namespace nsalg {
namespace {

constexpr double kDensityTol = 1e-10;
constexpr double kPositivityFloor = -1e-6;
constexpr double kCompletenessTol = 1e-8;
constexpr double kContainmentTol = 1e-8;

double min_eigenvalue(const Operator& rho) {
  Eigen::SelfAdjointEigenSolver<Operator> es(rho, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

void hermitize(Operator& rho) { rho = 0.5 * (rho + rho.adjoint()).eval(); }

// L^dagger L per channel, scaled by the rate.
struct Prepared {
  Operator h;
  std::vector<Operator> ops;
  std::vector<double> rates;
  Operator anti;  // sum rate L^dagger L / 2
};

Prepared prepare(const LindbladModel& m) {
  Prepared p;
  p.h = m.hamiltonian;
  p.anti = Operator::Zero(m.dim(), m.dim());
  for (const auto& c : m.channels) {
    p.ops.push_back(c.op);
    p.rates.push_back(c.rate);
    p.anti += 0.5 * c.rate * (c.op.adjoint() * c.op);
  }
  return p;
}

Operator rhs(const Prepared& p, const Operator& rho) {
  // -i (H rho - rho H) - (anti rho + rho anti) + sum rate L rho L^dagger
  const Complex mi(0, -1);
  Operator k = (mi * p.h - p.anti) * rho;
  Operator out = k + k.adjoint();  // rho and H, anti are hermitian
  for (std::size_t c = 0; c < p.ops.size(); ++c) {
    out.noalias() += p.rates[c] * (p.ops[c] * rho * p.ops[c].adjoint());
  }
  return out;
}

void rk4(const Prepared& p, Operator& rho, double dt, int steps) {
  for (int s = 0; s < steps; ++s) {
    const Operator k1 = rhs(p, rho);
    const Operator k2 = rhs(p, rho + 0.5 * dt * k1);
    const Operator k3 = rhs(p, rho + 0.5 * dt * k2);
    const Operator k4 = rhs(p, rho + dt * k3);
    rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    hermitize(rho);
  }
}

void check_positive(const Operator& rho, const char* what) {
  const double lo = min_eigenvalue(rho);
  if (lo < kPositivityFloor) {
    std::ostringstream msg;
    msg << what << ": state lost positivity (min eigenvalue " << lo
        << "); use more steps";
    throw NumericalError(msg.str());
  }
}

}  // namespace

void LindbladModel::validate() const {
  const Index d = hamiltonian.rows();
  if (d == 0 || hamiltonian.cols() != d) throw DimensionError("lindblad: hamiltonian must be square");
  if (!hamiltonian.allFinite()) throw InvalidInput("lindblad: hamiltonian has non-finite entries");
  if ((hamiltonian - hamiltonian.adjoint()).norm() > 1e-12 * std::max(1.0, hamiltonian.norm())) {
    throw InvalidInput("lindblad: hamiltonian is not hermitian");
  }
  for (std::size_t c = 0; c < channels.size(); ++c) {
    require_dim(channels[c].op, d, "lindblad channel");
    if (!channels[c].op.allFinite()) {
      throw InvalidInput("lindblad: channel " + std::to_string(c) + " has non-finite entries");
    }
    if (!(channels[c].rate >= 0.0) || !std::isfinite(channels[c].rate)) {
      throw InvalidInput("lindblad: channel " + std::to_string(c) + " has a negative rate");
    }
  }
}

Index KrausMap::dim() const {
  if (operators.empty()) throw InvalidInput("kraus: map has no operators");
  return common_dim(operators, "kraus");
}

double KrausMap::completeness_error() const {
  const Index d = dim();
  Operator acc = Operator::Zero(d, d);
  for (const auto& e : operators) acc.noalias() += e.adjoint() * e;
  return (acc - identity(d)).cwiseAbs().maxCoeff();
}

void validate_density(const DensityMatrix& rho) {
  if (rho.rows() == 0 || rho.rows() != rho.cols()) throw DimensionError("density matrix must be square");
  if (!rho.allFinite()) throw InvalidInput("density matrix has non-finite entries");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kDensityTol) {
    throw InvalidInput("density matrix is not hermitian");
  }
  if (std::abs(rho.trace() - Complex(1.0)) > kDensityTol) {
    throw InvalidInput("density matrix does not have unit trace");
  }
  if (min_eigenvalue(0.5 * (rho + rho.adjoint())) < -kDensityTol) {
    throw InvalidInput("density matrix is not positive semidefinite");
  }
}

Operator lindblad_rhs(const LindbladModel& model, const DensityMatrix& rho) {
  model.validate();
  require_dim(rho, model.dim(), "lindblad_rhs");
  return rhs(prepare(model), rho);
}

Operator liouvillian(const LindbladModel& model) {
  model.validate();
  const Index d = model.dim();
  const Operator id = identity(d);
  const Complex mi(0, -1);
  Operator l = mi * (kron(id, model.hamiltonian) - kron(model.hamiltonian.transpose(), id));
  for (const auto& c : model.channels) {
    const Operator ldl = c.op.adjoint() * c.op;
    l += c.rate * (kron(c.op.conjugate(), c.op) - 0.5 * kron(id, ldl) -
                   0.5 * kron(ldl.transpose(), id));
  }
  return l;
}

DensityMatrix lindblad_evolve(const LindbladModel& model, const DensityMatrix& rho0,
                              double t, int steps) {
  model.validate();
  require_dim(rho0, model.dim(), "lindblad_evolve");
  if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidInput("lindblad_evolve: t must be >= 0");
  if (steps < 1) throw InvalidInput("lindblad_evolve: steps must be >= 1");
  Operator rho = rho0;
  rk4(prepare(model), rho, t / steps, steps);
  check_positive(rho, "lindblad_evolve");
  return rho;
}

DensityMatrix apply_kraus(const KrausMap& map, const DensityMatrix& rho) {
  const Index d = map.dim();
  require_dim(rho, d, "apply_kraus");
  const double err = map.completeness_error();
  if (err > kCompletenessTol) {
    std::ostringstream msg;
    msg << "apply_kraus: sum e^dagger e deviates from I by " << err;
    throw InvalidInput(msg.str());
  }
  Operator out = Operator::Zero(d, d);
  for (const auto& e : map.operators) out.noalias() += e * rho * e.adjoint();
  return out;
}

double block_coherence(const DensityMatrix& rho, const BlockStructure& bs) {
  const Operator z = to_block_basis(rho, bs);
  double total = 0.0;
  for (const auto& a : bs.sectors) {
    for (const auto& b : bs.sectors) {
      if (a.label != b.label) total += z.block(a.offset, b.offset, a.size(), b.size()).squaredNorm();
    }
  }
  return std::sqrt(total);
}

double FidelityTrace::min_fidelity() const {
  return fidelity.empty() ? 0.0 : *std::min_element(fidelity.begin(), fidelity.end());
}

std::string FidelityTrace::to_table() const {
  std::ostringstream out;
  out << "# time fidelity\n" << std::setprecision(12);
  for (std::size_t k = 0; k < times.size(); ++k) {
    out << times[k] << ' ' << fidelity[k] << '\n';
  }
  return out.str();
}

FidelityTrace ns_fidelity_experiment(const BlockStructure& bs, int sector,
                                     const Noise& noise, const StateVector& logical,
                                     const StateVector& gauge, const Schedule& schedule) {
  const Sector& s = bs.sector(sector);
  if (logical.size() != s.multiplicity) {
    throw DimensionError("ns_fidelity_experiment: logical state has dimension " +
                         std::to_string(logical.size()) + ", sector has n = " +
                         std::to_string(s.multiplicity));
  }
  if (gauge.size() != s.irrep_dim) {
    throw DimensionError("ns_fidelity_experiment: gauge state has dimension " +
                         std::to_string(gauge.size()) + ", sector has d = " +
                         std::to_string(s.irrep_dim));
  }
  const double ln = logical.norm();
  const double gn = gauge.norm();
  if (ln == 0.0 || gn == 0.0) throw InvalidInput("ns_fidelity_experiment: zero state");
  const StateVector ell = logical / ln;
  const StateVector psi = encode_state(bs, sector, ell, gauge / gn);
  Operator rho = psi * psi.adjoint();

  FidelityTrace trace;
  trace.sector = sector;
  const Eigen::MatrixXcd v = bs.sector_basis(sector);
  std::vector<Eigen::MatrixXcd> all_bases;
  for (const auto& sec : bs.sectors) all_bases.push_back(bs.sector_basis(sec.label));

  auto record = [&](double time) {
    const Operator restricted = v.adjoint() * rho * v;
    const Operator dec = partial_trace_second(restricted, s.multiplicity, s.irrep_dim);
    trace.times.push_back(time);
    trace.fidelity.push_back((ell.adjoint() * dec * ell)(0, 0).real());
    std::vector<double> weights;
    double own = 0.0;
    for (std::size_t k = 0; k < all_bases.size(); ++k) {
      const double w = (all_bases[k].adjoint() * rho * all_bases[k]).trace().real();
      weights.push_back(w);
      if (bs.sectors[k].label == sector) own = w;
    }
    trace.leakage.push_back(1.0 - own);
    trace.sector_weights.push_back(std::move(weights));
    trace.coherence.push_back(block_coherence(rho, bs));
  };

  if (const auto* model = std::get_if<LindbladModel>(&noise)) {
    model->validate();
    require_dim(model->hamiltonian, bs.dim, "ns_fidelity_experiment");
    trace.noise_kind = "lindblad";
    trace.containment_residual = algebra_form_residual(model->hamiltonian, bs);
    for (const auto& c : model->channels) {
      trace.containment_residual =
          std::max(trace.containment_residual, algebra_form_residual(c.op, bs));
    }
    if (schedule.samples < 1) throw InvalidInput("ns_fidelity_experiment: samples must be >= 1");
    if (schedule.steps_per_interval < 1) {
      throw InvalidInput("ns_fidelity_experiment: steps per interval must be >= 1");
    }
    if (!(schedule.t_final >= 0.0)) throw InvalidInput("ns_fidelity_experiment: t must be >= 0");
    const Prepared p = prepare(*model);
    if (schedule.samples == 1) {
      rk4(p, rho, schedule.t_final / schedule.steps_per_interval, schedule.steps_per_interval);
      check_positive(rho, "ns_fidelity_experiment");
      record(schedule.t_final);
    } else {
      const double interval = schedule.t_final / (schedule.samples - 1);
      const double dt = interval / schedule.steps_per_interval;
      record(0.0);
      for (int k = 1; k < schedule.samples; ++k) {
        rk4(p, rho, dt, schedule.steps_per_interval);
        check_positive(rho, "ns_fidelity_experiment");
        record(k * interval);
      }
    }
  } else {
    const auto& maps = std::get<std::vector<KrausMap>>(noise);
    trace.noise_kind = "kraus";
    for (const auto& m : maps) {
      if (m.dim() != bs.dim) throw DimensionError("ns_fidelity_experiment: Kraus map dimension");
      for (const auto& e : m.operators) {
        trace.containment_residual =
            std::max(trace.containment_residual, algebra_form_residual(e, bs));
      }
    }
    record(0.0);
    for (std::size_t k = 0; k < maps.size(); ++k) {
      rho = apply_kraus(maps[k], rho);
      hermitize(rho);
      record(static_cast<double>(k + 1));
    }
  }
  trace.noise_contained = trace.containment_residual <= kContainmentTol;
  return trace;
}

}  // namespace nsalg
