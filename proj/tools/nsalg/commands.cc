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

#include "commands.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "nsalg/algebra.h"
#include "nsalg/codes.h"
#include "nsalg/collective.h"
#include "nsalg/dynamics.h"
#include "nsalg/linalg.h"
#include "nsalg/pauli.h"
#include "nsalg/random.h"
#include "nsalg/symmetry.h"
#include "nsalg/wedderburn.h"
#include "operator_file.h"

namespace nsalg::cli {
namespace {

// Fidelity below 1 - this marks a simulation as analysis-negative.
constexpr double kFidelityFloor = 1e-6;

std::string require(const std::string& value, const char* flag) {
  if (value.empty()) throw InvalidInput(std::string("missing required flag ") + flag);
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// Generators of the interaction algebra: entries tagged generator, or all
// entries when none are.
std::vector<Operator> algebra_generators(const OperatorFile& file) {
  if (file.has(OperatorKind::kGenerator)) return file.of_kind(OperatorKind::kGenerator);
  return file.all();
}

// Sector by label ("1"), by tag ("J=1/2"), or the largest multiplicity
// when empty (first such label on ties).
int resolve_sector(const BlockStructure& bs, const std::string& text) {
  if (text.empty()) {
    int best = 0;
    for (const auto& s : bs.sectors) {
      if (s.multiplicity > bs.sectors[best].multiplicity) best = s.label;
    }
    return best;
  }
  for (const auto& s : bs.sectors) {
    if (!s.tag.empty() && s.tag == text) return s.label;
  }
  std::size_t used = 0;
  int label = -1;
  try {
    label = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || label < 0 || label >= static_cast<int>(bs.sectors.size())) {
    throw InvalidInput("no sector '" + text + "' (use a label 0.." +
                       std::to_string(bs.sectors.size() - 1) + " or a sector tag)");
  }
  return label;
}

Json ns_json(const BlockStructure& bs) {
  Json arr = Json::array();
  for (const auto& ns : noiseless_subsystems(bs)) {
    arr.push_back({{"label", ns.label}, {"ns_dim", ns.ns_dim}, {"gauge_dim", ns.gauge_dim}});
  }
  return arr;
}

std::string fmt(double x, int precision = 3) {
  std::ostringstream out;
  out << std::setprecision(precision) << std::scientific << x;
  return out.str();
}

std::string verification_text(const VerificationReport& v) {
  std::ostringstream out;
  out << "verification: " << (v.passed ? "passed" : "FAILED") << "  sum n*d = " << v.sum_nd << " / "
      << v.ambient_dim << "  sum d^2 = " << v.sum_d2 << " / " << v.algebra_dim
      << "  sum n^2 = " << v.sum_n2 << " / " << v.commutant_dim << "\n  residuals: algebra "
      << fmt(v.algebra_form_residual) << "  commutant " << fmt(v.commutant_form_residual)
      << "  unitarity " << fmt(v.unitarity_residual) << '\n';
  return out.str();
}

std::string kl_text(const KLReport& r) {
  std::ostringstream out;
  out << "Knill-Laflamme: " << (r.passed ? "passed" : "FAILED") << "  errors = " << r.error_count
      << "  rank(c) = " << r.c_rank << "  degenerate = " << (r.degenerate ? "yes" : "no") << '\n'
      << "  off-diagonal violation " << fmt(r.off_diagonal_violation) << "  diagonal violation "
      << fmt(r.diagonal_violation) << '\n';
  if (r.c.rows() > 0 && r.c.rows() <= 16) {
    out << "c_ij:\n";
    for (Index i = 0; i < r.c.rows(); ++i) {
      out << "  ";
      for (Index j = 0; j < r.c.cols(); ++j) {
        std::ostringstream cell;
        cell << std::fixed << std::setprecision(4) << r.c(i, j).real()
             << (r.c(i, j).imag() < 0 ? '-' : '+') << std::abs(r.c(i, j).imag()) << 'i';
        out << std::setw(18) << cell.str();
      }
      out << '\n';
    }
  }
  return out.str();
}

// --- commands ------------------------------------------------------------

Outcome cmd_decompose(const Options& o, std::uint64_t seed, double tol) {
  Outcome out;
  out.inputs = {{"in", require(o.in, "--in")}, {"verify", o.verify}};
  const OperatorFile file = read_operator_file(o.in);
  const OperatorAlgebra alg = generate_algebra(algebra_generators(file));
  const BlockStructure bs = decompose(alg, seed, tol);
  out.result["algebra_dim"] = alg.dimension();
  out.result["structure"] = bs;
  out.result["noiseless_subsystems"] = ns_json(bs);
  std::ostringstream text;
  text << "dim H = " << bs.dim << "  dim A = " << alg.dimension() << "  sectors = " << bs.sectors.size()
       << '\n'
       << sector_table(bs);
  if (o.verify) {
    const VerificationReport v = verify_structure(alg, bs, tol);
    out.result["verification"] = v;
    out.negative = !v.passed;
    text << verification_text(v);
  }
  out.summary = text.str();
  return out;
}

Outcome cmd_commutant(const Options& o, std::uint64_t, double tol) {
  Outcome out;
  out.inputs = {{"in", require(o.in, "--in")}, {"basis", o.basis}};
  const OperatorFile file = read_operator_file(o.in);
  const auto gens = algebra_generators(file);
  const OperatorAlgebra alg = generate_algebra(gens);
  const OperatorAlgebra comm = commutant(gens);
  const OperatorAlgebra ctr = center(alg);
  const OperatorAlgebra bicomm = commutant(comm);
  const bool double_ok = same_subspace(bicomm, alg, tol);
  out.result["dim"] = file.dim;
  out.result["algebra_dim"] = alg.dimension();
  out.result["commutant_dim"] = comm.dimension();
  out.result["center_dim"] = ctr.dimension();
  out.result["double_commutant_holds"] = double_ok;
  if (o.basis) {
    Json arr = Json::array();
    for (const auto& b : comm.basis()) arr.push_back(matrix_to_json(b));
    out.result["commutant_basis"] = arr;
  }
  out.negative = !double_ok;
  std::ostringstream text;
  text << "dim H = " << file.dim << "  dim A = " << alg.dimension() << "  dim A' = " << comm.dimension()
       << "  dim Z(A) = " << ctr.dimension() << "\nA'' = A: " << (double_ok ? "yes" : "NO") << '\n';
  out.summary = text.str();
  return out;
}

Outcome cmd_codes(const Options& o, std::uint64_t seed, double tol) {
  Outcome out;
  out.inputs = {{"in", require(o.in, "--in")}, {"sector", o.sector}, {"fixed", o.fixed},
                {"role", o.role}};
  const OperatorFile file = read_operator_file(o.in);
  const OperatorAlgebra alg = generate_algebra(algebra_generators(file));
  const BlockStructure bs = decompose(alg, seed, tol);
  const int label = resolve_sector(bs, o.sector);
  const CodeRole role = code_role_from_string(o.role);
  const CodeSubspace code = extract_code(bs, label, o.fixed, role);
  // A multiplicity code protects against the algebra, a gauge code against
  // its commutant.
  const std::vector<Operator> errors =
      role == CodeRole::kMultiplicity ? alg.basis() : commutant(alg).basis();
  const KLReport kl = kl_check(code, errors, tol);
  out.result["structure"] = bs;
  out.result["noiseless_subsystems"] = ns_json(bs);
  out.result["code"] = code;
  out.result["kl"] = kl;
  out.negative = !kl.passed;
  if (!o.code_out.empty()) write_file(o.code_out, Json(code).dump(2) + "\n");
  std::ostringstream text;
  text << sector_table(bs) << "code: sector " << label << ", role " << to_string(role)
       << ", fixed index " << o.fixed << ", size " << code.size() << '\n'
       << "checked against " << (role == CodeRole::kMultiplicity ? "A" : "A'") << " ("
       << errors.size() << " basis elements)\n"
       << kl_text(kl);
  out.summary = text.str();
  return out;
}

Outcome cmd_kl_check(const Options& o, std::uint64_t, double tol) {
  Outcome out;
  out.inputs = {{"code", require(o.code, "--code")}, {"errors", require(o.errors, "--errors")}};
  const CodeSubspace code = read_code_file(o.code);
  const OperatorFile errs = read_operator_file(o.errors);
  const KLReport kl = kl_check(code, errs.all(), tol);
  out.result["kl"] = kl;
  Json names = Json::array();
  for (const auto& e : errs.operators) names.push_back(e.name);
  out.result["error_names"] = names;
  out.negative = !kl.passed;
  out.summary = kl_text(kl);
  return out;
}

Outcome cmd_stabilizer(const Options& o, std::uint64_t seed, double tol) {
  Outcome out;
  out.inputs = {{"generators", require(o.generators, "--generators")},
                {"pauli_errors", o.pauli_errors}, {"dense", o.dense}};
  std::vector<PauliString> gens;
  for (const auto& g : split(o.generators, ',')) gens.push_back(PauliString::parse(g));
  if (gens.empty()) throw InvalidInput("--generators is empty");
  const int nq = gens.front().num_qubits();
  const BlockStructure bs = stabilizer_decompose(gens, nq);
  out.result["structure"] = bs;
  std::ostringstream text;
  text << sector_table(bs);

  bool negative = false;
  const auto errors = split(o.pauli_errors, ',');
  if (!errors.empty()) {
    std::vector<PauliString> es;
    for (const auto& e : errors) es.push_back(PauliString::parse(e));
    Json pairs = Json::array();
    text << "error pairs:\n";
    for (std::size_t i = 0; i < es.size(); ++i) {
      for (std::size_t j = 0; j < es.size(); ++j) {
        const auto c = classify_error_pair(es[i], es[j], gens);
        Json pj = c;
        pj["i"] = es[i].str();
        pj["j"] = es[j].str();
        pairs.push_back(pj);
        negative = negative || c.kind == ErrorClass::kUndetectable;
        text << "  " << std::left << std::setw(nq + 3) << es[i].str() << std::setw(nq + 3)
             << es[j].str() << to_string(c.kind) << '\n';
      }
    }
    out.result["pairs"] = pairs;
  }
  if (o.dense) {
    std::vector<Operator> ops;
    for (const auto& g : gens) ops.push_back(g.to_operator());
    const BlockStructure dense = decompose(generate_algebra(ops), seed, tol);
    std::vector<Index> a, b;
    for (const auto& s : bs.sectors) a.push_back(s.size());
    for (const auto& s : dense.sectors) b.push_back(s.size());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    out.result["dense_sector_dims"] = b;
    out.result["dense_matches"] = a == b;
    negative = negative || a != b;
    text << "dense pipeline sector dimensions " << (a == b ? "match" : "DIFFER") << '\n';
  }
  out.negative = negative;
  out.summary = text.str();
  return out;
}

Outcome cmd_twirl(const Options& o, std::uint64_t, double tol) {
  Outcome out;
  out.inputs = {{"group", require(o.group, "--group")}, {"in", require(o.in, "--in")}};
  const GroupRep group = load_group(o.group);
  const OperatorFile file = read_operator_file(o.in);
  if (file.dim != group.dim()) {
    throw DimensionError("operators have dimension " + std::to_string(file.dim) +
                         ", group acts on dimension " + std::to_string(group.dim()));
  }
  Json arr = Json::array();
  std::ostringstream text;
  text << "group order " << group.order() << ", dim " << group.dim() << '\n'
       << std::left << std::setw(16) << "operator" << std::setw(14) << "||X||" << std::setw(14)
       << "||T(X)||" << std::setw(14) << "idempotence" << std::setw(14) << "commutant"
       << "trace\n";
  bool ok = true;
  for (const auto& op : file.operators) {
    const Operator t = twirl(op.op, group);
    const double idem = (twirl(t, group) - t).norm();
    double comm = 0.0;
    for (const auto& g : group.elements()) comm = std::max(comm, (g * t - t * g).norm());
    const double tr = std::abs(t.trace() - op.op.trace());
    ok = ok && idem <= tol && comm <= tol && tr <= tol;
    arr.push_back({{"name", op.name},
                   {"norm", op.op.norm()},
                   {"twirled_norm", t.norm()},
                   {"idempotence_residual", idem},
                   {"commutant_residual", comm},
                   {"trace_residual", tr},
                   {"twirled", matrix_to_json(t)}});
    text << std::setw(16) << op.name << std::setw(14) << fmt(op.op.norm()) << std::setw(14)
         << fmt(t.norm()) << std::setw(14) << fmt(idem) << std::setw(14) << fmt(comm) << fmt(tr)
         << '\n';
  }
  out.result["group_order"] = group.order();
  out.result["operators"] = arr;
  out.negative = !ok;
  out.summary = text.str();
  return out;
}

Outcome cmd_suppression(const Options& o, std::uint64_t, double tol) {
  Outcome out;
  out.inputs = {{"group", require(o.group, "--group")}, {"in", require(o.in, "--in")}};
  const GroupRep group = load_group(o.group);
  const OperatorFile file = read_operator_file(o.in);
  Operator h = Operator::Zero(file.dim, file.dim);
  for (const auto& x : file.of_kind(OperatorKind::kHamiltonian)) h += x;
  std::vector<Operator> couplings;
  std::vector<std::string> names;
  for (const auto& op : file.operators) {
    if (op.kind == OperatorKind::kHamiltonian) continue;
    couplings.push_back(op.op);
    names.push_back(op.name);
  }
  const SuppressionReport r = check_suppression(h, couplings, group, tol);
  out.result["suppression"] = r;
  out.result["coupling_names"] = names;
  out.negative = !r.unitary_effective_dynamics;
  std::ostringstream text;
  text << "H invariant: " << (r.hamiltonian_invariant ? "yes" : "no") << " (residual "
       << fmt(r.invariance_residual) << ")\n"
       << std::left << std::setw(16) << "coupling" << std::setw(14) << "||twirl||"
       << "suppressed\n";
  for (std::size_t k = 0; k < couplings.size(); ++k) {
    text << std::setw(16) << names[k] << std::setw(14) << fmt(r.coupling_norms[k])
         << (r.suppressed[k] ? "yes" : "no") << '\n';
  }
  text << "unitary effective dynamics: " << (r.unitary_effective_dynamics ? "yes" : "no") << '\n';
  out.summary = text.str();
  return out;
}

Outcome cmd_universality(const Options& o, std::uint64_t seed, double tol) {
  Outcome out;
  out.inputs = {{"group", require(o.group, "--group")}, {"in", o.in},
                {"random", o.random_pair}, {"sector", o.sector}, {"retries", o.retries}};
  if (o.in.empty() == !o.random_pair) throw InvalidInput("give exactly one of --in and --random");
  const GroupRep group = load_group(o.group);
  const BlockStructure bs = ns_from_group({}, group, seed, tol).structure;
  const int label = resolve_sector(bs, o.sector);

  UniversalityReport r;
  int attempts = 0;
  if (!o.in.empty()) {
    const OperatorFile file = read_operator_file(o.in);
    std::vector<Operator> hs = file.of_kind(OperatorKind::kHamiltonian);
    if (hs.empty()) hs = file.all();
    if (hs.size() != 2) throw InvalidInput("universality needs exactly two hamiltonians in --in");
    r = symmetrized_universality(hs[0], hs[1], group, bs, label);
    r.seed = seed;
    attempts = 1;
  } else {
    if (o.retries < 1) throw InvalidInput("--retries must be >= 1");
    for (int k = 0; k < o.retries; ++k) {
      Rng rng(seed + static_cast<std::uint64_t>(k));
      const Operator h1 = random_hermitian(group.dim(), rng);
      const Operator h2 = random_hermitian(group.dim(), rng);
      r = symmetrized_universality(h1, h2, group, bs, label);
      r.seed = seed + static_cast<std::uint64_t>(k);
      attempts = k + 1;
      if (r.universal_u) break;
    }
  }
  out.result["sector"] = label;
  out.result["sectors"] = bs.sectors;
  out.result["attempts"] = attempts;
  out.result["universality"] = r;
  out.negative = !r.universal_u;
  std::ostringstream text;
  text << sector_table(bs) << "sector " << label << ": n = " << r.ns_dim << "  Lie dim = "
       << r.lie_dim << "  projected dim = " << r.projected_dim << " / " << r.u_threshold
       << "  universal u(n): " << (r.universal_u ? "yes" : "no")
       << "  su(n): " << (r.universal_su ? "yes" : "no") << "  attempts = " << attempts << '\n';
  out.summary = text.str();
  return out;
}

Outcome cmd_collective(const Options& o, std::uint64_t seed, double tol) {
  Outcome out;
  out.inputs = {{"n", o.n}, {"method", o.method}};
  const int nq = o.n;
  if (nq < 1) throw InvalidInput("--n must be >= 1");
  BlockStructure bs;
  std::vector<int> two_j;
  double cert = 0.0;
  if (o.method == "structured") {
    SchurWeylStructure sw = schur_weyl_decompose(nq, seed);
    bs = std::move(sw.structure);
    two_j = std::move(sw.two_j);
    cert = sw.certification_residual;
  } else if (o.method == "dense") {
    if (nq > 6) throw InvalidInput("--method dense supports N <= 6");
    const CollectiveSystem sys = collective_ops(nq);
    const OperatorAlgebra alg = generate_algebra(sys.ops());
    bs = decompose(alg, seed, tol);
    const VerificationReport v = verify_structure(alg, bs, tol);
    cert = std::max(v.algebra_form_residual, v.commutant_form_residual);
    if (!v.passed) throw NumericalError("dense collective decomposition failed verification");
    for (auto& s : bs.sectors) {
      two_j.push_back(static_cast<int>(s.irrep_dim) - 1);
      s.tag = spin_label(two_j.back());
    }
  } else {
    throw InvalidInput("unknown --method '" + o.method + "' (expected structured or dense)");
  }

  Json table = Json::array();
  bool match = true;
  Index total = 0;
  std::ostringstream text;
  text << "N = " << nq << "  dim = " << bs.dim << "  method = " << o.method << '\n'
       << std::left << std::setw(7) << "label" << std::setw(9) << "J" << std::setw(8) << "n"
       << std::setw(8) << "d" << "predicted n\n";
  for (const auto& s : bs.sectors) {
    const int tj = two_j[static_cast<std::size_t>(s.label)];
    const Index pred = predicted_multiplicity(nq, tj);
    match = match && pred == s.multiplicity;
    total += s.multiplicity * s.irrep_dim;
    table.push_back({{"label", s.label}, {"J", spin_label(tj)}, {"two_j", tj},
                     {"multiplicity", s.multiplicity}, {"irrep_dim", s.irrep_dim},
                     {"predicted_multiplicity", pred}});
    text << std::setw(7) << s.label << std::setw(9) << spin_label(tj).substr(2) << std::setw(8)
         << s.multiplicity << std::setw(8) << s.irrep_dim << pred << '\n';
  }
  out.result["num_qubits"] = nq;
  out.result["method"] = o.method;
  out.result["sectors"] = table;
  out.result["matches_prediction"] = match;
  out.result["dimension_sum"] = total;
  out.result["certification_residual"] = cert;
  out.result["structure"] = bs;
  out.negative = !match || total != bs.dim;
  text << "sum n(2J+1) = " << total << "  matches prediction: " << (match ? "yes" : "no")
       << "  certification residual " << fmt(cert) << '\n';
  out.summary = text.str();
  return out;
}

Outcome cmd_clusters(const Options& o, std::uint64_t seed, double) {
  Outcome out;
  out.inputs = {{"clusters", require(o.clusters, "--clusters")}};
  std::vector<int> sizes;
  for (const auto& part : split(o.clusters, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size()) throw InvalidInput("--clusters: '" + part + "' is not an integer");
    sizes.push_back(v);
  }
  const ClusterReport r = cluster_decompose(sizes, seed);
  out.result = r;
  out.negative = !r.matches_prediction;
  std::ostringstream text;
  text << "clusters " << o.clusters << "  method " << r.method << "  sectors "
       << r.sectors.size() << '\n'
       << "noiseless subsystem dims:";
  for (Index d : r.ns_dims) text << ' ' << d;
  if (r.ns_dims.empty()) text << " none";
  text << "\nmax NS dim = " << r.max_ns_dim << "  matches prediction: "
       << (r.matches_prediction ? "yes" : "no") << '\n';
  out.summary = text.str();
  return out;
}

Outcome cmd_simulate(const Options& o, std::uint64_t seed, double tol) {
  Outcome out;
  out.inputs = {{"in", o.in},       {"n", o.n},         {"sector", o.sector},
                {"logical", o.logical}, {"gauge", o.gauge}, {"t", o.t},
                {"samples", o.samples}, {"steps", o.steps}, {"rate", o.rate}};
  if (o.in.empty() && o.n < 1) throw InvalidInput("simulate needs --in or --n");

  Noise noise;
  std::vector<Operator> noise_ops;
  if (!o.in.empty()) {
    const OperatorFile file = read_operator_file(o.in);
    if (file.has(OperatorKind::kKraus)) {
      const KrausMap map = kraus_map(file);
      noise = std::vector<KrausMap>(static_cast<std::size_t>(std::max(0, o.samples - 1)), map);
      noise_ops = map.operators;
    } else {
      const LindbladModel m = lindblad_model(file);
      m.validate();
      noise = m;
      noise_ops.push_back(m.hamiltonian);
      for (const auto& c : m.channels) noise_ops.push_back(c.op);
    }
  } else {
    // Collective dephasing.
    const CollectiveSystem sys = collective_ops(o.n);
    noise = LindbladModel{Operator::Zero(sys.sz.rows(), sys.sz.cols()), {{sys.sz, o.rate}}};
  }

  BlockStructure bs;
  if (o.n >= 1) {
    bs = schur_weyl_decompose(o.n, seed).structure;
  } else {
    std::vector<Operator> gens;
    for (const auto& x : noise_ops) {
      if (x.norm() > 0.0) gens.push_back(x);
    }
    bs = gens.empty() ? scalar_structure(noise_ops.front().rows())
                      : decompose(generate_algebra(gens), seed, tol);
  }
  const int label = resolve_sector(bs, o.sector);
  const Sector& s = bs.sector(label);

  StateVector logical;
  if (o.logical == "random") {
    Rng rng(seed);
    logical = random_state(s.multiplicity, rng);
  } else {
    std::size_t used = 0;
    long k = -1;
    try {
      k = std::stol(o.logical, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != o.logical.size() || k < 0 || k >= s.multiplicity) {
      throw InvalidInput("--logical must be 'random' or a basis index below " +
                         std::to_string(s.multiplicity));
    }
    logical = StateVector::Unit(s.multiplicity, k);
  }
  if (o.gauge < 0 || o.gauge >= s.irrep_dim) {
    throw InvalidInput("--gauge must be below d = " + std::to_string(s.irrep_dim));
  }
  const StateVector gauge = StateVector::Unit(s.irrep_dim, o.gauge);
  const Schedule schedule{o.t, o.samples, o.steps};
  const FidelityTrace trace = ns_fidelity_experiment(bs, label, noise, logical, gauge, schedule);
  out.result["sectors"] = bs.sectors;
  out.result["logical_state"] = vector_to_json(logical);
  out.result["trace"] = trace;
  out.result["min_fidelity"] = trace.min_fidelity();
  out.negative = trace.min_fidelity() < 1.0 - kFidelityFloor;
  std::ostringstream text;
  text << trace.to_table() << "# sector " << label << (s.tag.empty() ? "" : " (" + s.tag + ")")
       << "  noise " << trace.noise_kind << "  contained " << (trace.noise_contained ? "yes" : "no")
       << "  min fidelity " << std::setprecision(12) << trace.min_fidelity() << '\n';
  out.summary = text.str();
  return out;
}

using Handler = Outcome (*)(const Options&, std::uint64_t, double);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"decompose", cmd_decompose},     {"commutant", cmd_commutant},
      {"codes", cmd_codes},             {"kl-check", cmd_kl_check},
      {"stabilizer", cmd_stabilizer},   {"twirl", cmd_twirl},
      {"suppression", cmd_suppression}, {"universality", cmd_universality},
      {"collective", cmd_collective},   {"clusters", cmd_clusters},
      {"simulate", cmd_simulate},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "decompose",    "commutant",  "codes",    "kl-check", "stabilizer", "twirl",
      "suppression", "universality", "collective", "clusters", "simulate"};
  return names;
}

Outcome run_command(const std::string& command, const Options& options, std::uint64_t seed,
                    double tol) {
  const auto it = handlers().find(command);
  if (it == handlers().end()) throw InvalidInput("unknown command '" + command + "'");
  return it->second(options, seed, tol);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Noiseless-subsystem and operator-algebra analysis", "nsalg"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(NSALG_VERSION));

  Options o;
  std::uint64_t seed = 0;
  double tol = kVerifyTol;
  std::string format = "text";
  std::string out_path;
  bool no_timestamp = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "Random seed (u64)");
    sub->add_option("--tol", tol, "Verification tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", out_path, "Write the report here; stdout then gets the text summary");
    sub->add_flag("--no-timestamp", no_timestamp, "Leave the report timestamp empty");
  };
  auto add = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    return sub;
  };

  auto* dec = add("decompose", "Block structure of the algebra generated by --in");
  dec->add_option("--in", o.in, "Operator file")->required();
  dec->add_flag("!--no-verify", o.verify, "Skip the commutant-based certification");

  auto* com = add("commutant", "Commutant, center and double-commutant check");
  com->add_option("--in", o.in, "Operator file")->required();
  com->add_flag("--basis", o.basis, "Include the commutant basis in the report");

  auto* cod = add("codes", "Extract a code from one sector and check it");
  cod->add_option("--in", o.in, "Operator file")->required();
  cod->add_option("--sector", o.sector, "Sector label or tag");
  cod->add_option("--fixed", o.fixed, "Fixed gauge (or multiplicity) index");
  cod->add_option("--role", o.role, "multiplicity | gauge");
  cod->add_option("--code-out", o.code_out, "Write the code as JSON");

  auto* kl = add("kl-check", "Knill-Laflamme check of a code against errors");
  kl->add_option("--code", o.code, "Code file")->required();
  kl->add_option("--errors", o.errors, "Operator file of errors")->required();

  auto* stab = add("stabilizer", "Syndrome sectors and error-pair classification");
  stab->add_option("--generators", o.generators, "Comma-separated Pauli strings")->required();
  stab->add_option("--pauli-errors", o.pauli_errors, "Comma-separated Pauli errors");
  stab->add_flag("--dense", o.dense, "Compare with the dense pipeline");

  auto* tw = add("twirl", "Group average of each operator");
  tw->add_option("--group", o.group, "Group file or pauli:N | symmetric:N | swap")->required();
  tw->add_option("--in", o.in, "Operator file")->required();

  auto* sup = add("suppression", "Symmetrization conditions for H and the couplings");
  sup->add_option("--group", o.group, "Group file or builtin")->required();
  sup->add_option("--in", o.in, "Operator file (hamiltonian + couplings)")->required();

  auto* uni = add("universality", "Lie closure of symmetrized Hamiltonians on one sector");
  uni->add_option("--group", o.group, "Group file or builtin")->required();
  uni->add_option("--in", o.in, "Two hamiltonians");
  uni->add_flag("--random", o.random_pair, "Use a seeded random pair");
  uni->add_option("--sector", o.sector, "Sector label or tag");
  uni->add_option("--retries", o.retries, "Random pairs to try");

  auto* col = add("collective", "Schur-Weyl sectors of N qubits");
  col->add_option("--n", o.n, "Number of qubits")->required();
  col->add_option("--method", o.method, "structured | dense");

  auto* clu = add("clusters", "Collective noise on clusters of qubits");
  clu->add_option("--clusters", o.clusters, "Cluster sizes, e.g. 3,3")->required();

  auto* sim = add("simulate", "Encode, evolve and decode a noiseless subsystem");
  sim->add_option("--in", o.in, "Noise model file (hamiltonian/lindblad or kraus)");
  sim->add_option("--n", o.n, "Use the collective structure of N qubits");
  sim->add_option("--sector", o.sector, "Sector label or tag");
  sim->add_option("--logical", o.logical, "'random' or a basis index");
  sim->add_option("--gauge", o.gauge, "Gauge basis index");
  sim->add_option("--t", o.t, "Final time")->check(CLI::NonNegativeNumber);
  sim->add_option("--samples", o.samples, "Sample count")->check(CLI::PositiveNumber);
  sim->add_option("--steps", o.steps, "RK4 steps per interval")->check(CLI::PositiveNumber);
  sim->add_option("--rate", o.rate, "Collective dephasing rate (without --in)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const Outcome outcome = run_command(command, o, seed, tol);
    const Json report = make_report({command, seed, tol, !no_timestamp}, outcome);
    const Format f = format_from_string(format);
    if (out_path.empty()) {
      out << render(report, outcome, f);
    } else {
      write_file(out_path, render(report, outcome, f));
      out << render(report, outcome, Format::kText);
    }
    return outcome.negative ? kExitNegative : kExitSuccess;
  } catch (const Error& e) {
    err << "nsalg " << command << ": error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "nsalg " << command << ": unexpected failure: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace nsalg::cli
