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

#include "nsalg/serialize.h"

#include <iomanip>
#include <sstream>

namespace nsalg {
namespace {

void check_schema(const Json& j, const char* what) {
  if (!j.is_object()) throw InvalidInput(std::string(what) + ": expected a JSON object");
  if (j.contains("schema_version") && j.at("schema_version").get<int>() != kSchemaVersion) {
    throw InvalidInput(std::string(what) + ": unsupported schema_version " +
                       j.at("schema_version").dump());
  }
}

Json real_rows(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd real_from_rows(const Json& j, Index rows, Index cols, const char* field) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows) {
    throw InvalidInput(std::string("matrix: field '") + field + "' must have " +
                       std::to_string(rows) + " rows");
  }
  Eigen::MatrixXd m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw InvalidInput(std::string("matrix: row ") + std::to_string(i) + " of '" + field +
                         "' must have " + std::to_string(cols) + " entries");
    }
    for (Index k = 0; k < cols; ++k) m(i, k) = row[static_cast<std::size_t>(k)].get<double>();
  }
  return m;
}

std::vector<std::pair<Index, Index>> pairs_of(const std::vector<ClusterSectorInfo>& v) {
  std::vector<std::pair<Index, Index>> out;
  for (const auto& s : v) out.emplace_back(s.multiplicity, s.irrep_dim);
  return out;
}

std::vector<ClusterSectorInfo> infos_of(const std::vector<std::pair<Index, Index>>& v) {
  std::vector<ClusterSectorInfo> out;
  for (const auto& [n, d] : v) out.push_back({n, d});
  return out;
}

}  // namespace

Json matrix_to_json(const Eigen::MatrixXcd& m) {
  return Json{{"rows", m.rows()},
              {"cols", m.cols()},
              {"re", real_rows(m.real())},
              {"im", real_rows(m.imag())}};
}

Eigen::MatrixXcd matrix_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("matrix: expected an object with re/im arrays");
  const Index rows = j.at("rows").get<Index>();
  const Index cols = j.at("cols").get<Index>();
  Eigen::MatrixXcd m(rows, cols);
  m.real() = real_from_rows(j.at("re"), rows, cols, "re");
  m.imag() = j.contains("im") ? real_from_rows(j.at("im"), rows, cols, "im")
                              : Eigen::MatrixXd::Zero(rows, cols);
  return m;
}

Json vector_to_json(const Eigen::VectorXcd& v) {
  Json re = Json::array();
  Json im = Json::array();
  for (Index i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
  }
  return Json{{"re", re}, {"im", im}};
}

Eigen::VectorXcd vector_from_json(const Json& j) {
  const Json& re = j.at("re");
  if (!re.is_array()) throw InvalidInput("vector: 're' must be an array");
  Eigen::VectorXcd v(static_cast<Index>(re.size()));
  for (std::size_t i = 0; i < re.size(); ++i) v(static_cast<Index>(i)) = re[i].get<double>();
  if (j.contains("im")) {
    const Json& im = j.at("im");
    if (!im.is_array() || im.size() != re.size()) {
      throw InvalidInput("vector: 'im' must match the length of 're'");
    }
    for (std::size_t i = 0; i < im.size(); ++i) {
      v(static_cast<Index>(i)) += Complex(0, im[i].get<double>());
    }
  }
  return v;
}

void to_json(Json& j, const Sector& s) {
  j = Json{{"label", s.label},
           {"tag", s.tag},
           {"n", s.multiplicity},
           {"d", s.irrep_dim},
           {"offset", s.offset}};
}

void from_json(const Json& j, Sector& s) {
  s.label = j.at("label").get<int>();
  s.tag = j.value("tag", std::string());
  s.multiplicity = j.at("n").get<Index>();
  s.irrep_dim = j.at("d").get<Index>();
  s.offset = j.at("offset").get<Index>();
}

void to_json(Json& j, const BlockStructure& bs) {
  j = Json{{"schema_version", kSchemaVersion},
           {"dim", bs.dim},
           {"seed", bs.seed},
           {"sectors", bs.sectors},
           {"basis_change", matrix_to_json(bs.basis_change)}};
}

void from_json(const Json& j, BlockStructure& bs) {
  check_schema(j, "block structure");
  bs.dim = j.at("dim").get<Index>();
  bs.seed = j.value("seed", std::uint64_t{0});
  bs.sectors = j.at("sectors").get<std::vector<Sector>>();
  bs.basis_change = matrix_from_json(j.at("basis_change"));
  if (bs.basis_change.rows() != bs.dim || bs.basis_change.cols() != bs.dim) {
    throw InvalidInput("block structure: basis_change must be dim x dim");
  }
  Index total = 0;
  for (const auto& s : bs.sectors) {
    if (s.multiplicity < 1 || s.irrep_dim < 1 || s.offset != total) {
      throw InvalidInput("block structure: inconsistent sector table at label " +
                         std::to_string(s.label));
    }
    total += s.size();
  }
  if (total != bs.dim) throw InvalidInput("block structure: sectors do not cover the space");
}

void to_json(Json& j, const VerificationReport& r) {
  j = Json{{"algebra_form_residual", r.algebra_form_residual},
           {"commutant_form_residual", r.commutant_form_residual},
           {"unitarity_residual", r.unitarity_residual},
           {"sum_nd", r.sum_nd},
           {"ambient_dim", r.ambient_dim},
           {"sum_d2", r.sum_d2},
           {"algebra_dim", r.algebra_dim},
           {"sum_n2", r.sum_n2},
           {"commutant_dim", r.commutant_dim},
           {"tol", r.tol},
           {"passed", r.passed}};
}

void from_json(const Json& j, VerificationReport& r) {
  r.algebra_form_residual = j.at("algebra_form_residual").get<double>();
  r.commutant_form_residual = j.at("commutant_form_residual").get<double>();
  r.unitarity_residual = j.at("unitarity_residual").get<double>();
  r.sum_nd = j.at("sum_nd").get<Index>();
  r.ambient_dim = j.at("ambient_dim").get<Index>();
  r.sum_d2 = j.at("sum_d2").get<Index>();
  r.algebra_dim = j.at("algebra_dim").get<Index>();
  r.sum_n2 = j.at("sum_n2").get<Index>();
  r.commutant_dim = j.at("commutant_dim").get<Index>();
  r.tol = j.at("tol").get<double>();
  r.passed = j.at("passed").get<bool>();
}

void to_json(Json& j, const CodeSubspace& c) {
  j = Json{{"schema_version", kSchemaVersion},
           {"dim", c.dim},
           {"sector", c.sector},
           {"fixed_index", c.fixed_index},
           {"role", std::string(to_string(c.role))},
           {"basis", matrix_to_json(c.basis)}};
}

void from_json(const Json& j, CodeSubspace& c) {
  check_schema(j, "code");
  c.basis = matrix_from_json(j.at("basis"));
  c.dim = j.value("dim", c.basis.rows());
  if (c.basis.rows() != c.dim) throw InvalidInput("code: basis rows must equal dim");
  c.sector = j.value("sector", 0);
  c.fixed_index = j.value("fixed_index", Index{0});
  c.role = code_role_from_string(j.value("role", std::string("multiplicity")));
}

void to_json(Json& j, const KLReport& r) {
  j = Json{{"passed", r.passed},
           {"off_diagonal_violation", r.off_diagonal_violation},
           {"diagonal_violation", r.diagonal_violation},
           {"degenerate", r.degenerate},
           {"c_rank", r.c_rank},
           {"error_count", r.error_count},
           {"tol", r.tol},
           {"c", matrix_to_json(r.c)}};
}

void from_json(const Json& j, KLReport& r) {
  r.passed = j.at("passed").get<bool>();
  r.off_diagonal_violation = j.at("off_diagonal_violation").get<double>();
  r.diagonal_violation = j.at("diagonal_violation").get<double>();
  r.degenerate = j.at("degenerate").get<bool>();
  r.c_rank = j.at("c_rank").get<Index>();
  r.error_count = j.at("error_count").get<Index>();
  r.tol = j.at("tol").get<double>();
  r.c = matrix_from_json(j.at("c"));
}

void to_json(Json& j, const ErrorPairClassification& c) {
  j = Json{{"kind", std::string(to_string(c.kind))}, {"product", c.product.str()}};
  if (c.kind == ErrorClass::kInGroup) {
    j["phase"] = Json{{"re", c.phase.real()}, {"im", c.phase.imag()}};
    j["generators_used"] = c.generators_used;
  }
  if (c.anticommuting_generator) j["anticommuting_generator"] = *c.anticommuting_generator;
}

void to_json(Json& j, const SuppressionReport& r) {
  j = Json{{"invariance_residual", r.invariance_residual},
           {"hamiltonian_invariant", r.hamiltonian_invariant},
           {"coupling_norms", r.coupling_norms},
           {"suppressed", r.suppressed},
           {"all_suppressed", r.all_suppressed},
           {"unitary_effective_dynamics", r.unitary_effective_dynamics},
           {"tol", r.tol}};
}

void from_json(const Json& j, SuppressionReport& r) {
  r.invariance_residual = j.at("invariance_residual").get<double>();
  r.hamiltonian_invariant = j.at("hamiltonian_invariant").get<bool>();
  r.coupling_norms = j.at("coupling_norms").get<std::vector<double>>();
  r.suppressed = j.at("suppressed").get<std::vector<bool>>();
  r.all_suppressed = j.at("all_suppressed").get<bool>();
  r.unitary_effective_dynamics = j.at("unitary_effective_dynamics").get<bool>();
  r.tol = j.at("tol").get<double>();
}

void to_json(Json& j, const UniversalityReport& r) {
  j = Json{{"lie_dim", r.lie_dim},
           {"projected_dim", r.projected_dim},
           {"ns_dim", r.ns_dim},
           {"u_threshold", r.u_threshold},
           {"su_threshold", r.su_threshold},
           {"universal_u", r.universal_u},
           {"universal_su", r.universal_su},
           {"twirl_invariance", r.twirl_invariance},
           {"seed", r.seed}};
}

void from_json(const Json& j, UniversalityReport& r) {
  r.lie_dim = j.at("lie_dim").get<Index>();
  r.projected_dim = j.at("projected_dim").get<Index>();
  r.ns_dim = j.at("ns_dim").get<Index>();
  r.u_threshold = j.at("u_threshold").get<Index>();
  r.su_threshold = j.at("su_threshold").get<Index>();
  r.universal_u = j.at("universal_u").get<bool>();
  r.universal_su = j.at("universal_su").get<bool>();
  r.twirl_invariance = j.at("twirl_invariance").get<double>();
  r.seed = j.at("seed").get<std::uint64_t>();
}

void to_json(Json& j, const FidelityTrace& t) {
  j = Json{{"schema_version", kSchemaVersion},
           {"sector", t.sector},
           {"noise_kind", t.noise_kind},
           {"containment_residual", t.containment_residual},
           {"noise_contained", t.noise_contained},
           {"times", t.times},
           {"fidelity", t.fidelity},
           {"leakage", t.leakage},
           {"sector_weights", t.sector_weights},
           {"coherence", t.coherence}};
}

void from_json(const Json& j, FidelityTrace& t) {
  check_schema(j, "fidelity trace");
  t.sector = j.at("sector").get<int>();
  t.noise_kind = j.at("noise_kind").get<std::string>();
  t.containment_residual = j.at("containment_residual").get<double>();
  t.noise_contained = j.at("noise_contained").get<bool>();
  t.times = j.at("times").get<std::vector<double>>();
  t.fidelity = j.at("fidelity").get<std::vector<double>>();
  t.leakage = j.at("leakage").get<std::vector<double>>();
  t.sector_weights = j.at("sector_weights").get<std::vector<std::vector<double>>>();
  t.coherence = j.at("coherence").get<std::vector<double>>();
}

void to_json(Json& j, const ClusterReport& r) {
  j = Json{{"schema_version", kSchemaVersion},
           {"cluster_sizes", r.cluster_sizes},
           {"method", r.method},
           {"seed", r.seed},
           {"matches_prediction", r.matches_prediction},
           {"ns_dims", r.ns_dims},
           {"max_ns_dim", r.max_ns_dim},
           {"certification_residual", r.certification_residual},
           {"sectors", pairs_of(r.sectors)},
           {"predicted", pairs_of(r.predicted)},
           {"structure", r.structure}};
}

void from_json(const Json& j, ClusterReport& r) {
  check_schema(j, "cluster report");
  r.cluster_sizes = j.at("cluster_sizes").get<std::vector<int>>();
  r.method = j.at("method").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.matches_prediction = j.at("matches_prediction").get<bool>();
  r.ns_dims = j.at("ns_dims").get<std::vector<Index>>();
  r.max_ns_dim = j.at("max_ns_dim").get<Index>();
  r.certification_residual = j.at("certification_residual").get<double>();
  r.sectors = infos_of(j.at("sectors").get<std::vector<std::pair<Index, Index>>>());
  r.predicted = infos_of(j.at("predicted").get<std::vector<std::pair<Index, Index>>>());
  r.structure = j.at("structure").get<BlockStructure>();
}

std::string sector_table(const BlockStructure& bs) {
  std::ostringstream out;
  out << std::left << std::setw(7) << "label" << std::setw(14) << "tag" << std::setw(6)
      << "n" << std::setw(6) << "d" << "offset\n";
  for (const auto& s : bs.sectors) {
    out << std::setw(7) << s.label << std::setw(14) << (s.tag.empty() ? "-" : s.tag)
        << std::setw(6) << s.multiplicity << std::setw(6) << s.irrep_dim << s.offset << '\n';
  }
  return out.str();
}

}  // namespace nsalg
