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

#include "nsalg/symmetry.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "nsalg/linalg.h"
#include "span_builder.h"

namespace nsalg {
namespace {

constexpr double kSameElement = 1e-8;
constexpr double kUnitarityTol = 1e-10;
constexpr Index kChunk = 32;

// Lookup of group elements up to HS distance kSameElement. The key is the
// projection onto a fixed unit-norm direction, which is 1-Lipschitz in HS
// distance, so only keys within kSameElement need an exact comparison.
class ElementIndex {
 public:
  explicit ElementIndex(Index dim) : probe_(dim, dim) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(dim));
    std::normal_distribution<double> normal;
    for (Index j = 0; j < dim; ++j) {
      for (Index i = 0; i < dim; ++i) probe_(i, j) = Complex(normal(rng), normal(rng));
    }
    probe_ /= probe_.norm();
  }

  double key(const Operator& x) const { return hs_inner(probe_, x).real(); }

  // Index of a stored element within kSameElement of x, or -1.
  Index find(const Operator& x, const std::vector<Operator>& elements) const {
    const double k = key(x);
    auto it = keys_.lower_bound(k - kSameElement);
    for (; it != keys_.end() && it->first <= k + kSameElement; ++it) {
      if ((elements[it->second] - x).norm() < kSameElement) return it->second;
    }
    return -1;
  }

  void insert(const Operator& x, Index position) { keys_.emplace(key(x), position); }

 private:
  Operator probe_;
  std::multimap<double, Index> keys_;
};

bool hermitian_rel(const Operator& h, double tol) {
  return (h - h.adjoint()).norm() <= tol * std::max(1.0, h.norm());
}

// Orthonormal basis (stacked vecs) of the complex span of the Lie algebra
// generated by `gens` under commutators.
Eigen::MatrixXcd lie_span(const std::vector<Operator>& gens, Index dim, double tol) {
  const Index len = dim * dim;
  internal::SpanBuilder span(len, tol);
  {
    Eigen::MatrixXcd seed(len, static_cast<Index>(gens.size()));
    for (std::size_t g = 0; g < gens.size(); ++g) seed.col(static_cast<Index>(g)) = vec(gens[g]);
    span.add(std::move(seed));
  }
  std::vector<double> gen_norms;
  for (const auto& g : gens) gen_norms.push_back(2.0 * g.norm());
  Index next_basis = 0;
  std::size_t next_gen = 0;
  Eigen::MatrixXcd chunk(len, kChunk);
  std::vector<double> scale;
  while (next_basis < span.size() && span.size() < len) {
    Index filled = 0;
    scale.clear();
    while (filled < kChunk && next_basis < span.size()) {
      const Eigen::Map<const Operator> b(span.basis().col(next_basis).data(), dim, dim);
      chunk.col(filled++) = vec(gens[next_gen] * b - b * gens[next_gen]);
      scale.push_back(gen_norms[next_gen]);
      if (++next_gen == gens.size()) {
        next_gen = 0;
        ++next_basis;
      }
    }
    span.add(chunk.leftCols(filled), scale);
  }
  return std::move(span).take();
}

}  // namespace

GroupRep GroupRep::from_elements(std::vector<Operator> elements,
                                 std::vector<std::string> labels) {
  if (elements.empty()) throw InvalidInput("group: element list is empty");
  const Index dim = common_dim(elements, "group");
  if (labels.empty()) {
    for (std::size_t i = 0; i < elements.size(); ++i) labels.push_back("g" + std::to_string(i));
  }
  if (labels.size() != elements.size()) {
    throw InvalidInput("group: one label per element required");
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!all_finite(elements[i])) {
      throw InvalidInput("group: element " + labels[i] + " has non-finite entries");
    }
    if (!is_unitary(elements[i], kUnitarityTol)) {
      throw InvalidInput("group: element " + labels[i] + " is not unitary");
    }
  }
  const Operator id = identity(dim);
  std::size_t e = elements.size();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if ((elements[i] - id).norm() < kSameElement) {
      e = i;
      break;
    }
  }
  if (e == elements.size()) throw InvalidInput("group: identity element is missing");
  std::rotate(elements.begin(), elements.begin() + static_cast<std::ptrdiff_t>(e),
              elements.begin() + static_cast<std::ptrdiff_t>(e) + 1);
  std::rotate(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(e),
              labels.begin() + static_cast<std::ptrdiff_t>(e) + 1);

  ElementIndex index(dim);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (index.find(elements[i], elements) >= 0) {
      throw InvalidInput("group: element " + labels[i] + " is listed twice");
    }
    index.insert(elements[i], static_cast<Index>(i));
  }
  Operator product(dim, dim);
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = 0; b < elements.size(); ++b) {
      product.noalias() = elements[a] * elements[b];
      if (index.find(product, elements) < 0) {
        throw InvalidInput("group: not closed, product " + labels[a] + "*" + labels[b] +
                           " is not in the list");
      }
    }
  }
  return GroupRep(dim, std::move(elements), std::move(labels));
}

GroupRep close_group(const std::vector<Operator>& generators, Index max_order,
                     const std::vector<std::string>& generator_labels) {
  if (generators.empty()) throw InvalidInput("close_group: no generators");
  const Index dim = common_dim(generators, "close_group");
  if (!generator_labels.empty() && generator_labels.size() != generators.size()) {
    throw InvalidInput("close_group: one label per generator required");
  }
  std::vector<std::string> gen_labels = generator_labels;
  if (gen_labels.empty()) {
    for (std::size_t i = 0; i < generators.size(); ++i) gen_labels.push_back("g" + std::to_string(i));
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (!all_finite(generators[i]) || !is_unitary(generators[i], kUnitarityTol)) {
      throw InvalidInput("close_group: generator " + gen_labels[i] + " is not unitary");
    }
  }

  std::vector<Operator> elements{identity(dim)};
  std::vector<std::string> labels{"e"};
  ElementIndex index(dim);
  index.insert(elements[0], 0);
  Operator candidate(dim, dim);
  // Breadth-first over words: every element is a generator times an
  // earlier element, so the list is closed once the frontier is exhausted.
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t g = 0; g < generators.size(); ++g) {
      candidate.noalias() = generators[g] * elements[i];
      if (index.find(candidate, elements) >= 0) continue;
      if (static_cast<Index>(elements.size()) >= max_order) {
        throw InvalidInput("close_group: group order exceeds " + std::to_string(max_order));
      }
      index.insert(candidate, static_cast<Index>(elements.size()));
      elements.push_back(candidate);
      labels.push_back(i == 0 ? gen_labels[g] : gen_labels[g] + "*" + labels[i]);
    }
  }
  return GroupRep(dim, std::move(elements), std::move(labels));
}

Operator twirl(const Operator& x, const GroupRep& group) {
  if (group.order() == 0) throw InvalidInput("twirl: empty group");
  require_dim(x, group.dim(), "twirl");
  Operator acc = Operator::Zero(x.rows(), x.cols());
  for (const auto& g : group.elements()) acc.noalias() += g * x * g.adjoint();
  return acc / static_cast<double>(group.order());
}

SuppressionReport check_suppression(const Operator& hamiltonian,
                                    const std::vector<Operator>& couplings,
                                    const GroupRep& group, double tol) {
  require_dim(hamiltonian, group.dim(), "check_suppression: hamiltonian");
  SuppressionReport r;
  r.tol = tol;
  r.invariance_residual = (twirl(hamiltonian, group) - hamiltonian).norm();
  r.hamiltonian_invariant = r.invariance_residual < tol;
  r.all_suppressed = true;
  for (const auto& s : couplings) {
    require_dim(s, group.dim(), "check_suppression: coupling");
    const double n = twirl(s, group).norm();
    r.coupling_norms.push_back(n);
    r.suppressed.push_back(n < tol);
    r.all_suppressed = r.all_suppressed && n < tol;
  }
  r.unitary_effective_dynamics = r.hamiltonian_invariant && r.all_suppressed;
  return r;
}

GroupNoiselessReport ns_from_group(const std::vector<Operator>& interaction,
                                   const GroupRep& group, std::uint64_t seed,
                                   double tol) {
  if (group.order() == 0) throw InvalidInput("ns_from_group: empty group");
  GroupNoiselessReport r{OperatorAlgebra::from_spanning_set(group.elements(), true),
                         BlockStructure{}, {}, true, tol};
  for (const auto& op : interaction) {
    require_dim(op, group.dim(), "ns_from_group");
    const double res = r.group_algebra.residual(op);
    r.containment_residuals.push_back(res);
    r.contained = r.contained && res <= tol;
  }
  r.structure = decompose(r.group_algebra, seed);
  return r;
}

UniversalityReport symmetrized_universality(const Operator& h1, const Operator& h2,
                                            const GroupRep& group,
                                            const BlockStructure& bs, int sector,
                                            double tol) {
  const Index dim = group.dim();
  require_dim(h1, dim, "symmetrized_universality: h1");
  require_dim(h2, dim, "symmetrized_universality: h2");
  if (bs.dim != dim) throw DimensionError("symmetrized_universality: structure dimension");
  if (!hermitian_rel(h1, 1e-10)) throw InvalidInput("symmetrized_universality: h1 is not hermitian");
  if (!hermitian_rel(h2, 1e-10)) throw InvalidInput("symmetrized_universality: h2 is not hermitian");
  const Sector& s = bs.sector(sector);

  const Operator k1 = twirl(h1, group);
  const Operator k2 = twirl(h2, group);
  UniversalityReport r;
  r.twirl_invariance = std::max((twirl(k1, group) - k1).norm(), (twirl(k2, group) - k2).norm());
  const Eigen::MatrixXcd lie = lie_span({Complex(0, 1) * k1, Complex(0, 1) * k2}, dim, tol);
  r.lie_dim = lie.cols();

  const Index n = s.multiplicity;
  const Index d = s.irrep_dim;
  const Eigen::MatrixXcd v = bs.sector_basis(sector);
  internal::SpanBuilder projected(n * n, tol);
  Eigen::MatrixXcd chunk(n * n, kChunk);
  std::vector<double> scale;
  Index filled = 0;
  auto flush = [&] {
    if (filled == 0) return;
    projected.add(chunk.leftCols(filled), scale);
    filled = 0;
    scale.clear();
  };
  for (Index c = 0; c < lie.cols(); ++c) {
    const Eigen::Map<const Operator> l(lie.col(c).data(), dim, dim);
    const Operator block = v.adjoint() * l * v;
    chunk.col(filled++) = vec(partial_trace_second(block, n, d) / static_cast<double>(d));
    scale.push_back(1.0);
    if (filled == kChunk) flush();
  }
  flush();
  r.projected_dim = projected.size();
  r.ns_dim = n;
  r.u_threshold = n * n;
  r.su_threshold = n * n - 1;
  r.universal_u = r.projected_dim >= r.u_threshold;
  r.universal_su = r.projected_dim >= r.su_threshold;
  return r;
}

Index lie_closure_dimension(const std::vector<Operator>& anti_hermitian, double tol) {
  if (anti_hermitian.empty()) throw InvalidInput("lie_closure_dimension: no generators");
  const Index dim = common_dim(anti_hermitian, "lie_closure_dimension");
  for (const auto& x : anti_hermitian) {
    if ((x + x.adjoint()).norm() > 1e-10 * std::max(1.0, x.norm())) {
      throw InvalidInput("lie_closure_dimension: generator is not anti-hermitian");
    }
  }
  return lie_span(anti_hermitian, dim, tol).cols();
}

}  // namespace nsalg
