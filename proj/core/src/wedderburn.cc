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

#include "nsalg/wedderburn.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "internal.h"

namespace nsalg {
namespace {

// Blocks between eigenspaces below this norm are treated as zero when
// grouping eigenspaces into sectors (basis elements have unit norm).
constexpr double kLinkThreshold = 1e-6;
// Tolerance for the input checks (identity and daggers inside the span).
constexpr double kInputTol = 1e-8;
constexpr std::uint64_t kProbeSeed = 0x70726f6265ULL;

struct Attempt {
  std::optional<BlockStructure> result;
  std::string failure;
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Sector index of each column of the block basis.
std::vector<int> column_sectors(const BlockStructure& bs) {
  std::vector<int> owner(bs.dim, -1);
  for (std::size_t s = 0; s < bs.sectors.size(); ++s) {
    const Sector& sec = bs.sectors[s];
    for (Index i = 0; i < sec.size(); ++i) {
      owner[sec.offset + i] = static_cast<int>(s);
    }
  }
  return owner;
}

enum class Side { kAlgebra, kCommutant };

// Squared deviation of a block-basis matrix from the requested form.
double form_deviation_sq(const Operator& z, const BlockStructure& bs,
                         const std::vector<int>& owner, Side side) {
  double dev = 0.0;
  for (Index j = 0; j < z.cols(); ++j) {
    for (Index i = 0; i < z.rows(); ++i) {
      if (owner[i] != owner[j] || owner[i] < 0) dev += std::norm(z(i, j));
    }
  }
  for (const Sector& s : bs.sectors) {
    const Index n = s.multiplicity;
    const Index d = s.irrep_dim;
    auto block = [&](Index l, Index k) {
      return z.block(s.offset + l * d, s.offset + k * d, d, d);
    };
    if (side == Side::kAlgebra) {
      Operator avg = Operator::Zero(d, d);
      for (Index l = 0; l < n; ++l) avg += block(l, l);
      avg /= static_cast<double>(n);
      for (Index l = 0; l < n; ++l) {
        for (Index k = 0; k < n; ++k) {
          dev += l == k ? (block(l, k) - avg).squaredNorm()
                        : block(l, k).squaredNorm();
        }
      }
    } else {
      for (Index l = 0; l < n; ++l) {
        for (Index k = 0; k < n; ++k) {
          const Complex m = block(l, k).trace() / static_cast<double>(d);
          dev += (block(l, k) - m * identity(d)).squaredNorm();
        }
      }
    }
  }
  return dev;
}

void check_input(const OperatorAlgebra& alg) {
  if (alg.dimension() == 0) {
    throw InvalidInput("decompose: algebra is empty");
  }
  const double scale = std::sqrt(static_cast<double>(alg.ambient_dim()));
  if (alg.identity_residual() > kInputTol * scale) {
    throw InvalidInput("decompose: algebra is not unital");
  }
  // A Gaussian combination of the basis has its dagger outside the span
  // whenever some basis element does, so two probes replace the full check.
  std::mt19937_64 rng(kProbeSeed);
  std::normal_distribution<double> normal;
  for (int probe = 0; probe < 2; ++probe) {
    Eigen::VectorXcd c(alg.dimension());
    for (Index k = 0; k < c.size(); ++k) c(k) = Complex(normal(rng), normal(rng));
    const Operator x = unvec(alg.stacked() * c, alg.ambient_dim());
    if (alg.residual(x.adjoint()) > kInputTol * x.norm()) {
      throw InvalidInput("decompose: algebra is not closed under dagger");
    }
  }
}

Attempt try_decompose(const OperatorAlgebra& alg,
                      const std::vector<Operator>& basis, std::uint64_t seed,
                      const DecomposeOptions& opt) {
  const Index dim = alg.ambient_dim();
  const Index dim_a = alg.dimension();

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::VectorXcd coeff(dim_a);
  for (Index k = 0; k < dim_a; ++k) coeff(k) = normal(rng);
  const Operator raw = unvec(alg.stacked() * coeff, dim);
  const Operator generic = 0.5 * (raw + raw.adjoint());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(generic);
  const Eigen::MatrixXcd& v = es.eigenvectors();
  const auto clusters = internal::cluster_spectrum(es.eigenvalues(), opt.cluster_gap);
  const std::size_t nc = clusters.size();

  std::vector<Operator> rotated;
  rotated.reserve(basis.size());
  for (const auto& a : basis) rotated.push_back(v.adjoint() * a * v);

  auto block_of = [&](const Operator& y, std::size_t row, std::size_t col) {
    return y.block(clusters[row].first, clusters[col].first,
                   clusters[row].second, clusters[col].second);
  };

  UnionFind uf(nc);
  for (const auto& y : rotated) {
    for (std::size_t i = 0; i < nc; ++i) {
      for (std::size_t j = i + 1; j < nc; ++j) {
        if (uf.find(i) == uf.find(j)) continue;
        if (block_of(y, i, j).norm() > kLinkThreshold) uf.unite(i, j);
      }
    }
  }

  std::vector<std::vector<std::size_t>> groups;
  std::vector<int> group_of(nc, -1);
  for (std::size_t c = 0; c < nc; ++c) {
    const std::size_t root = uf.find(c);
    if (group_of[root] < 0) {
      group_of[root] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[group_of[root]].push_back(c);
  }

  std::vector<internal::PendingSector> pending;
  for (const auto& group : groups) {
    const Index n = clusters[group.front()].second;
    const Index d = static_cast<Index>(group.size());
    for (std::size_t c : group) {
      if (clusters[c].second != n) {
        std::ostringstream msg;
        msg << "eigenspaces of unequal dimension in one sector (" << n << " vs "
            << clusters[c].second << ")";
        return {std::nullopt, msg.str()};
      }
    }
    const std::size_t ref = group.front();
    std::vector<Eigen::MatrixXcd> frames;
    frames.push_back(v.middleCols(clusters[ref].first, n));
    for (std::size_t m = 1; m < group.size(); ++m) {
      const std::size_t c = group[m];
      std::size_t best = 0;
      double best_norm = -1.0;
      for (std::size_t k = 0; k < rotated.size(); ++k) {
        const double nk = block_of(rotated[k], c, ref).norm();
        if (nk > best_norm) {
          best_norm = nk;
          best = k;
        }
      }
      const Eigen::MatrixXcd t = block_of(rotated[best], c, ref);
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
      const Eigen::MatrixXcd polar = svd.matrixU() * svd.matrixV().adjoint();
      frames.push_back(v.middleCols(clusters[c].first, n) * polar);
    }
    internal::PendingSector p;
    p.sector.multiplicity = n;
    p.sector.irrep_dim = d;
    p.columns.resize(dim, n * d);
    for (Index l = 0; l < n; ++l) {
      for (Index m = 0; m < d; ++m) p.columns.col(l * d + m) = frames[m].col(l);
    }
    pending.push_back(std::move(p));
  }

  BlockStructure bs = internal::assemble_structure(dim, std::move(pending), seed);

  Index sum_d2 = 0;
  for (const auto& s : bs.sectors) sum_d2 += s.irrep_dim * s.irrep_dim;
  if (sum_d2 != dim_a) {
    std::ostringstream msg;
    msg << "sum d_J^2 = " << sum_d2 << " but dim A = " << dim_a;
    return {std::nullopt, msg.str()};
  }
  const std::vector<int> owner = column_sectors(bs);
  double worst = 0.0;
  for (const auto& a : basis) {
    const Operator z = bs.basis_change.adjoint() * a * bs.basis_change;
    worst = std::max(worst, std::sqrt(form_deviation_sq(z, bs, owner, Side::kAlgebra)));
  }
  if (worst > opt.verify_tol) {
    std::ostringstream msg;
    msg << "algebra form residual " << worst << " exceeds " << opt.verify_tol;
    return {std::nullopt, msg.str()};
  }
  return {std::move(bs), {}};
}

}  // namespace

namespace internal {
namespace {

// Canonical order: irrep dimension, multiplicity, then the diagonal of the
// central projector compared entrywise (larger weight on earlier
// computational basis states first).
bool sector_before(const Sector& a, const Eigen::VectorXd& qa, const Sector& b,
                   const Eigen::VectorXd& qb) {
  if (a.irrep_dim != b.irrep_dim) return a.irrep_dim < b.irrep_dim;
  if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
  for (Index i = 0; i < qa.size(); ++i) {
    if (std::abs(qa(i) - qb(i)) > 1e-9) return qa(i) > qb(i);
  }
  return false;
}

}  // namespace

double block_form_residual(const Operator& z, const BlockStructure& bs,
                           bool algebra_side) {
  require_dim(z, bs.dim, "block_form_residual");
  return std::sqrt(form_deviation_sq(z, bs, column_sectors(bs),
                                     algebra_side ? Side::kAlgebra : Side::kCommutant));
}

BlockStructure assemble_structure(Index dim, std::vector<PendingSector> pending,
                                  std::uint64_t seed) {
  std::vector<Eigen::VectorXd> weight;
  weight.reserve(pending.size());
  for (const auto& p : pending) weight.push_back(p.columns.cwiseAbs2().rowwise().sum());
  std::vector<std::size_t> order(pending.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return sector_before(pending[a].sector, weight[a], pending[b].sector, weight[b]);
  });

  BlockStructure bs;
  bs.dim = dim;
  bs.seed = seed;
  bs.basis_change.resize(dim, dim);
  Index offset = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    PendingSector& p = pending[order[i]];
    p.sector.label = static_cast<int>(i);
    p.sector.offset = offset;
    bs.basis_change.middleCols(offset, p.sector.size()) = p.columns;
    offset += p.sector.size();
    bs.sectors.push_back(std::move(p.sector));
  }
  return bs;
}

}  // namespace internal

const Sector& BlockStructure::sector(int label) const {
  for (const auto& s : sectors) {
    if (s.label == label) return s;
  }
  throw InvalidInput("BlockStructure: no sector with label " + std::to_string(label));
}

Eigen::MatrixXcd BlockStructure::sector_basis(int label) const {
  const Sector& s = sector(label);
  return basis_change.middleCols(s.offset, s.size());
}

Operator BlockStructure::sector_projector(int label) const {
  const Eigen::MatrixXcd b = sector_basis(label);
  return b * b.adjoint();
}

BlockStructure decompose(const OperatorAlgebra& alg, std::uint64_t seed,
                         double tol) {
  DecomposeOptions options;
  options.verify_tol = tol;
  return decompose(alg, seed, options);
}

BlockStructure decompose(const OperatorAlgebra& alg, std::uint64_t seed,
                         const DecomposeOptions& options) {
  check_input(alg);
  const std::vector<Operator> basis = alg.basis();
  std::ostringstream failures;
  for (int attempt = 0; attempt <= options.max_retries; ++attempt) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    Attempt result = try_decompose(alg, basis, s, options);
    if (result.result) return std::move(*result.result);
    failures << "\n  seed " << s << ": " << result.failure;
  }
  throw NumericalError("decompose: certification failed for every seed" +
                       failures.str());
}

VerificationReport verify_structure(const OperatorAlgebra& alg,
                                    const BlockStructure& bs, double tol) {
  if (bs.dim != alg.ambient_dim() || bs.basis_change.rows() != bs.dim ||
      bs.basis_change.cols() != bs.dim) {
    throw DimensionError("verify_structure: structure and algebra dimensions differ");
  }
  VerificationReport r;
  r.tol = tol;
  r.ambient_dim = bs.dim;
  r.algebra_dim = alg.dimension();
  for (const auto& s : bs.sectors) {
    r.sum_nd += s.size();
    r.sum_d2 += s.irrep_dim * s.irrep_dim;
    r.sum_n2 += s.multiplicity * s.multiplicity;
  }
  r.unitarity_residual =
      (bs.basis_change.adjoint() * bs.basis_change - identity(bs.dim)).norm();
  const bool layout_ok = r.sum_nd == bs.dim;
  const std::vector<int> owner = column_sectors(bs);
  for (Index k = 0; k < alg.dimension(); ++k) {
    const Operator z = bs.basis_change.adjoint() * alg.element(k) * bs.basis_change;
    r.algebra_form_residual = std::max(
        r.algebra_form_residual,
        layout_ok ? std::sqrt(form_deviation_sq(z, bs, owner, Side::kAlgebra))
                  : z.norm());
  }
  const OperatorAlgebra comm = commutant(alg);
  r.commutant_dim = comm.dimension();
  for (Index k = 0; k < comm.dimension(); ++k) {
    const Operator z = bs.basis_change.adjoint() * comm.element(k) * bs.basis_change;
    r.commutant_form_residual = std::max(
        r.commutant_form_residual,
        layout_ok ? std::sqrt(form_deviation_sq(z, bs, owner, Side::kCommutant))
                  : z.norm());
  }
  r.passed = layout_ok && r.sum_d2 == r.algebra_dim &&
             r.sum_n2 == r.commutant_dim && r.unitarity_residual < tol &&
             r.algebra_form_residual < tol && r.commutant_form_residual < tol;
  return r;
}

std::vector<NoiselessSubsystem> noiseless_subsystems(const BlockStructure& bs) {
  std::vector<NoiselessSubsystem> out;
  for (const auto& s : bs.sectors) {
    if (s.multiplicity < 2) continue;
    NoiselessSubsystem ns;
    ns.label = s.label;
    ns.ns_dim = s.multiplicity;
    ns.gauge_dim = s.irrep_dim;
    ns.encoder.resize(bs.dim, s.multiplicity);
    for (Index l = 0; l < s.multiplicity; ++l) {
      ns.encoder.col(l) = bs.basis_change.col(bs.column(s, l, 0));
    }
    out.push_back(std::move(ns));
  }
  return out;
}

Operator to_block_basis(const Operator& x, const BlockStructure& bs) {
  require_dim(x, bs.dim, "to_block_basis");
  return bs.basis_change.adjoint() * x * bs.basis_change;
}

double algebra_form_residual(const Operator& x, const BlockStructure& bs) {
  return std::sqrt(form_deviation_sq(to_block_basis(x, bs), bs,
                                     column_sectors(bs), Side::kAlgebra));
}

double commutant_form_residual(const Operator& x, const BlockStructure& bs) {
  return std::sqrt(form_deviation_sq(to_block_basis(x, bs), bs,
                                     column_sectors(bs), Side::kCommutant));
}

StateVector encode_state(const BlockStructure& bs, int label,
                         const StateVector& logical, const StateVector& gauge) {
  const Sector& s = bs.sector(label);
  if (logical.size() != s.multiplicity || gauge.size() != s.irrep_dim) {
    throw DimensionError("encode_state: logical/gauge sizes do not match sector");
  }
  StateVector psi = StateVector::Zero(bs.dim);
  for (Index l = 0; l < s.multiplicity; ++l) {
    for (Index m = 0; m < s.irrep_dim; ++m) {
      psi += logical(l) * gauge(m) * bs.basis_change.col(bs.column(s, l, m));
    }
  }
  return psi;
}

BlockStructure scalar_structure(Index dim) {
  BlockStructure bs;
  bs.dim = dim;
  Sector s;
  s.multiplicity = dim;
  s.irrep_dim = 1;
  bs.sectors.push_back(s);
  bs.basis_change = identity(dim);
  return bs;
}

}  // namespace nsalg
