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

#include "nsalg/algebra.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

#include "internal.h"
#include "span_builder.h"

namespace nsalg {
namespace {

constexpr Index kChunk = 32;
constexpr std::uint64_t kCommutantSeed = 0x6e73616c67ULL;
// Relative eigenvalue gap used to split the generic element's spectrum.
// Merging distinct eigenvalues only enlarges the search space.
constexpr double kCommutantClusterGap = 1e-6;
// Hermitian or anti-hermitian parts below this relative size are dropped.
constexpr double kPartFloor = 1e-10;
constexpr std::uint64_t kFrameSeed = 0x6672616d65ULL;
// Largest off-block weight of a generator tolerated by the block frame.
constexpr double kFrameLeak = 1e-9;

void require_finite(const std::vector<Operator>& ops, const char* what) {
  for (const auto& op : ops) {
    if (!op.allFinite()) {
      throw InvalidInput(std::string(what) + ": operator has non-finite entries");
    }
  }
}

bool hermitian_rel(const Operator& g) {
  return (g - g.adjoint()).norm() <= 1e-14 * std::max(1.0, g.norm());
}

// Generators together with the daggers of the non-hermitian ones.
std::vector<Operator> dagger_closed(const std::vector<Operator>& gens) {
  std::vector<Operator> out;
  out.reserve(2 * gens.size());
  for (const auto& g : gens) {
    out.push_back(g);
    if (!hermitian_rel(g)) out.push_back(g.adjoint());
  }
  return out;
}

// A hermitian element of the algebra generated by `gens` with generic
// spectrum: h1 + c2 h2^2 + c3 h1 h2 h1 for random real combinations h1, h2
// of the hermitian parts of the generators.
Operator generic_hermitian_element(const std::vector<Operator>& gens,
                                   Index dim) {
  std::mt19937_64 rng(kCommutantSeed);
  std::normal_distribution<double> normal;
  std::vector<Operator> parts;
  for (const auto& g : gens) {
    const Operator re = 0.5 * (g + g.adjoint());
    const Operator im = Complex(0, -0.5) * (g - g.adjoint());
    // Rounding leaves hermitian inputs with a ~1e-14 anti-hermitian part;
    // normalizing that noise would push the element out of the algebra.
    const double floor = kPartFloor * std::max(1.0, g.norm());
    if (re.norm() > floor) parts.push_back(re / re.norm());
    if (im.norm() > floor) parts.push_back(im / im.norm());
  }
  Operator h1 = Operator::Zero(dim, dim);
  Operator h2 = Operator::Zero(dim, dim);
  for (const auto& p : parts) {
    h1 += normal(rng) * p;
    h2 += normal(rng) * p;
  }
  const double rms = std::sqrt(static_cast<double>(dim));
  if (h1.norm() > 0) h1 *= rms / h1.norm();
  if (h2.norm() > 0) h2 *= rms / h2.norm();
  std::uniform_real_distribution<double> coef(0.3, 0.7);
  const double c2 = coef(rng);
  const double c3 = coef(rng);
  Operator a = h1 + c2 * (h2 * h2) + c3 * (h1 * h2 * h1);
  return 0.5 * (a + a.adjoint());
}

bool all_scalar(const std::vector<Operator>& gens, Index dim) {
  for (const auto& g : gens) {
    const Complex t = g.trace() / static_cast<double>(dim);
    if ((g - t * identity(dim)).norm() > 1e-14 * std::max(1.0, g.norm())) {
      return false;
    }
  }
  return true;
}


// Orthonormal frame in which every element of the algebra generated by
// `gens` is block diagonal: the eigenbasis of a generic hermitian element
// of the commutant, whose eigenspaces every such element preserves. Closure
// runs on the diagonal blocks only; when the commutant is trivial the frame
// is the identity with a single block.
struct BlockFrame {
  Operator v;  // empty means identity
  std::vector<std::pair<Index, Index>> blocks;  // (start, size)
  Index length = 0;    // sum of size^2
  Index capacity = 0;  // same, the largest possible span dimension

  std::vector<Operator> split(const Operator& x) const {
    const Operator y = v.size() ? Operator(v.adjoint() * x * v) : x;
    std::vector<Operator> out;
    for (const auto& [start, size] : blocks) out.push_back(y.block(start, start, size, size));
    return out;
  }

  Eigen::VectorXcd pack(const std::vector<Operator>& parts) const {
    Eigen::VectorXcd out(length);
    Index off = 0;
    for (const auto& p : parts) {
      out.segment(off, p.size()) = Eigen::Map<const Eigen::VectorXcd>(p.data(), p.size());
      off += p.size();
    }
    return out;
  }

  Operator unpack(const Eigen::Ref<const Eigen::VectorXcd>& packed) const {
    const Index dim = blocks.back().first + blocks.back().second;
    Operator y = Operator::Zero(dim, dim);
    Index off = 0;
    for (const auto& [start, size] : blocks) {
      y.block(start, start, size, size) = Eigen::Map<const Operator>(packed.data() + off, size, size);
      off += size * size;
    }
    return v.size() ? Operator(v * y * v.adjoint()) : y;
  }
};

BlockFrame trivial_frame(Index dim) {
  BlockFrame f;
  f.blocks = {{0, dim}};
  f.length = f.capacity = dim * dim;
  return f;
}

BlockFrame block_frame(const std::vector<Operator>& generators,
                       const std::vector<Operator>& gens, Index dim) {
  const OperatorAlgebra comm = commutant(generators);
  if (comm.dimension() <= 1) return trivial_frame(dim);
  std::mt19937_64 rng(kFrameSeed);
  std::normal_distribution<double> normal;
  Eigen::VectorXcd c(comm.dimension());
  for (Index k = 0; k < c.size(); ++k) c(k) = Complex(normal(rng), normal(rng));
  const Operator x = unvec(comm.stacked() * c, dim);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(x + x.adjoint());
  const auto clusters = internal::cluster_spectrum(es.eigenvalues(), kCommutantClusterGap);
  if (clusters.size() <= 1) return trivial_frame(dim);

  BlockFrame f;
  f.v = es.eigenvectors();
  f.blocks = clusters;
  for (const auto& b : clusters) f.length += b.second * b.second;
  f.capacity = f.length;
  // Every generator must live on the diagonal blocks; otherwise the
  // commutant was not resolved well enough and the plain closure is used.
  for (const auto& g : gens) {
    const Operator y = f.v.adjoint() * g * f.v;
    double off = 0.0;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      for (std::size_t j = 0; j < clusters.size(); ++j) {
        if (i == j) continue;
        off += y.block(clusters[i].first, clusters[j].first, clusters[i].second,
                       clusters[j].second).squaredNorm();
      }
    }
    if (std::sqrt(off) > kFrameLeak * std::max(1.0, g.norm())) {
      return trivial_frame(dim);
    }
  }
  return f;
}
}  // namespace

OperatorAlgebra::OperatorAlgebra(Index dim, Eigen::MatrixXcd stacked,
                                 bool unital)
    : dim_(dim), stacked_(std::move(stacked)), unital_(unital) {
  if (stacked_.rows() != dim * dim) {
    throw DimensionError("OperatorAlgebra: basis length must be dim^2");
  }
}

OperatorAlgebra OperatorAlgebra::from_spanning_set(
    const std::vector<Operator>& ops, bool unital, double tol) {
  if (ops.empty()) throw InvalidInput("from_spanning_set: empty operator list");
  const Index dim = common_dim(ops, "from_spanning_set");
  require_finite(ops, "from_spanning_set");
  internal::SpanBuilder span(dim * dim, tol);
  Eigen::MatrixXcd batch(dim * dim, static_cast<Index>(ops.size()) + (unital ? 1 : 0));
  Index col = 0;
  if (unital) batch.col(col++) = vec(identity(dim));
  for (const auto& op : ops) batch.col(col++) = vec(op);
  span.add(std::move(batch));
  return OperatorAlgebra(dim, std::move(span).take(), unital);
}

OperatorAlgebra OperatorAlgebra::full(Index dim) {
  return OperatorAlgebra(dim, Eigen::MatrixXcd::Identity(dim * dim, dim * dim),
                         true);
}

OperatorAlgebra OperatorAlgebra::scalars(Index dim) {
  Eigen::MatrixXcd s = vec(identity(dim)) / std::sqrt(static_cast<double>(dim));
  return OperatorAlgebra(dim, std::move(s), true);
}

Eigen::Map<const Operator> OperatorAlgebra::element(Index k) const {
  return Eigen::Map<const Operator>(stacked_.col(k).data(), dim_, dim_);
}

std::vector<Operator> OperatorAlgebra::basis() const {
  std::vector<Operator> out;
  out.reserve(dimension());
  for (Index k = 0; k < dimension(); ++k) out.emplace_back(element(k));
  return out;
}

Operator OperatorAlgebra::project(const Operator& x) const {
  require_dim(x, dim_, "OperatorAlgebra::project");
  const Eigen::VectorXcd v = vec(x);
  const Eigen::VectorXcd p = stacked_ * (stacked_.adjoint() * v);
  return unvec(p, dim_);
}

double OperatorAlgebra::residual(const Operator& x) const {
  require_dim(x, dim_, "OperatorAlgebra::residual");
  Eigen::VectorXcd r = vec(x);
  for (int pass = 0; pass < 2; ++pass) {
    const Eigen::VectorXcd c = stacked_.adjoint() * r;
    r.noalias() -= stacked_ * c;
  }
  return r.norm();
}

bool OperatorAlgebra::contains(const Operator& x, double tol) const {
  return residual(x) <= tol;
}

double OperatorAlgebra::orthonormality_error() const {
  if (dimension() == 0) return 0.0;
  const Eigen::MatrixXcd g = stacked_.adjoint() * stacked_;
  return (g - Eigen::MatrixXcd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

double OperatorAlgebra::dagger_closure_error() const {
  if (dimension() == 0) return 0.0;
  Eigen::MatrixXcd daggers(stacked_.rows(), dimension());
  for (Index k = 0; k < dimension(); ++k) {
    daggers.col(k) = vec(element(k).adjoint());
  }
  for (int pass = 0; pass < 2; ++pass) {
    const Eigen::MatrixXcd c = stacked_.adjoint() * daggers;
    daggers.noalias() -= stacked_ * c;
  }
  return daggers.colwise().norm().maxCoeff();
}

double OperatorAlgebra::product_closure_error() const {
  double worst = 0.0;
  for (Index i = 0; i < dimension(); ++i) {
    for (Index j = 0; j < dimension(); ++j) {
      worst = std::max(worst, residual(element(i) * element(j)));
    }
  }
  return worst;
}

double OperatorAlgebra::identity_residual() const {
  return residual(identity(dim_));
}

OperatorAlgebra generate_algebra(const std::vector<Operator>& generators,
                                 bool unital, double tol) {
  if (generators.empty()) {
    throw InvalidInput("generate_algebra: generator list is empty");
  }
  const Index dim = common_dim(generators, "generate_algebra");
  require_finite(generators, "generate_algebra");
  const std::vector<Operator> gens = dagger_closed(generators);
  const BlockFrame frame = block_frame(generators, gens, dim);
  const Index len = frame.length;

  // Generators restricted to the diagonal blocks of the frame.
  std::vector<std::vector<Operator>> gen_blocks;
  std::vector<double> gen_norms;
  for (const auto& g : gens) {
    gen_blocks.push_back(frame.split(g));
    gen_norms.push_back(g.norm());
  }

  internal::SpanBuilder span(len, tol);
  {
    Eigen::MatrixXcd seed(len, static_cast<Index>(gens.size()) + (unital ? 1 : 0));
    Index col = 0;
    if (unital) seed.col(col++) = frame.pack(frame.split(identity(dim)));
    for (const auto& gb : gen_blocks) seed.col(col++) = frame.pack(gb);
    span.add(std::move(seed));
  }

  // Span of words in the generators is closed once it is closed under left
  // multiplication by each generator.
  Index next_basis = 0;
  std::size_t next_gen = 0;
  Eigen::MatrixXcd chunk(len, kChunk);
  std::vector<double> scale;
  while (next_basis < span.size() && span.size() < frame.capacity) {
    Index filled = 0;
    scale.clear();
    while (filled < kChunk && next_basis < span.size()) {
      const auto& gb = gen_blocks[next_gen];
      const auto col = span.basis().col(next_basis);
      Index off = 0;
      for (std::size_t b = 0; b < frame.blocks.size(); ++b) {
        const Index sz = frame.blocks[b].second;
        const Eigen::Map<const Operator> blk(col.data() + off, sz, sz);
        Eigen::Map<Operator>(chunk.col(filled).data() + off, sz, sz).noalias() = gb[b] * blk;
        off += sz * sz;
      }
      ++filled;
      scale.push_back(gen_norms[next_gen]);
      if (++next_gen == gens.size()) {
        next_gen = 0;
        ++next_basis;
      }
    }
    span.add(chunk.leftCols(filled), scale);
  }
  const Eigen::MatrixXcd packed = std::move(span).take();
  Eigen::MatrixXcd stacked(dim * dim, packed.cols());
  for (Index c = 0; c < packed.cols(); ++c) stacked.col(c) = vec(frame.unpack(packed.col(c)));
  return OperatorAlgebra(dim, std::move(stacked), unital);
}

OperatorAlgebra commutant(const std::vector<Operator>& generators, double tol) {
  if (generators.empty()) {
    throw InvalidInput("commutant: generator list is empty");
  }
  const Index dim = common_dim(generators, "commutant");
  require_finite(generators, "commutant");
  if (all_scalar(generators, dim)) return OperatorAlgebra::full(dim);

  const std::vector<Operator> gens = dagger_closed(generators);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      generic_hermitian_element(generators, dim));
  const Eigen::MatrixXcd& v = es.eigenvectors();
  const auto clusters = internal::cluster_spectrum(es.eigenvalues(), kCommutantClusterGap);

  // Unknowns: entries (p, q) of a matrix that is block diagonal in the
  // eigenbasis of the generic element.
  std::vector<std::pair<Index, Index>> unknowns;
  for (const auto& [start, size] : clusters) {
    for (Index q = start; q < start + size; ++q) {
      for (Index p = start; p < start + size; ++p) unknowns.emplace_back(p, q);
    }
  }
  const Index k = static_cast<Index>(unknowns.size());

  // Gram matrix of the maps E_pq -> [g, E_pq], assembled entrywise:
  // <[g,E_pq],[g,E_rs]> = d_qs (g^+g)_pr + d_pr (gg^+)_sq
  //                       - conj(g_rp) g_sq - conj(g_qs) g_pr.
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(k, k);
  for (const auto& g0 : gens) {
    const Operator g = v.adjoint() * g0 * v;
    const Operator gg = g.adjoint() * g;
    const Operator ggd = g * g.adjoint();
    for (Index b = 0; b < k; ++b) {
      const auto [r, s] = unknowns[b];
      for (Index a = 0; a < k; ++a) {
        const auto [p, q] = unknowns[a];
        Complex m = -std::conj(g(r, p)) * g(s, q) - std::conj(g(q, s)) * g(p, r);
        if (q == s) m += gg(p, r);
        if (p == r) m += ggd(s, q);
        gram(a, b) += m;
      }
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> gs(gram);
  const Eigen::VectorXd& gev = gs.eigenvalues();
  // Gram eigenvalues are ||[g, X]||^2 summed over generators; measure them
  // against the generator scale so an all-null Gram is not rescaled to noise.
  double scale = 0.0;
  for (const auto& g : gens) scale += g.squaredNorm();
  const double top = std::max(gev(k - 1), scale);
  Index nullity = 0;
  while (nullity < k && gev(nullity) <= tol * top) ++nullity;

  Eigen::MatrixXcd stacked(dim * dim, nullity);
  Operator x(dim, dim);
  for (Index c = 0; c < nullity; ++c) {
    x.setZero();
    for (Index a = 0; a < k; ++a) {
      x(unknowns[a].first, unknowns[a].second) = gs.eigenvectors()(a, c);
    }
    stacked.col(c) = vec(v * x * v.adjoint());
  }
  return OperatorAlgebra(dim, std::move(stacked), true);
}

OperatorAlgebra commutant(const OperatorAlgebra& alg, double tol) {
  if (alg.dimension() == 0) return OperatorAlgebra::full(alg.ambient_dim());
  return commutant(alg.basis(), tol);
}

OperatorAlgebra center(const OperatorAlgebra& alg, double tol) {
  const OperatorAlgebra comm = commutant(alg, tol);
  const Eigen::MatrixXcd& qa = alg.stacked();
  const Eigen::MatrixXcd& qb = comm.stacked();
  const double accept = std::sqrt(tol);
  // Vectors of the smaller basis whose image stays inside the other span.
  const bool a_small = qa.cols() <= qb.cols();
  const Eigen::MatrixXcd& small = a_small ? qa : qb;
  const Eigen::MatrixXcd& large = a_small ? qb : qa;
  const Eigen::MatrixXcd overlap = large.adjoint() * small;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(overlap, Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  std::vector<Index> keep;
  for (Index i = 0; i < s.size(); ++i) {
    const double leak = std::sqrt(std::max(0.0, 1.0 - s(i) * s(i)));
    if (leak <= accept) keep.push_back(i);
  }
  Eigen::MatrixXcd stacked(qa.rows(), static_cast<Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) {
    stacked.col(static_cast<Index>(c)) = small * svd.matrixV().col(keep[c]);
  }
  return OperatorAlgebra(alg.ambient_dim(), std::move(stacked), alg.unital());
}

double containment_residual(const OperatorAlgebra& a, const OperatorAlgebra& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionError("containment_residual: ambient dimensions differ");
  }
  if (a.dimension() == 0) return 0.0;
  if (b.dimension() == 0) return a.stacked().colwise().norm().maxCoeff();
  Eigen::MatrixXcd r = a.stacked();
  for (int pass = 0; pass < 2; ++pass) {
    const Eigen::MatrixXcd c = b.stacked().adjoint() * r;
    r.noalias() -= b.stacked() * c;
  }
  return r.colwise().norm().maxCoeff();
}

bool same_subspace(const OperatorAlgebra& a, const OperatorAlgebra& b,
                   double tol) {
  return a.dimension() == b.dimension() && containment_residual(a, b) <= tol &&
         containment_residual(b, a) <= tol;
}

}  // namespace nsalg
