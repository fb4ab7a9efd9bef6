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

#include "nsalg/collective.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

#include "internal.h"
#include "nsalg/algebra.h"
#include "nsalg/linalg.h"

namespace nsalg {
namespace {

using RealMatrix = Eigen::MatrixXd;

constexpr double kCertifyTol = 1e-8;
constexpr int kDenseClusterQubits = 6;
constexpr Index kDirectCheckDim = 256;

// Qubit q (0 = leftmost factor) is bit N-1-q of a basis index.
inline Index bit_mask(int q, int n) { return Index{1} << (n - 1 - q); }

enum class Flip { kX, kZ, kLowerMinusRaise };

// sum_{q in [first, first+count)} op_q applied to the columns of u, for the
// real operators X, Z and sigma_- - sigma_+ (= -i Y).
RealMatrix apply_sum(const RealMatrix& u, int first, int count, int n, Flip f) {
  RealMatrix out = RealMatrix::Zero(u.rows(), u.cols());
  for (Index x = 0; x < u.rows(); ++x) {
    for (int q = first; q < first + count; ++q) {
      const Index m = bit_mask(q, n);
      const bool one = (x & m) != 0;
      switch (f) {
        case Flip::kX: out.row(x ^ m) += u.row(x); break;
        case Flip::kZ: out.row(x) += (one ? -1.0 : 1.0) * u.row(x); break;
        // sigma_- |0> = |1>, sigma_+ |1> = |0>.
        case Flip::kLowerMinusRaise: out.row(x ^ m) += (one ? -1.0 : 1.0) * u.row(x); break;
      }
    }
  }
  return out;
}

// S_- = sum_q sigma_-^(q) on a state vector.
Eigen::VectorXd lower(const Eigen::VectorXd& v, int n) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(v.size());
  for (Index x = 0; x < v.size(); ++x) {
    if (v(x) == 0.0) continue;
    for (int q = 0; q < n; ++q) {
      const Index m = bit_mask(q, n);
      if ((x & m) == 0) out(x | m) += v(x);
    }
  }
  return out;
}

int popcount(Index x) { return std::popcount(static_cast<std::uint64_t>(x)); }

__extension__ using Int128 = __int128;

// Orthonormal basis of the kernel of S_+ on the Hamming-weight-a states,
// as dim-length vectors.
std::vector<Eigen::VectorXd> highest_weight_vectors(int n, int a) {
  const Index dim = Index{1} << n;
  std::vector<Index> upper;  // weight a
  std::vector<Index> lower_states;  // weight a - 1
  std::vector<Index> pos(dim, -1);
  for (Index x = 0; x < dim; ++x) {
    if (popcount(x) == a) upper.push_back(x);
    if (popcount(x) == a - 1) {
      pos[x] = static_cast<Index>(lower_states.size());
      lower_states.push_back(x);
    }
  }
  const Index cols = static_cast<Index>(upper.size());
  RealMatrix kernel;
  if (a == 0) {
    kernel = RealMatrix::Identity(cols, cols);
  } else {
    RealMatrix raise = RealMatrix::Zero(static_cast<Index>(lower_states.size()), cols);
    for (Index c = 0; c < cols; ++c) {
      for (int q = 0; q < n; ++q) {
        const Index m = bit_mask(q, n);
        if (upper[c] & m) raise(pos[upper[c] ^ m], c) += 1.0;
      }
    }
    // Eigenvalues of S_- S_+ on this weight space are integers (J' - M)(J' + M + 1).
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(raise.transpose() * raise);
    Index k = 0;
    while (k < cols && es.eigenvalues()(k) < 0.5) ++k;
    kernel = es.eigenvectors().leftCols(k);
  }
  std::vector<Eigen::VectorXd> out;
  for (Index j = 0; j < kernel.cols(); ++j) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
    for (Index c = 0; c < cols; ++c) v(upper[c]) = kernel(c, j);
    // Fix the sign: first entry of largest magnitude positive.
    Index arg = 0;
    v.cwiseAbs().maxCoeff(&arg);
    if (v(arg) < 0) v = -v;
    out.push_back(std::move(v));
  }
  return out;
}

Int128 binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Residual of the cluster generators against the block form, computed in
// real arithmetic (U is real for the constructions here).
double certify_real(const RealMatrix& u, const BlockStructure& bs, int n,
                    const std::vector<int>& sizes) {
  double worst = (u.transpose() * u - RealMatrix::Identity(u.rows(), u.cols())).norm();
  int first = 0;
  for (int size : sizes) {
    for (Flip f : {Flip::kX, Flip::kZ, Flip::kLowerMinusRaise}) {
      const RealMatrix z = u.transpose() * apply_sum(u, first, size, n, f);
      worst = std::max(worst, internal::block_form_residual(z.cast<Complex>(), bs, true));
    }
    first += size;
  }
  return worst;
}

void check_qubits(int n, int limit, const char* what) {
  if (n < 1 || n > limit) {
    throw InvalidInput(std::string(what) + ": qubit count must be in [1, " +
                       std::to_string(limit) + "], got " + std::to_string(n));
  }
}

}  // namespace

CollectiveSystem collective_ops(int num_qubits) {
  check_qubits(num_qubits, kMaxCollectiveQubits, "collective_ops");
  const int n = num_qubits;
  const Index dim = Index{1} << n;
  CollectiveSystem sys;
  sys.num_qubits = n;
  sys.sx = Operator::Zero(dim, dim);
  sys.sy = Operator::Zero(dim, dim);
  sys.sz = Operator::Zero(dim, dim);
  for (Index x = 0; x < dim; ++x) {
    for (int q = 0; q < n; ++q) {
      const Index m = bit_mask(q, n);
      const bool one = (x & m) != 0;
      sys.sz(x, x) += one ? -1.0 : 1.0;
      sys.sx(x ^ m, x) += 1.0;
      // Y|0> = i|1>, Y|1> = -i|0>.
      sys.sy(x ^ m, x) += one ? Complex(0, -1) : Complex(0, 1);
    }
  }
  return sys;
}

bool Permutation::is_identity() const {
  for (int j = 0; j < size(); ++j) {
    if (image[j] != j) return false;
  }
  return true;
}

Permutation Permutation::parse(std::string_view text, int num_qubits) {
  if (num_qubits < 1) throw InvalidInput("permutation: qubit count must be positive");
  Permutation p;
  p.image.resize(num_qubits);
  std::iota(p.image.begin(), p.image.end(), 0);
  std::vector<bool> seen(num_qubits, false);
  const std::string src(text);
  auto fail = [&](const std::string& why) {
    throw InvalidInput("malformed permutation \"" + src + "\": " + why);
  };
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
  };
  skip_space();
  while (i < src.size()) {
    if (src[i] != '(') fail("expected '('");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      if (i >= src.size()) fail("unterminated cycle");
      if (src[i] == ')') {
        ++i;
        break;
      }
      if (src[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(src[i]))) fail("unexpected character");
      int v = 0;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        v = v * 10 + (src[i] - '0');
        if (v > num_qubits) fail("entry exceeds qubit count " + std::to_string(num_qubits));
        ++i;
      }
      if (v < 1) fail("entries are 1-based");
      if (seen[v - 1]) fail("entry " + std::to_string(v) + " repeated");
      seen[v - 1] = true;
      cycle.push_back(v - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      p.image[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    skip_space();
  }
  return p;
}

std::string Permutation::str() const {
  std::ostringstream out;
  std::vector<bool> done(image.size(), false);
  bool any = false;
  for (int j = 0; j < size(); ++j) {
    if (done[j] || image[j] == j) continue;
    any = true;
    out << '(';
    int k = j;
    bool first = true;
    while (!done[k]) {
      done[k] = true;
      out << (first ? "" : " ") << k + 1;
      first = false;
      k = image[k];
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

Operator perm_rep(int num_qubits, const Permutation& perm) {
  check_qubits(num_qubits, kMaxCollectiveQubits, "perm_rep");
  if (perm.size() != num_qubits) {
    throw InvalidInput("perm_rep: permutation acts on " + std::to_string(perm.size()) +
                       " points, expected " + std::to_string(num_qubits));
  }
  std::vector<bool> hit(num_qubits, false);
  for (int v : perm.image) {
    if (v < 0 || v >= num_qubits || hit[v]) throw InvalidInput("perm_rep: not a permutation");
    hit[v] = true;
  }
  const int n = num_qubits;
  const Index dim = Index{1} << n;
  Operator u = Operator::Zero(dim, dim);
  for (Index x = 0; x < dim; ++x) {
    Index y = 0;
    for (int j = 0; j < n; ++j) {
      if (x & bit_mask(j, n)) y |= bit_mask(perm.image[j], n);
    }
    u(y, x) = 1.0;
  }
  return u;
}

Index predicted_multiplicity(int num_qubits, int two_j) {
  if (num_qubits < 0 || two_j < 0 || two_j > num_qubits || (num_qubits - two_j) % 2 != 0) {
    return 0;
  }
  const int a = (num_qubits - two_j) / 2;
  const Int128 num = static_cast<Int128>(two_j + 1) * binomial(num_qubits, a);
  const Int128 den = num_qubits - a + 1;
  return static_cast<Index>(num / den);
}

std::string spin_label(int two_j) {
  return two_j % 2 == 0 ? "J=" + std::to_string(two_j / 2)
                        : "J=" + std::to_string(two_j) + "/2";
}

SchurWeylStructure schur_weyl_decompose(int num_qubits, std::uint64_t seed) {
  check_qubits(num_qubits, kMaxDecomposeQubits, "schur_weyl_decompose");
  const int n = num_qubits;
  const Index dim = Index{1} << n;
  std::vector<internal::PendingSector> pending;
  for (int two_j = n % 2; two_j <= n; two_j += 2) {
    const int a = (n - two_j) / 2;
    const std::vector<Eigen::VectorXd> hw = highest_weight_vectors(n, a);
    const Index mult = static_cast<Index>(hw.size());
    if (mult != predicted_multiplicity(n, two_j)) {
      throw NumericalError("schur_weyl_decompose: " + spin_label(two_j) + " has multiplicity " +
                           std::to_string(mult) + ", expected " +
                           std::to_string(predicted_multiplicity(n, two_j)));
    }
    const Index d = two_j + 1;
    internal::PendingSector p;
    p.sector.tag = spin_label(two_j);
    p.sector.multiplicity = mult;
    p.sector.irrep_dim = d;
    p.columns.resize(dim, mult * d);
    for (Index l = 0; l < mult; ++l) {
      Eigen::VectorXd v = hw[l];
      for (Index m = 0; m < d; ++m) {
        p.columns.col(l * d + m) = v.cast<Complex>();
        if (m + 1 < d) {
          v = lower(v, n);
          v /= v.norm();
        }
      }
    }
    pending.push_back(std::move(p));
  }
  SchurWeylStructure out;
  out.structure = internal::assemble_structure(dim, std::move(pending), seed);
  for (const auto& s : out.structure.sectors) {
    out.two_j.push_back(static_cast<int>(s.irrep_dim) - 1);
  }
  out.certification_residual =
      certify_real(out.structure.basis_change.real(), out.structure, n, {n});
  if (out.certification_residual > kCertifyTol) {
    throw NumericalError("schur_weyl_decompose: block-form residual " +
                         std::to_string(out.certification_residual));
  }
  return out;
}

std::vector<CodeState> three_qubit_code_states() {
  // Basis index of |q1 q2 q3> is 4 q1 + 2 q2 + q3.
  auto ket = [](const char* bits) {
    StateVector v = StateVector::Zero(8);
    v(std::stoi(bits, nullptr, 2)) = 1.0;
    return v;
  };
  const double r2 = 1.0 / std::sqrt(2.0);
  const double r6 = 2.0 / std::sqrt(6.0);
  std::vector<CodeState> out;
  out.push_back({1, 1, "psi_1^1", r2 * (ket("010") - ket("100"))});
  out.push_back({1, 2, "psi_2^1", r2 * (ket("011") - ket("101"))});
  out.push_back({2, 1, "psi_1^2", r6 * (0.5 * (ket("010") + ket("100")) - ket("001"))});
  out.push_back({2, 2, "psi_2^2", r6 * (ket("110") - 0.5 * (ket("011") + ket("101")))});
  return out;
}

std::vector<Operator> cluster_generators(const std::vector<int>& cluster_sizes) {
  if (cluster_sizes.empty()) throw InvalidInput("clusters: no cluster sizes given");
  int n = 0;
  for (int s : cluster_sizes) {
    if (s < 1) throw InvalidInput("clusters: cluster sizes must be positive");
    n += s;
  }
  check_qubits(n, kMaxDecomposeQubits, "clusters");
  std::vector<Operator> gens;
  int first = 0;
  for (int size : cluster_sizes) {
    Operator sx = Operator::Zero(Index{1} << n, Index{1} << n);
    Operator sy = sx;
    Operator sz = sx;
    for (int q = first; q < first + size; ++q) {
      sx += embed_single(pauli_x(), q, n);
      sy += embed_single(pauli_y(), q, n);
      sz += embed_single(pauli_z(), q, n);
    }
    gens.push_back(std::move(sx));
    gens.push_back(std::move(sy));
    gens.push_back(std::move(sz));
    first += size;
  }
  return gens;
}

ClusterReport cluster_decompose(const std::vector<int>& cluster_sizes, std::uint64_t seed) {
  if (cluster_sizes.empty()) throw InvalidInput("clusters: no cluster sizes given");
  int n = 0;
  for (int s : cluster_sizes) {
    if (s < 1) throw InvalidInput("clusters: cluster sizes must be positive");
    n += s;
  }
  check_qubits(n, kMaxDecomposeQubits, "clusters");
  const Index dim = Index{1} << n;

  ClusterReport r;
  r.cluster_sizes = cluster_sizes;
  r.seed = seed;

  // Per-cluster (n_J, d_J) from the multiplicity formula.
  std::vector<std::vector<ClusterSectorInfo>> per_cluster;
  for (int s : cluster_sizes) {
    std::vector<ClusterSectorInfo> list;
    for (int two_j = s % 2; two_j <= s; two_j += 2) {
      list.push_back({predicted_multiplicity(s, two_j), two_j + 1});
    }
    per_cluster.push_back(std::move(list));
  }
  std::vector<ClusterSectorInfo> predicted{{1, 1}};
  for (const auto& list : per_cluster) {
    std::vector<ClusterSectorInfo> next;
    for (const auto& a : predicted) {
      for (const auto& b : list) {
        next.push_back({a.multiplicity * b.multiplicity, a.irrep_dim * b.irrep_dim});
      }
    }
    predicted = std::move(next);
  }

  if (n <= kDenseClusterQubits) {
    r.method = "dense";
    const std::vector<Operator> gens = cluster_generators(cluster_sizes);
    const OperatorAlgebra alg = generate_algebra(gens);
    r.structure = decompose(alg, seed);
    for (const auto& g : gens) {
      r.certification_residual =
          std::max(r.certification_residual, algebra_form_residual(g, r.structure));
    }
  } else {
    r.method = "product";
    std::vector<SchurWeylStructure> parts;
    for (int s : cluster_sizes) {
      parts.push_back(schur_weyl_decompose(s, seed));
      r.certification_residual =
          std::max(r.certification_residual, parts.back().certification_residual);
    }
    const std::size_t nc = parts.size();
    std::vector<std::size_t> choice(nc, 0);
    std::vector<internal::PendingSector> pending;
    for (;;) {
      internal::PendingSector p;
      Index mult = 1;
      Index irrep = 1;
      std::string tag;
      for (std::size_t c = 0; c < nc; ++c) {
        const Sector& s = parts[c].structure.sectors[choice[c]];
        mult *= s.multiplicity;
        irrep *= s.irrep_dim;
        tag += (c ? " x " : "") + s.tag;
      }
      p.sector.tag = tag;
      p.sector.multiplicity = mult;
      p.sector.irrep_dim = irrep;
      p.columns.resize(dim, mult * irrep);
      for (Index l = 0; l < mult; ++l) {
        for (Index m = 0; m < irrep; ++m) {
          // Mixed-radix split of (l, m) with cluster 0 most significant.
          Operator v = Operator::Ones(1, 1);
          Index lr = l;
          Index mr = m;
          std::vector<Index> lam(nc), mu(nc);
          for (std::size_t c = nc; c-- > 0;) {
            const Sector& s = parts[c].structure.sectors[choice[c]];
            lam[c] = lr % s.multiplicity;
            lr /= s.multiplicity;
            mu[c] = mr % s.irrep_dim;
            mr /= s.irrep_dim;
          }
          for (std::size_t c = 0; c < nc; ++c) {
            const BlockStructure& bs = parts[c].structure;
            const Sector& s = bs.sectors[choice[c]];
            v = kron(v, bs.basis_change.col(bs.column(s, lam[c], mu[c])));
          }
          p.columns.col(l * irrep + m) = v.col(0);
        }
      }
      pending.push_back(std::move(p));
      std::size_t c = nc;
      while (c-- > 0) {
        if (++choice[c] < parts[c].structure.sectors.size()) break;
        choice[c] = 0;
      }
      if (c == static_cast<std::size_t>(-1)) break;
    }
    r.structure = internal::assemble_structure(dim, std::move(pending), seed);
    if (dim <= kDirectCheckDim) {
      r.certification_residual = std::max(
          r.certification_residual,
          certify_real(r.structure.basis_change.real(), r.structure, n, cluster_sizes));
    }
  }
  if (r.certification_residual > kCertifyTol) {
    throw NumericalError("cluster_decompose: block-form residual " +
                         std::to_string(r.certification_residual));
  }

  for (const auto& s : r.structure.sectors) {
    r.sectors.push_back({s.multiplicity, s.irrep_dim});
    if (s.multiplicity >= 2) r.ns_dims.push_back(s.multiplicity);
    r.max_ns_dim = std::max(r.max_ns_dim, s.multiplicity);
  }
  std::sort(r.ns_dims.begin(), r.ns_dims.end());
  auto key = [](std::vector<ClusterSectorInfo> v) {
    std::vector<std::pair<Index, Index>> out;
    for (const auto& s : v) out.emplace_back(s.multiplicity, s.irrep_dim);
    std::sort(out.begin(), out.end());
    return out;
  };
  r.predicted = predicted;
  r.matches_prediction = key(r.sectors) == key(predicted);
  return r;
}

}  // namespace nsalg
