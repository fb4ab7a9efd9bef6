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

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

namespace nsalg::testing {

Eigen::VectorXcd vec_of(const Operator& a) {
  return Eigen::Map<const Eigen::VectorXcd>(a.data(), a.size());
}

Index svd_rank(const Eigen::MatrixXcd& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  Index r = 0;
  for (Index i = 0; i < s.size(); ++i) {
    if (s(i) > rel_tol * s(0)) ++r;
  }
  return r;
}

Eigen::MatrixXcd brute_commutant(const std::vector<Operator>& gens, double rel_tol) {
  const Index d = gens.front().rows();
  const Operator id = Operator::Identity(d, d);
  std::vector<Operator> all = gens;
  for (const auto& g : gens) all.push_back(g.adjoint());
  Eigen::MatrixXcd big(static_cast<Index>(all.size()) * d * d, d * d);
  for (std::size_t k = 0; k < all.size(); ++k) {
    // vec(gX - Xg) = (I (x) g - g^T (x) I) vec(X)
    big.middleRows(static_cast<Index>(k) * d * d, d * d) =
        Eigen::kroneckerProduct(id, all[k]) - Eigen::kroneckerProduct(all[k].transpose(), id);
  }
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(big, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double top = s.size() > 0 ? s(0) : 0.0;
  Index rank = 0;
  for (Index i = 0; i < s.size(); ++i) {
    if (s(i) > rel_tol * std::max(top, 1.0)) ++rank;
  }
  return svd.matrixV().rightCols(d * d - rank);
}

Index brute_algebra_dimension(const std::vector<Operator>& gens) {
  const Index d = gens.front().rows();
  std::vector<Operator> letters = gens;
  for (const auto& g : gens) letters.push_back(g.adjoint());
  std::vector<Operator> words = {Operator::Identity(d, d)};
  std::vector<Operator> frontier = words;
  Index rank = 1;
  auto stack = [&](const std::vector<Operator>& ops) {
    Eigen::MatrixXcd m(d * d, static_cast<Index>(ops.size()));
    for (std::size_t k = 0; k < ops.size(); ++k) {
      m.col(static_cast<Index>(k)) = vec_of(ops[k]) / std::max(1e-300, ops[k].norm());
    }
    return m;
  };
  while (true) {
    std::vector<Operator> next;
    for (const auto& w : frontier) {
      for (const auto& l : letters) {
        std::vector<Operator> trial = words;
        trial.push_back(w * l);
        const Index r = svd_rank(stack(trial));
        if (r > rank) {
          words.push_back(w * l);
          next.push_back(w * l);
          rank = r;
        }
      }
    }
    if (next.empty()) return rank;
    frontier = std::move(next);
  }
}

double subspace_residual(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  const Eigen::MatrixXcd r = a - b * (b.adjoint() * a);
  double worst = 0.0;
  for (Index j = 0; j < r.cols(); ++j) worst = std::max(worst, r.col(j).norm());
  return worst;
}

Operator gaussian(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Operator m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) m(i, j) = Complex(n(rng), n(rng));
  }
  return m;
}

Operator haar_unitary(Index dim, Rng& rng) {
  const Operator g = gaussian(dim, dim, rng);
  Eigen::HouseholderQR<Operator> qr(g);
  Operator q = qr.householderQ();
  const Operator r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < dim; ++j) {
    const Complex dj = r(j, j);
    q.col(j) *= std::abs(dj) > 0 ? dj / std::abs(dj) : Complex(1.0);
  }
  return q;
}

Operator random_hermitian_matrix(Index dim, Rng& rng) {
  const Operator g = gaussian(dim, dim, rng);
  return (g + g.adjoint()) / 2.0;
}

PlantedAlgebra planted_algebra(const std::vector<std::pair<Index, Index>>& sectors, Rng& rng) {
  PlantedAlgebra p;
  p.sectors = sectors;
  for (const auto& [n, d] : sectors) {
    p.dim += n * d;
    p.algebra_dim += d * d;
    p.commutant_dim += n * n;
  }
  p.w = haar_unitary(p.dim, rng);
  for (int g = 0; g < 2; ++g) {
    Operator block = Operator::Zero(p.dim, p.dim);
    Index off = 0;
    for (const auto& [n, d] : sectors) {
      const Operator m = gaussian(d, d, rng);
      block.block(off, off, n * d, n * d) = Eigen::kroneckerProduct(Operator::Identity(n, n), m);
      off += n * d;
    }
    const Operator a = p.w * block * p.w.adjoint();
    p.generators.push_back(a);
    p.generators.push_back(a.adjoint());
  }
  return p;
}

std::vector<std::pair<Index, Index>> random_sector_list(Index max_dim, Rng& rng) {
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<int> small(1, 3);
  while (true) {
    std::vector<std::pair<Index, Index>> out;
    Index total = 0;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
      const Index n = small(rng);
      const Index d = small(rng);
      out.emplace_back(n, d);
      total += n * d;
    }
    if (total >= 2 && total <= max_dim) return out;
  }
}

Operator permutation_matrix(const std::vector<int>& pi) {
  const int n = static_cast<int>(pi.size());
  const Index dim = Index{1} << n;
  Operator p = Operator::Zero(dim, dim);
  for (Index x = 0; x < dim; ++x) {
    Index y = 0;
    for (int j = 0; j < n; ++j) {
      const Index bit = (x >> (n - 1 - j)) & 1;
      y |= bit << (n - 1 - pi[static_cast<std::size_t>(j)]);
    }
    p(y, x) = 1.0;
  }
  return p;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Operator collective(int axis, int n) {
  Operator s(2, 2);
  if (axis == 0) s << 0, 1, 1, 0;
  if (axis == 1) s << 0, Complex(0, -1), Complex(0, 1), 0;
  if (axis == 2) s << 1, 0, 0, -1;
  const Index dim = Index{1} << n;
  Operator total = Operator::Zero(dim, dim);
  for (int q = 0; q < n; ++q) {
    Operator term = Operator::Identity(1, 1);
    for (int j = 0; j < n; ++j) {
      const Operator f = j == q ? s : Operator::Identity(2, 2);
      term = Eigen::kroneckerProduct(term, f).eval();
    }
    total += term;
  }
  return total;
}

Index weight_multiplicity(int n, int two_j) {
  auto count = [n](int m2) -> Index {
    // states with (#zeros - #ones) = m2
    if ((n + m2) % 2 != 0 || std::abs(m2) > n) return 0;
    const int k = (n + m2) / 2;
    Index c = 1;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
  };
  return count(two_j) - count(two_j + 2);
}

Index symmetric_operator_dimension(int n) {
  const Index dim = Index{1} << n;
  std::vector<Operator> perms;
  for (const auto& p : all_permutations(n)) perms.push_back(permutation_matrix(p));
  Eigen::MatrixXcd cols(dim * dim, dim * dim);
  for (Index a = 0; a < dim; ++a) {
    for (Index b = 0; b < dim; ++b) {
      Operator e = Operator::Zero(dim, dim);
      e(a, b) = 1.0;
      Operator t = Operator::Zero(dim, dim);
      for (const auto& p : perms) t += p * e * p.adjoint();
      cols.col(b * dim + a) = vec_of(t);
    }
  }
  return svd_rank(cols);
}

Operator exact_evolution(const Operator& liouvillian_matrix, const Operator& rho, double t) {
  const Index d = rho.rows();
  const Operator e = (liouvillian_matrix * t).exp();
  const Eigen::VectorXcd v = e * vec_of(rho);
  return Eigen::Map<const Operator>(v.data(), d, d);
}

Operator dephased_qubit(const Operator& rho0, double lambda, double t) {
  Operator r = rho0;
  const double f = std::exp(-2.0 * lambda * t);
  r(0, 1) *= f;
  r(1, 0) *= f;
  return r;
}

}  // namespace nsalg::testing
