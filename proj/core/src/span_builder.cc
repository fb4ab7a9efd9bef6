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

#include "span_builder.h"

#include <algorithm>

namespace nsalg::internal {
namespace {

// Below this relative residual an accepted vector gets one more full
// re-orthogonalization before normalization.
constexpr double kCancellationGuard = 1e-4;

}  // namespace

SpanBuilder::SpanBuilder(Index length, double tol)
    : length_(length), tol_(tol), buffer_(length, 0) {}

void SpanBuilder::reserve(Index columns) {
  if (columns <= buffer_.cols()) return;
  const Index grown = std::max<Index>(columns, 2 * buffer_.cols() + 8);
  buffer_.conservativeResize(Eigen::NoChange, std::min(grown, length_));
}

std::vector<bool> SpanBuilder::add(Eigen::MatrixXcd x) {
  return add(std::move(x), {});
}

std::vector<bool> SpanBuilder::add(Eigen::MatrixXcd x,
                                   const std::vector<double>& reference) {
  if (x.rows() != length_) {
    throw DimensionError("SpanBuilder: candidate length mismatch");
  }
  if (!reference.empty() && static_cast<Index>(reference.size()) != x.cols()) {
    throw DimensionError("SpanBuilder: one reference scale per candidate");
  }
  std::vector<bool> accepted(x.cols(), false);
  std::vector<bool> nonzero(x.cols(), false);
  // Acceptance threshold in units of the normalized candidate.
  std::vector<double> threshold(x.cols(), tol_);
  for (Index j = 0; j < x.cols(); ++j) {
    const double n = x.col(j).norm();
    if (!reference.empty()) {
      if (n <= tol_ * reference[j]) continue;
      threshold[j] = tol_ * reference[j] / n;
    }
    if (n > 0.0) {
      x.col(j) /= n;
      nonzero[j] = true;
    }
  }
  const Index old = count_;
  if (old > 0) {
    {
      const Eigen::MatrixXcd coeff = buffer_.leftCols(old).adjoint() * x;
      x.noalias() -= buffer_.leftCols(old) * coeff;
    }
    // After one pass the roundoff in a residual is ~eps sqrt(count), far
    // below any usable tol, so candidates already under their threshold
    // are settled and skip the second pass.
    std::vector<Index> alive;
    for (Index j = 0; j < x.cols(); ++j) {
      if (nonzero[j] && x.col(j).norm() > threshold[j]) {
        alive.push_back(j);
      } else {
        nonzero[j] = false;
      }
    }
    if (!alive.empty()) {
      Eigen::MatrixXcd y(length_, static_cast<Index>(alive.size()));
      for (std::size_t k = 0; k < alive.size(); ++k) y.col(static_cast<Index>(k)) = x.col(alive[k]);
      const Eigen::MatrixXcd coeff = buffer_.leftCols(old).adjoint() * y;
      y.noalias() -= buffer_.leftCols(old) * coeff;
      for (std::size_t k = 0; k < alive.size(); ++k) x.col(alive[k]) = y.col(static_cast<Index>(k));
    }
  }
  for (Index j = 0; j < x.cols(); ++j) {
    if (!nonzero[j] || count_ == length_) continue;
    Eigen::VectorXcd v = x.col(j);
    const Index fresh = count_ - old;
    if (fresh > 0) {
      for (int pass = 0; pass < 2; ++pass) {
        const Eigen::VectorXcd c = buffer_.middleCols(old, fresh).adjoint() * v;
        v.noalias() -= buffer_.middleCols(old, fresh) * c;
      }
    }
    double r = v.norm();
    if (r <= threshold[j]) continue;
    if (r < kCancellationGuard && count_ > 0) {
      const Eigen::VectorXcd c = buffer_.leftCols(count_).adjoint() * v;
      v.noalias() -= buffer_.leftCols(count_) * c;
      r = v.norm();
      if (r <= threshold[j]) continue;
    }
    reserve(count_ + 1);
    buffer_.col(count_) = v / r;
    ++count_;
    accepted[j] = true;
  }
  return accepted;
}

bool SpanBuilder::add_one(const Eigen::Ref<const Eigen::VectorXcd>& candidate) {
  Eigen::MatrixXcd m = candidate;
  return add(std::move(m)).front();
}

Eigen::MatrixXcd SpanBuilder::take() && {
  buffer_.conservativeResize(Eigen::NoChange, count_);
  return std::move(buffer_);
}

double SpanBuilder::residual(const Eigen::Ref<const Eigen::VectorXcd>& v) const {
  if (count_ == 0) return v.norm();
  Eigen::VectorXcd r = v;
  for (int pass = 0; pass < 2; ++pass) {
    const Eigen::VectorXcd c = buffer_.leftCols(count_).adjoint() * r;
    r.noalias() -= buffer_.leftCols(count_) * c;
  }
  return r.norm();
}

}  // namespace nsalg::internal
