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

#ifndef NSALG_SRC_SPAN_BUILDER_H_
#define NSALG_SRC_SPAN_BUILDER_H_

#include <vector>

#include "nsalg/types.h"

namespace nsalg::internal {

// Incrementally grows an orthonormal basis of a subspace of C^length.
//
// Candidates are added in batches (block classical Gram-Schmidt, two
// passes against the existing basis, then sequential two-pass
// orthogonalization inside the batch). A candidate is accepted iff its
// residual exceeds tol * reference, where the reference is the candidate's
// own norm unless a scale is supplied (e.g. ||g|| ||b|| for a product, so
// that roundoff-level products of an exactly vanishing product are
// rejected). Acceptance order is the column order of the batch, so results
// are deterministic.
class SpanBuilder {
 public:
  SpanBuilder(Index length, double tol);

  // Returns one flag per candidate column: true if it extended the span.
  std::vector<bool> add(Eigen::MatrixXcd candidates);
  std::vector<bool> add(Eigen::MatrixXcd candidates,
                        const std::vector<double>& reference);
  bool add_one(const Eigen::Ref<const Eigen::VectorXcd>& candidate);

  Index size() const { return count_; }
  Index length() const { return length_; }

  auto basis() const { return buffer_.leftCols(count_); }
  Eigen::MatrixXcd take() &&;

  // Norm of the component of v orthogonal to the current span.
  double residual(const Eigen::Ref<const Eigen::VectorXcd>& v) const;

 private:
  void reserve(Index columns);

  Index length_;
  double tol_;
  Index count_ = 0;
  Eigen::MatrixXcd buffer_;
};

}  // namespace nsalg::internal

#endif  // NSALG_SRC_SPAN_BUILDER_H_
