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

#ifndef NSALG_TYPES_H_
#define NSALG_TYPES_H_

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace nsalg {

using Complex = std::complex<double>;
using Index = Eigen::Index;

// Dense square complex matrix acting on the system state space. Operators
// are plain Eigen matrices; dimension metadata is the matrix size.
using Operator = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

// Default threshold for span membership and relative rank decisions.
inline constexpr double kDefaultTol = 1e-10;
// Default threshold for structural certification (block forms, KL checks).
inline constexpr double kVerifyTol = 1e-8;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes disagree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Input violates a documented precondition (non-finite entries,
// non-hermitian Hamiltonian, malformed permutation, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A numerical procedure could not certify its result.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace nsalg

#endif  // NSALG_TYPES_H_
