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

// Pauli strings in symplectic (x|z) form.

#ifndef NSALG_PAULI_H_
#define NSALG_PAULI_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nsalg/types.h"

namespace nsalg {

// i^phase * (x) X^{x_j} Z^{z_j}. Qubit 0 is the leftmost tensor factor.
//
// Text form: optional sign prefix ("+", "-", "i", "+i", "-i") followed by one
// letter per qubit from {I, X, Y, Z}. The text phase multiplies the letters
// literally, so Y contributes a factor i relative to the symplectic form
// (Y = i X Z).
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int num_qubits);
  PauliString(std::vector<std::uint8_t> x, std::vector<std::uint8_t> z,
              int phase = 0);

  static PauliString parse(std::string_view text);
  std::string str() const;

  int num_qubits() const { return static_cast<int>(x_.size()); }
  const std::vector<std::uint8_t>& x() const { return x_; }
  const std::vector<std::uint8_t>& z() const { return z_; }
  // Exponent k of the prefactor i^k in the symplectic form, 0..3.
  int phase() const { return phase_; }
  Complex phase_factor() const;

  bool is_identity_up_to_phase() const;
  bool is_hermitian() const;
  bool commutes_with(const PauliString& other) const;
  // Symplectic product: 1 when the strings anticommute.
  int symplectic(const PauliString& other) const;

  PauliString operator*(const PauliString& rhs) const;
  PauliString dagger() const;
  bool operator==(const PauliString& other) const = default;

  Operator to_operator() const;

 private:
  std::vector<std::uint8_t> x_;
  std::vector<std::uint8_t> z_;
  int phase_ = 0;
};

}  // namespace nsalg

#endif  // NSALG_PAULI_H_
