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

#include "nsalg/pauli.h"

#include <algorithm>

#include "nsalg/linalg.h"

namespace nsalg {
namespace {

int mod4(int k) { return ((k % 4) + 4) % 4; }

int count_y(const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& z) {
  int n = 0;
  for (std::size_t j = 0; j < x.size(); ++j) n += x[j] & z[j];
  return n;
}

}  // namespace

PauliString::PauliString(int num_qubits)
    : x_(static_cast<std::size_t>(num_qubits), 0),
      z_(static_cast<std::size_t>(num_qubits), 0) {}

PauliString::PauliString(std::vector<std::uint8_t> x, std::vector<std::uint8_t> z,
                         int phase)
    : x_(std::move(x)), z_(std::move(z)), phase_(mod4(phase)) {
  if (x_.size() != z_.size()) {
    throw InvalidInput("PauliString: x and z lengths differ");
  }
  for (std::size_t j = 0; j < x_.size(); ++j) {
    if (x_[j] > 1 || z_[j] > 1) throw InvalidInput("PauliString: bits must be 0/1");
  }
}

PauliString PauliString::parse(std::string_view text) {
  std::size_t pos = 0;
  int text_phase = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') text_phase = 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    text_phase += 1;
    ++pos;
  }
  if (pos == text.size()) {
    throw InvalidInput("PauliString: no qubit letters in \"" + std::string(text) + "\"");
  }
  std::vector<std::uint8_t> x, z;
  for (; pos < text.size(); ++pos) {
    switch (text[pos]) {
      case 'I': x.push_back(0); z.push_back(0); break;
      case 'X': x.push_back(1); z.push_back(0); break;
      case 'Y': x.push_back(1); z.push_back(1); break;
      case 'Z': x.push_back(0); z.push_back(1); break;
      default:
        throw InvalidInput("PauliString: unexpected character '" +
                           std::string(1, text[pos]) + "' in \"" +
                           std::string(text) + "\"");
    }
  }
  const int ys = count_y(x, z);
  return PauliString(std::move(x), std::move(z), text_phase + ys);
}

std::string PauliString::str() const {
  static constexpr const char* kPrefix[4] = {"", "i", "-", "-i"};
  std::string out = kPrefix[mod4(phase_ - count_y(x_, z_))];
  for (std::size_t j = 0; j < x_.size(); ++j) {
    out += x_[j] ? (z_[j] ? 'Y' : 'X') : (z_[j] ? 'Z' : 'I');
  }
  return out;
}

Complex PauliString::phase_factor() const {
  static const Complex kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kPowers[phase_];
}

bool PauliString::is_identity_up_to_phase() const {
  return std::none_of(x_.begin(), x_.end(), [](auto b) { return b != 0; }) &&
         std::none_of(z_.begin(), z_.end(), [](auto b) { return b != 0; });
}

bool PauliString::is_hermitian() const { return dagger() == *this; }

int PauliString::symplectic(const PauliString& other) const {
  if (other.num_qubits() != num_qubits()) {
    throw DimensionError("PauliString: qubit counts differ");
  }
  int s = 0;
  for (std::size_t j = 0; j < x_.size(); ++j) {
    s ^= (x_[j] & other.z_[j]) ^ (z_[j] & other.x_[j]);
  }
  return s;
}

bool PauliString::commutes_with(const PauliString& other) const {
  return symplectic(other) == 0;
}

PauliString PauliString::operator*(const PauliString& rhs) const {
  if (rhs.num_qubits() != num_qubits()) {
    throw DimensionError("PauliString: qubit counts differ");
  }
  // Z^a X^b = (-1)^{ab} X^b Z^a on each qubit.
  int phase = phase_ + rhs.phase_;
  std::vector<std::uint8_t> x(x_.size()), z(z_.size());
  for (std::size_t j = 0; j < x_.size(); ++j) {
    phase += 2 * (z_[j] & rhs.x_[j]);
    x[j] = x_[j] ^ rhs.x_[j];
    z[j] = z_[j] ^ rhs.z_[j];
  }
  return PauliString(std::move(x), std::move(z), phase);
}

PauliString PauliString::dagger() const {
  return PauliString(x_, z_, -phase_ + 2 * count_y(x_, z_));
}

Operator PauliString::to_operator() const {
  Operator out = Operator::Identity(1, 1);
  const Operator x = pauli_x();
  const Operator z = pauli_z();
  for (std::size_t j = 0; j < x_.size(); ++j) {
    Operator local = identity(2);
    if (x_[j]) local = local * x;
    if (z_[j]) local = local * z;
    out = kron(out, local);
  }
  return phase_factor() * out;
}

}  // namespace nsalg
