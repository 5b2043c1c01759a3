// Copyright 2026 The tpqsdp Authors
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

#ifndef TPQSDP_PAULI_HPP
#define TPQSDP_PAULI_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tpqsdp::ops {

/// Bit-packed Pauli string. Qubit q is stored in bit (n - 1 - q), so the
/// first letter of a string is the most significant tensor factor.
struct PauliMask {
  std::uint32_t x = 0;
  std::uint32_t z = 0;

  friend auto operator<=>(const PauliMask&, const PauliMask&) = default;
};

/// Product of the Hermitian Paulis P(a) P(b), where P(x, z) = i^{|x&z|} X^x Z^z.
/// Returns the phase exponent k (result is i^k P(c)) and the mask c.
std::pair<int, PauliMask> multiply(PauliMask a, PauliMask b);

/// True if the two Pauli strings commute.
bool commutes(PauliMask a, PauliMask b);

PauliMask to_mask(std::string_view letters);
std::string to_letters(PauliMask mask, int num_qubits);

struct PauliTerm {
  double coefficient = 0.0;
  std::string letters;
  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;
};

/// Real linear combination of Pauli strings on a fixed number of qubits.
/// Terms are kept merged and sorted by their letter string.
class PauliSum {
 public:
  explicit PauliSum(int num_qubits = 0);
  PauliSum(int num_qubits, std::vector<PauliTerm> terms);

  static PauliSum identity(int num_qubits, double coefficient = 1.0);
  static PauliSum single(std::string_view letters, double coefficient = 1.0);

  /// Parses lines of the form "coeff LETTERS"; '#' starts a comment.
  static PauliSum parse(std::string_view text);

  int num_qubits() const { return num_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  void add(double coefficient, std::string_view letters);

  /// Sum of absolute coefficients, an upper bound on the spectral norm.
  double coefficient_norm() const;

  std::string to_string() const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(double s);

  friend bool operator==(const PauliSum&, const PauliSum&) = default;

 private:
  void canonicalize();

  int num_qubits_;
  std::vector<PauliTerm> terms_;
};

PauliSum operator+(PauliSum a, const PauliSum& b);
PauliSum operator-(PauliSum a, const PauliSum& b);
PauliSum operator-(PauliSum a);
PauliSum operator*(double s, PauliSum a);
PauliSum operator*(PauliSum a, double s);

std::ostream& operator<<(std::ostream& os, const PauliSum& sum);

}  // namespace tpqsdp::ops

#endif  // TPQSDP_PAULI_HPP
