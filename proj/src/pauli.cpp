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

#include "tpqsdp/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tpqsdp::ops {
namespace {

constexpr int kMaxMaskQubits = 32;
constexpr double kDropTolerance = 1e-14;

int popcount(std::uint32_t v) { return std::popcount(v); }

}  // namespace

std::pair<int, PauliMask> multiply(PauliMask a, PauliMask b) {
  // X^x1 Z^z1 X^x2 Z^z2 = (-1)^{|z1&x2|} X^{x1^x2} Z^{z1^z2}
  PauliMask c{a.x ^ b.x, a.z ^ b.z};
  int k = popcount(a.x & a.z) + popcount(b.x & b.z) + 2 * popcount(a.z & b.x) -
          popcount(c.x & c.z);
  return {((k % 4) + 4) % 4, c};
}

bool commutes(PauliMask a, PauliMask b) {
  return (popcount((a.x & b.z) ^ (a.z & b.x)) & 1) == 0;
}

PauliMask to_mask(std::string_view letters) {
  const int n = static_cast<int>(letters.size());
  if (n > kMaxMaskQubits) {
    throw std::invalid_argument("Pauli string longer than 32 qubits");
  }
  PauliMask m;
  for (int q = 0; q < n; ++q) {
    const std::uint32_t bit = std::uint32_t{1} << (n - 1 - q);
    switch (letters[q]) {
      case 'I': break;
      case 'X': m.x |= bit; break;
      case 'Y': m.x |= bit; m.z |= bit; break;
      case 'Z': m.z |= bit; break;
      default:
        throw std::invalid_argument("invalid Pauli letter '" +
                                    std::string(1, letters[q]) + "'");
    }
  }
  return m;
}

std::string to_letters(PauliMask mask, int num_qubits) {
  std::string s(num_qubits, 'I');
  for (int q = 0; q < num_qubits; ++q) {
    const std::uint32_t bit = std::uint32_t{1} << (num_qubits - 1 - q);
    const bool x = mask.x & bit, z = mask.z & bit;
    s[q] = x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }
  return s;
}

PauliSum::PauliSum(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 0 || num_qubits > kMaxMaskQubits) {
    throw std::invalid_argument("qubit count out of range");
  }
}

PauliSum::PauliSum(int num_qubits, std::vector<PauliTerm> terms)
    : PauliSum(num_qubits) {
  for (const auto& t : terms) {
    if (static_cast<int>(t.letters.size()) != num_qubits) {
      throw std::invalid_argument("Pauli string '" + t.letters +
                                  "' does not match qubit count");
    }
    if (!std::isfinite(t.coefficient)) {
      throw std::invalid_argument("non-finite Pauli coefficient");
    }
    to_mask(t.letters);
  }
  terms_ = std::move(terms);
  canonicalize();
}

PauliSum PauliSum::identity(int num_qubits, double coefficient) {
  return PauliSum(num_qubits, {{coefficient, std::string(num_qubits, 'I')}});
}

PauliSum PauliSum::single(std::string_view letters, double coefficient) {
  return PauliSum(static_cast<int>(letters.size()),
                  {{coefficient, std::string(letters)}});
}

PauliSum PauliSum::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<PauliTerm> terms;
  int n = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string coeff, letters, extra;
    if (!(ls >> coeff)) continue;
    if (!(ls >> letters) || (ls >> extra)) {
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": expected 'coeff LETTERS'");
    }
    double c;
    try {
      std::size_t used = 0;
      c = std::stod(coeff, &used);
      if (used != coeff.size()) throw std::invalid_argument(coeff);
    } catch (const std::exception&) {
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": bad coefficient '" + coeff + "'");
    }
    if (n < 0) n = static_cast<int>(letters.size());
    if (static_cast<int>(letters.size()) != n) {
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": inconsistent string length");
    }
    terms.push_back({c, letters});
  }
  if (n < 0) throw std::invalid_argument("operator text has no terms");
  return PauliSum(n, std::move(terms));
}

void PauliSum::add(double coefficient, std::string_view letters) {
  *this += PauliSum(num_qubits_, {{coefficient, std::string(letters)}});
}

double PauliSum::coefficient_norm() const {
  double s = 0.0;
  for (const auto& t : terms_) s += std::abs(t.coefficient);
  return s;
}

std::string PauliSum::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (other.num_qubits_ != num_qubits_) {
    throw std::invalid_argument("qubit count mismatch in Pauli sum");
  }
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  canonicalize();
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  return *this += -PauliSum(other);
}

PauliSum& PauliSum::operator*=(double s) {
  for (auto& t : terms_) t.coefficient *= s;
  canonicalize();
  return *this;
}

void PauliSum::canonicalize() {
  std::map<std::string, double> merged;
  for (const auto& t : terms_) merged[t.letters] += t.coefficient;
  terms_.clear();
  for (const auto& [letters, c] : merged) {
    if (std::abs(c) > kDropTolerance) terms_.push_back({c, letters});
  }
}

PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
PauliSum operator-(PauliSum a) { return a *= -1.0; }
PauliSum operator*(double s, PauliSum a) { return a *= s; }
PauliSum operator*(PauliSum a, double s) { return a *= s; }

std::ostream& operator<<(std::ostream& os, const PauliSum& sum) {
  const auto prec = os.precision(17);
  for (const auto& t : sum.terms()) os << t.coefficient << ' ' << t.letters << '\n';
  os.precision(prec);
  return os;
}

}  // namespace tpqsdp::ops
