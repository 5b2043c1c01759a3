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

#ifndef TPQSDP_CLIFFORD_HPP
#define TPQSDP_CLIFFORD_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "tpqsdp/pauli.hpp"
#include "tpqsdp/types.hpp"

namespace tpqsdp::clifford {

/// Stabilizer generators (-1)^{sign} P(x, z) of an n-qubit stabilizer state.
/// Masks use the operator convention: qubit q is bit n - 1 - q.
struct StabilizerTableau {
  int n = 0;
  std::vector<ops::PauliMask> generators;
  std::vector<std::uint8_t> signs;
};

StabilizerTableau identity_tableau(int n);   // stabilizes |0...0>
StabilizerTableau hadamard_tableau(int n);   // stabilizes |+...+>

/// Generators pairwise commute, are independent, and n of them are present.
bool is_valid(const StabilizerTableau& t);

/// Uniformly random stabilizer state.
StabilizerTableau sample_random_stabilizer(int n, std::mt19937_64& rng);

/// Unit vector fixed by every generator. Throws std::invalid_argument for an
/// invalid or inconsistent tableau.
StateVector tableau_to_statevector(const StabilizerTableau& t);

/// (-1)^{sign} P v.
StateVector apply_pauli(ops::PauliMask p, bool sign, const StateVector& v);

}  // namespace tpqsdp::clifford

#endif  // TPQSDP_CLIFFORD_HPP
