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

#ifndef TPQSDP_FERMION_HPP
#define TPQSDP_FERMION_HPP

#include <span>
#include <vector>

#include "tpqsdp/pauli.hpp"
#include "tpqsdp/types.hpp"

namespace tpqsdp::ops {

struct LadderOp {
  int site = 0;
  bool creation = false;
};

inline LadderOp create(int site) { return {site, true}; }
inline LadderOp annihilate(int site) { return {site, false}; }

/// Coefficient times an ordered product of ladder operators. An empty
/// product is the identity.
struct FermionTerm {
  Complex coefficient{1.0, 0.0};
  std::vector<LadderOp> ops;
};

/// Jordan-Wigner image of a Hermitian sum of fermionic monomials on
/// `num_sites` modes, with |1> meaning occupied and
/// c_j = Z_0 ... Z_{j-1} (X_j + iY_j) / 2.
/// Throws std::invalid_argument if the result is not Hermitian.
PauliSum jordan_wigner(std::span<const FermionTerm> terms, int num_sites);

}  // namespace tpqsdp::ops

#endif  // TPQSDP_FERMION_HPP
