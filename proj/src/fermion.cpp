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

#include "tpqsdp/fermion.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace tpqsdp::ops {
namespace {

using ComplexSum = std::map<PauliMask, Complex>;

constexpr double kHermiticityTolerance = 1e-12;

const Complex kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

ComplexSum product(const ComplexSum& a, const ComplexSum& b) {
  ComplexSum out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      auto [k, mc] = multiply(ma, mb);
      out[mc] += ca * cb * kPhase[k];
    }
  }
  return out;
}

ComplexSum ladder(LadderOp op, int n) {
  std::uint32_t zstring = 0;
  for (int q = 0; q < op.site; ++q) zstring |= std::uint32_t{1} << (n - 1 - q);
  const std::uint32_t bit = std::uint32_t{1} << (n - 1 - op.site);
  // (X -+ iY)/2 with the Jordan-Wigner string in front
  const Complex ycoef = op.creation ? Complex(0, -0.5) : Complex(0, 0.5);
  ComplexSum s;
  s[PauliMask{bit, zstring}] += 0.5;
  s[PauliMask{bit, zstring | bit}] += ycoef;
  return s;
}

}  // namespace

PauliSum jordan_wigner(std::span<const FermionTerm> terms, int num_sites) {
  if (num_sites <= 0 || num_sites > 32) {
    throw std::invalid_argument("site count out of range");
  }
  ComplexSum total;
  for (const auto& term : terms) {
    ComplexSum acc;
    acc[PauliMask{}] = term.coefficient;
    for (const auto& op : term.ops) {
      if (op.site < 0 || op.site >= num_sites) {
        throw std::invalid_argument("ladder operator site out of range");
      }
      acc = product(acc, ladder(op, num_sites));
    }
    for (const auto& [m, c] : acc) total[m] += c;
  }
  PauliSum out(num_sites);
  std::vector<PauliTerm> real_terms;
  for (const auto& [m, c] : total) {
    if (std::abs(c.imag()) > kHermiticityTolerance) {
      throw std::invalid_argument("fermionic operator is not Hermitian (term " +
                                  to_letters(m, num_sites) + ")");
    }
    real_terms.push_back({c.real(), to_letters(m, num_sites)});
  }
  return PauliSum(num_sites, std::move(real_terms));
}

}  // namespace tpqsdp::ops
