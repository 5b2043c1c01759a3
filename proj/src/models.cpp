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

#include "tpqsdp/models.hpp"

#include <cmath>
#include <stdexcept>

#include "tpqsdp/fermion.hpp"

namespace tpqsdp::ops {
namespace {

// Spectral norms of the physical terms: (n_i - 1/2) has norm 1/2, the
// hopping term norm 1, the density product norm 1/4.
constexpr double kSiteNorm = 0.5;
constexpr double kHopNorm = 1.0;
constexpr double kDensityNorm = 0.25;

std::vector<FermionTerm> number_shifted(int i) {
  return {{1.0, {create(i), annihilate(i)}}, {-0.5, {}}};
}

void check_finite(std::initializer_list<double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite model parameter");
  }
}

}  // namespace

std::vector<std::pair<int, int>> LatticeSpec::bonds() const {
  std::vector<std::pair<int, int>> out;
  for (int y = 0; y < ny; ++y) {
    for (int x = 0; x + 1 < nx; ++x) out.emplace_back(y * nx + x, y * nx + x + 1);
  }
  for (int y = 0; y + 1 < ny; ++y) {
    for (int x = 0; x < nx; ++x) out.emplace_back(y * nx + x, (y + 1) * nx + x);
  }
  return out;
}

ModelTerms build_hubbard_spinless(const LatticeSpec& lattice, double mu, double w,
                                  double u) {
  check_finite({mu, w, u});
  if (lattice.nx < 1 || lattice.ny < 1) {
    throw std::invalid_argument("lattice dimensions must be positive");
  }
  const int n = lattice.sites();
  if (n < 2) throw std::invalid_argument("lattice has no bonds");
  if (n > 32) throw std::invalid_argument("lattice too large");

  ModelTerms out{PauliSum(n), {}, {}, {}};
  auto push = [&](const std::vector<FermionTerm>& physical, double norm,
                  double theta, std::string label) {
    out.constraint_terms.push_back((1.0 / norm) * jordan_wigner(physical, n));
    out.target_params.push_back(theta);
    out.labels.push_back(std::move(label));
  };

  for (int i = 0; i < n; ++i) {
    push(number_shifted(i), kSiteNorm, mu * kSiteNorm, "site" + std::to_string(i));
  }
  const auto bonds = lattice.bonds();
  for (auto [i, j] : bonds) {
    std::vector<FermionTerm> hop{{1.0, {create(i), annihilate(j)}},
                                 {-1.0, {annihilate(i), create(j)}}};
    push(hop, kHopNorm, w * kHopNorm,
         "hop" + std::to_string(i) + "_" + std::to_string(j));
  }
  for (auto [i, j] : bonds) {
    std::vector<FermionTerm> dens;
    for (const auto& a : number_shifted(i)) {
      for (const auto& b : number_shifted(j)) {
        FermionTerm t{a.coefficient * b.coefficient, a.ops};
        t.ops.insert(t.ops.end(), b.ops.begin(), b.ops.end());
        dens.push_back(std::move(t));
      }
    }
    push(dens, kDensityNorm, u * kDensityNorm,
         "dens" + std::to_string(i) + "_" + std::to_string(j));
  }
  for (std::size_t k = 0; k < out.constraint_terms.size(); ++k) {
    out.hamiltonian += out.target_params[k] * out.constraint_terms[k];
  }
  return out;
}

ModelTerms build_xxz(int n, double j, double delta, std::span<const double> h) {
  check_finite({j, delta});
  if (n < 2) throw std::invalid_argument("XXZ chain needs at least two sites");
  if (n > 32) throw std::invalid_argument("XXZ chain too long");
  if (static_cast<int>(h.size()) != n) {
    throw std::invalid_argument("field vector length must equal chain length");
  }
  for (double v : h) check_finite({v});

  ModelTerms out{PauliSum(n), {}, {}, {}};
  auto letters = [n](std::initializer_list<std::pair<int, char>> sites) {
    std::string s(n, 'I');
    for (auto [q, c] : sites) s[q] = c;
    return s;
  };
  for (int i = 0; i + 1 < n; ++i) {
    PauliSum xy(n, {{0.5, letters({{i, 'X'}, {i + 1, 'X'}})},
                    {0.5, letters({{i, 'Y'}, {i + 1, 'Y'}})}});
    out.constraint_terms.push_back(std::move(xy));
    out.target_params.push_back(2.0 * j);
    out.labels.push_back("xy" + std::to_string(i));
  }
  for (int i = 0; i + 1 < n; ++i) {
    out.constraint_terms.push_back(PauliSum::single(letters({{i, 'Z'}, {i + 1, 'Z'}})));
    out.target_params.push_back(delta);
    out.labels.push_back("zz" + std::to_string(i));
  }
  for (int i = 0; i < n; ++i) {
    out.constraint_terms.push_back(PauliSum::single(letters({{i, 'Z'}})));
    out.target_params.push_back(h[i]);
    out.labels.push_back("z" + std::to_string(i));
  }
  for (std::size_t k = 0; k < out.constraint_terms.size(); ++k) {
    out.hamiltonian += out.target_params[k] * out.constraint_terms[k];
  }
  return out;
}

}  // namespace tpqsdp::ops
