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

#ifndef TPQSDP_MODELS_HPP
#define TPQSDP_MODELS_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tpqsdp/pauli.hpp"

namespace tpqsdp::ops {

/// Open-boundary rectangular lattice. Site (x, y) has index y * nx + x.
struct LatticeSpec {
  int nx = 1;
  int ny = 1;

  int sites() const { return nx * ny; }
  /// Horizontal bonds first, then vertical bonds, each in site order.
  std::vector<std::pair<int, int>> bonds() const;
};

/// A model Hamiltonian H = sum_j theta_j O_j written in terms of
/// constraint operators O_j, each a physical term divided by its spectral norm.
struct ModelTerms {
  PauliSum hamiltonian;
  std::vector<PauliSum> constraint_terms;
  std::vector<double> target_params;
  std::vector<std::string> labels;
};

/// Spinless Fermi-Hubbard model
///   H = -mu sum_i (n_i - 1/2) - w sum_<ij> (c_i^+ c_j - c_i c_j^+)
///       + U sum_<ij> (n_i - 1/2)(n_j - 1/2).
/// Constraint terms are ordered: site terms, hopping terms, density terms.
ModelTerms build_hubbard_spinless(const LatticeSpec& lattice, double mu, double w,
                                  double u);

/// Open XXZ chain with per-site fields
///   H = J sum_i (X_i X_{i+1} + Y_i Y_{i+1}) + Delta sum_i Z_i Z_{i+1} + sum_i h_i Z_i.
/// Constraint terms are ordered: XY bonds, ZZ bonds, site fields.
ModelTerms build_xxz(int n, double j, double delta, std::span<const double> h);

}  // namespace tpqsdp::ops

#endif  // TPQSDP_MODELS_HPP
