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

#ifndef TPQSDP_KRYLOV_HPP
#define TPQSDP_KRYLOV_HPP

#include "tpqsdp/sparse_operator.hpp"
#include "tpqsdp/types.hpp"

namespace tpqsdp::krylov {

struct KrylovConfig {
  int max_dim = 64;
  double tol = 1e-10;
};

struct ExpmvResult {
  StateVector state;      // normalized e^{-beta H / 2} v
  double norm = 1.0;      // || e^{-beta H / 2} v ||
  double log_norm = 0.0;  // ln of norm, finite even when norm overflows
  int krylov_dim = 0;
  double residual = 0.0;

  StateVector unnormalized() const { return norm * state; }
};

/// Lanczos approximation of e^{-beta H / 2} v with full reorthogonalization.
/// The Krylov space grows until the last-basis coefficient drops below tol.
/// Throws NumericalError when max_dim is reached first.
ExpmvResult lanczos_expmv(const ops::SparseOperator& h, double beta,
                          const StateVector& v, const KrylovConfig& cfg = {});

struct GroundEstimate {
  double ritz_min = 0.0;  // smallest converged Ritz value
  double xi = 0.0;        // shift used by the QET backend
  bool clamped = false;
  int krylov_dim = 0;
  double residual = 0.0;
};

/// Smallest eigenvalue estimate and the derived shift
///   xi = ritz_min - min(1e-4, 1 / (4 beta_max)),
/// set to 0 when ritz_min < -1 + 1 / (2 beta_max).
GroundEstimate ground_energy_estimate(const ops::SparseOperator& h, double beta_max,
                                      const KrylovConfig& cfg = {});

}  // namespace tpqsdp::krylov

#endif  // TPQSDP_KRYLOV_HPP
