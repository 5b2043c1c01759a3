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

#include "tpqsdp/qet.hpp"

#include <cmath>
#include <stdexcept>

namespace tpqsdp::poly {

QetPreparer::QetPreparer(const ops::SparseOperator& h, double beta,
                         double ground_shift, double xi)
    : k_(ops::shifted(h, -(1.0 + ground_shift))) {
  if (!(xi > 0.0 && xi <= 1.0)) throw std::invalid_argument("xi must lie in (0, 1]");
  if (!std::isfinite(ground_shift)) throw std::invalid_argument("non-finite ground shift");
  const double nrm = ops::spectral_norm_estimate(k_);
  if (nrm > 1.01) {
    throw NumericalError("shifted operator has norm " + std::to_string(nrm) +
                         "; ground shift inconsistent with the spectrum");
  }
  mu_ = (xi / 8.0) * success_floor();
  p_ = exp_poly(0.5 * beta, mu_);
}

double QetPreparer::success_floor() const {
  return std::exp2(-k_.num_qubits()) * std::exp(-0.5) / 2.0;
}

QetResult QetPreparer::prepare(const StateVector& v0) const {
  StateVector w = apply_poly(p_, k_, v0, false);
  const double nrm2 = w.squaredNorm();
  QetResult out;
  out.p_exp = 0.25 * nrm2;
  if (!(out.p_exp > 1e-300)) throw NumericalError("QET success probability underflow");
  out.state = w / std::sqrt(nrm2);
  return out;
}

QetResult qet_tpq_state(const ops::SparseOperator& h, double beta, double ground_shift,
                        double xi, const StateVector& v0) {
  return QetPreparer(h, beta, ground_shift, xi).prepare(v0);
}

}  // namespace tpqsdp::poly
