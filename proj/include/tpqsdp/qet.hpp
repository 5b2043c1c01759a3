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

#ifndef TPQSDP_QET_HPP
#define TPQSDP_QET_HPP

#include "tpqsdp/chebyshev.hpp"
#include "tpqsdp/sparse_operator.hpp"

namespace tpqsdp::poly {

struct QetResult {
  StateVector state;   // normalized P(K) v0
  double p_exp = 0.0;  // ||P(K) v0||^2 / 4
};

/// Classical emulation of the QET preparation of e^{-beta H / 2} v0.
/// K = H - (1 + ground_shift) I and P = exp_poly(beta / 2, mu) with
/// mu = (xi / 8) 2^{-n} e^{-1/2} / 2.
class QetPreparer {
 public:
  /// Throws NumericalError if ||K|| exceeds 1 beyond the 1% slack.
  QetPreparer(const ops::SparseOperator& h, double beta, double ground_shift,
              double xi);

  QetResult prepare(const StateVector& v0) const;

  double mu() const { return mu_; }
  const ChebyshevPoly& polynomial() const { return p_; }
  const ops::SparseOperator& shifted_operator() const { return k_; }

  /// Lower bound 2^{-n} e^{-1/2} / 2 on the typical success probability.
  double success_floor() const;

 private:
  ops::SparseOperator k_;
  ChebyshevPoly p_;
  double mu_ = 0.0;
};

QetResult qet_tpq_state(const ops::SparseOperator& h, double beta, double ground_shift,
                        double xi, const StateVector& v0);

}  // namespace tpqsdp::poly

#endif  // TPQSDP_QET_HPP
