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

#ifndef TPQSDP_SPARSE_OPERATOR_HPP
#define TPQSDP_SPARSE_OPERATOR_HPP

#include <cstdint>
#include <span>

#include "tpqsdp/pauli.hpp"
#include "tpqsdp/types.hpp"

namespace tpqsdp::ops {

/// Compiled Hermitian operator on 2^n amplitudes, stored row-major.
class SparseOperator {
 public:
  SparseOperator() = default;
  SparseOperator(int num_qubits, SparseMatrix matrix);

  int num_qubits() const { return num_qubits_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const SparseMatrix& matrix() const { return matrix_; }

  /// out = A * in. `out` must not alias `in`.
  void apply(const StateVector& in, StateVector& out) const {
    out.noalias() = matrix_ * in;
  }
  StateVector operator*(const StateVector& v) const { return matrix_ * v; }

 private:
  int num_qubits_ = 0;
  SparseMatrix matrix_;
};

/// Builds the sparse matrix of a Pauli sum. Basis index bits follow the
/// letter order: letter 0 is the most significant bit.
SparseOperator compile(const PauliSum& sum, int max_qubits = kMaxQubits);

StateVector matvec(const SparseOperator& op, const StateVector& v);

/// Real part of <v|A|v> for a Hermitian A.
double expectation(const SparseOperator& op, const StateVector& v);

DenseMatrix to_dense(const SparseOperator& op);

/// sum_j w_j A_j over operators of equal size.
SparseOperator linear_combination(std::span<const double> weights,
                                  std::span<const SparseOperator> ops);

/// A + s * I.
SparseOperator shifted(const SparseOperator& op, double s);

/// Power-iteration lower estimate of the spectral norm.
double spectral_norm_estimate(const SparseOperator& op, int iterations = 200,
                              std::uint64_t seed = 0x5eed);

}  // namespace tpqsdp::ops

#endif  // TPQSDP_SPARSE_OPERATOR_HPP
