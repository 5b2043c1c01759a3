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

#include "tpqsdp/sparse_operator.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace tpqsdp::ops {

SparseOperator::SparseOperator(int num_qubits, SparseMatrix matrix)
    : num_qubits_(num_qubits), matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() ||
      matrix_.rows() != (Eigen::Index{1} << num_qubits)) {
    throw std::invalid_argument("operator shape does not match qubit count");
  }
  matrix_.makeCompressed();
}

SparseOperator compile(const PauliSum& sum, int max_qubits) {
  const int n = sum.num_qubits();
  if (n < 1) throw std::invalid_argument("operator needs at least one qubit");
  if (n > max_qubits) {
    throw std::invalid_argument("operator on " + std::to_string(n) +
                                " qubits exceeds limit of " +
                                std::to_string(max_qubits));
  }
  const std::uint32_t dim = std::uint32_t{1} << n;
  static const Complex kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

  // P(x,z)|i> = i^{|x&z|} (-1)^{|z&i|} |i ^ x>
  std::vector<Eigen::Triplet<Complex>> triplets;
  triplets.reserve(static_cast<std::size_t>(dim) * sum.size());
  for (const auto& t : sum.terms()) {
    const PauliMask m = to_mask(t.letters);
    const Complex base = t.coefficient * kPhase[std::popcount(m.x & m.z) % 4];
    for (std::uint32_t i = 0; i < dim; ++i) {
      const Complex v = (std::popcount(m.z & i) & 1) ? -base : base;
      triplets.emplace_back(static_cast<int>(i ^ m.x), static_cast<int>(i), v);
    }
  }
  SparseMatrix a(dim, dim);
  a.setFromTriplets(triplets.begin(), triplets.end());
  a.prune(Complex(0.0, 0.0), 0.0);
  return SparseOperator(n, std::move(a));
}

StateVector matvec(const SparseOperator& op, const StateVector& v) {
  if (v.size() != op.dim()) throw std::invalid_argument("vector size mismatch");
  return op * v;
}

double expectation(const SparseOperator& op, const StateVector& v) {
  if (v.size() != op.dim()) throw std::invalid_argument("vector size mismatch");
  return v.dot(op * v).real();
}

DenseMatrix to_dense(const SparseOperator& op) { return DenseMatrix(op.matrix()); }

SparseOperator linear_combination(std::span<const double> weights,
                                  std::span<const SparseOperator> ops) {
  if (weights.size() != ops.size() || ops.empty()) {
    throw std::invalid_argument("linear combination needs matching non-empty inputs");
  }
  SparseMatrix acc(ops[0].dim(), ops[0].dim());
  for (std::size_t j = 0; j < ops.size(); ++j) {
    if (ops[j].dim() != acc.rows()) throw std::invalid_argument("operator size mismatch");
    if (weights[j] != 0.0) acc += weights[j] * ops[j].matrix();
  }
  return SparseOperator(ops[0].num_qubits(), std::move(acc));
}

SparseOperator shifted(const SparseOperator& op, double s) {
  SparseMatrix id(op.dim(), op.dim());
  id.setIdentity();
  SparseMatrix m = op.matrix() + Complex(s, 0.0) * id;
  return SparseOperator(op.num_qubits(), std::move(m));
}

double spectral_norm_estimate(const SparseOperator& op, int iterations,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  StateVector v(op.dim());
  for (auto& a : v) a = Complex(g(rng), g(rng));
  v.normalize();
  double est = 0.0;
  StateVector w(op.dim());
  // Iterating with A^2 keeps the estimate monotone for indefinite A.
  for (int k = 0; k < iterations; ++k) {
    op.apply(v, w);
    op.apply(w, v);
    const double nrm = v.norm();
    if (nrm == 0.0) return 0.0;
    const double next = std::sqrt(nrm);
    v /= nrm;
    if (k > 10 && std::abs(next - est) <= 1e-12 * next) return next;
    est = next;
  }
  return est;
}

}  // namespace tpqsdp::ops
