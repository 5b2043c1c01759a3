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

#ifndef TPQSDP_TYPES_HPP
#define TPQSDP_TYPES_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace tpqsdp {

using Complex = std::complex<double>;
using StateVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using DenseMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using SparseMatrix = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

/// Raised when an iterative method fails to converge or a numerical
/// precondition (norm bound, Hermiticity) is violated at run time.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Largest register handled by statevector code paths.
inline constexpr int kMaxQubits = 14;

}  // namespace tpqsdp

#endif  // TPQSDP_TYPES_HPP
