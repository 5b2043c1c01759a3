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

#ifndef TPQSDP_EXACTSPEC_HPP
#define TPQSDP_EXACTSPEC_HPP

#include <random>

#include "tpqsdp/sparse_operator.hpp"
#include "tpqsdp/types.hpp"

namespace tpqsdp::exact {

/// Largest register handled by dense code paths by default.
inline constexpr int kMaxDenseQubits = 12;

struct EigenDecomposition {
  RealVector eigenvalues;    // ascending
  DenseMatrix eigenvectors;  // columns
};

struct GibbsState {
  double beta = 0.0;
  DenseMatrix rho;
  double log_partition = 0.0;  // ln tr e^{-beta H}
  RealVector probabilities;    // eigenvalues of rho, in the eigenbasis of H
  DenseMatrix eigenvectors;
};

struct RelativeEntropy {
  double value = 0.0;
  int clamped = 0;  // eigenvalues raised to the floor before taking logs
};

struct SpectralCount {
  long count = 0;
  double fraction = 0.0;
};

EigenDecomposition eigendecompose(const ops::SparseOperator& op,
                                  int max_qubits = kMaxDenseQubits);
EigenDecomposition eigendecompose(const DenseMatrix& h);

/// Ascending eigenvalues only; uses a real solver when h has no imaginary part.
RealVector eigenvalues(const DenseMatrix& h);

GibbsState gibbs_state(const EigenDecomposition& h, double beta);

/// ln tr e^{-beta H} from the spectrum, stable for large beta.
double log_partition(const RealVector& eigenvalues, double beta);

/// tr[rho A]. Throws NumericalError if the imaginary residue exceeds 1e-8.
double gibbs_expectation(const GibbsState& state, const ops::SparseOperator& a);

double purity(const GibbsState& state);

/// S(eta || rho) with eigenvalues floored at 1e-14 inside the logarithms.
RelativeEntropy relative_entropy(const GibbsState& eta, const GibbsState& rho);

/// von Neumann entropy of the state.
double entropy(const GibbsState& state);

/// Eigenvalues in [lambda_min, lambda_min + nu * n] with n = log2 N.
SpectralCount spectral_condition_count(const EigenDecomposition& h, double nu);

/// 2^{-(1 - 2 beta nu / ln 2) n} / c^2.
double purity_bound(double c, double nu, double beta, int n);

/// exp(-2 beta (F_{2beta} - F_beta)) = Z(2 beta) / Z(beta)^2.
double free_energy_purity(const EigenDecomposition& h, double beta);

/// Gaussian unitary ensemble normalized to the [-2, 2] semicircle.
DenseMatrix sample_gue(int n, std::mt19937_64& rng);

/// Cumulative distribution of the semicircle density sqrt(4 - x^2) / (2 pi).
double semicircle_cdf(double x);

/// sup_x |F_emp(x) - F_sc(x)| for sorted eigenvalues.
double semicircle_deviation(const RealVector& eigenvalues);

}  // namespace tpqsdp::exact

#endif  // TPQSDP_EXACTSPEC_HPP
