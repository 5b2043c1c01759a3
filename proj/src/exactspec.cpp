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

#include "tpqsdp/exactspec.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tpqsdp::exact {
namespace {

constexpr double kLogFloor = 1e-14;

bool is_real(const DenseMatrix& h) {
  return h.imag().cwiseAbs().maxCoeff() == 0.0;
}

void check_beta(double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("beta must be finite and non-negative");
  }
}

}  // namespace

EigenDecomposition eigendecompose(const ops::SparseOperator& op, int max_qubits) {
  if (op.num_qubits() > max_qubits) {
    throw std::invalid_argument("dense eigendecomposition limited to " +
                                std::to_string(max_qubits) + " qubits");
  }
  return eigendecompose(ops::to_dense(op));
}

EigenDecomposition eigendecompose(const DenseMatrix& h) {
  if (h.rows() != h.cols() || h.rows() == 0) {
    throw std::invalid_argument("eigendecomposition needs a square matrix");
  }
  if (is_real(h)) {
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(h.real());
    if (es.info() != Eigen::Success) throw NumericalError("eigensolver failed");
    return {es.eigenvalues(), es.eigenvectors().cast<Complex>()};
  }
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(h);
  if (es.info() != Eigen::Success) throw NumericalError("eigensolver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

RealVector eigenvalues(const DenseMatrix& h) {
  if (is_real(h)) {
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(h.real(), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericalError("eigensolver failed");
    return es.eigenvalues();
  }
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("eigensolver failed");
  return es.eigenvalues();
}

double log_partition(const RealVector& eigenvalues, double beta) {
  check_beta(beta);
  const double lmin = eigenvalues.minCoeff();
  return -beta * lmin + std::log((-beta * (eigenvalues.array() - lmin)).exp().sum());
}

GibbsState gibbs_state(const EigenDecomposition& h, double beta) {
  check_beta(beta);
  GibbsState s;
  s.beta = beta;
  const double lmin = h.eigenvalues.minCoeff();
  RealVector w = (-beta * (h.eigenvalues.array() - lmin)).exp();
  const double z = w.sum();
  s.probabilities = w / z;
  s.log_partition = -beta * lmin + std::log(z);
  s.eigenvectors = h.eigenvectors;
  s.rho = h.eigenvectors * s.probabilities.cast<Complex>().asDiagonal() *
          h.eigenvectors.adjoint();
  return s;
}

double gibbs_expectation(const GibbsState& state, const ops::SparseOperator& a) {
  if (a.dim() != state.rho.rows()) {
    throw std::invalid_argument("operator and state dimensions differ");
  }
  Complex acc = 0.0;
  const SparseMatrix& m = a.matrix();
  for (Eigen::Index r = 0; r < m.outerSize(); ++r) {
    for (SparseMatrix::InnerIterator it(m, r); it; ++it) {
      acc += state.rho(it.col(), r) * it.value();
    }
  }
  if (std::abs(acc.imag()) > 1e-8) {
    throw NumericalError("expectation has imaginary part; operator not Hermitian");
  }
  return acc.real();
}

double purity(const GibbsState& state) {
  return state.probabilities.squaredNorm();
}

double entropy(const GibbsState& state) {
  double s = 0.0;
  for (double p : state.probabilities) {
    if (p > 0.0) s -= p * std::log(p);
  }
  return s;
}

RelativeEntropy relative_entropy(const GibbsState& eta, const GibbsState& rho) {
  if (eta.rho.rows() != rho.rho.rows()) {
    throw std::invalid_argument("state dimensions differ");
  }
  RelativeEntropy out;
  auto floored_log = [&](double p) {
    if (p < kLogFloor) {
      ++out.clamped;
      p = kLogFloor;
    }
    return std::log(p);
  };
  const Eigen::Index n = eta.probabilities.size();
  RealVector log_p(n), log_q(n);
  for (Eigen::Index i = 0; i < n; ++i) log_p(i) = floored_log(eta.probabilities(i));
  for (Eigen::Index i = 0; i < n; ++i) log_q(i) = floored_log(rho.probabilities(i));
  // |<e_i|f_j>|^2 couples the two eigenbases.
  const RealMatrix overlap =
      (eta.eigenvectors.adjoint() * rho.eigenvectors).cwiseAbs2();
  const double cross = eta.probabilities.dot(overlap * log_q);
  out.value = eta.probabilities.dot(log_p) - cross;
  return out;
}

SpectralCount spectral_condition_count(const EigenDecomposition& h, double nu) {
  if (!(nu >= 0.0)) throw std::invalid_argument("nu must be non-negative");
  const Eigen::Index dim = h.eigenvalues.size();
  const double n = std::log2(static_cast<double>(dim));
  const double top = h.eigenvalues.minCoeff() + nu * n;
  const double slack = 1e-12 * std::max(1.0, h.eigenvalues.cwiseAbs().maxCoeff());
  SpectralCount out;
  out.count = (h.eigenvalues.array() <= top + slack).count();
  out.fraction = static_cast<double>(out.count) / static_cast<double>(dim);
  return out;
}

double purity_bound(double c, double nu, double beta, int n) {
  if (!(c > 0.0 && c <= 1.0)) throw std::invalid_argument("c must lie in (0, 1]");
  if (!(beta >= 0.0)) throw std::invalid_argument("beta must be non-negative");
  if (!(nu >= 0.0) || (beta > 0.0 && nu >= std::numbers::ln2 / (2.0 * beta))) {
    throw std::invalid_argument("nu must lie in [0, ln2 / (2 beta))");
  }
  return std::exp2(-(1.0 - 2.0 * beta * nu / std::numbers::ln2) * n) / (c * c);
}

double free_energy_purity(const EigenDecomposition& h, double beta) {
  return std::exp(log_partition(h.eigenvalues, 2.0 * beta) -
                  2.0 * log_partition(h.eigenvalues, beta));
}

DenseMatrix sample_gue(int n, std::mt19937_64& rng) {
  if (n < 2) throw std::invalid_argument("GUE dimension must be at least 2");
  std::normal_distribution<double> g;
  DenseMatrix h(n, n);
  const double diag = 1.0 / std::sqrt(static_cast<double>(n));
  const double off = 1.0 / std::sqrt(2.0 * n);
  for (int i = 0; i < n; ++i) {
    h(i, i) = g(rng) * diag;
    for (int j = i + 1; j < n; ++j) {
      const double re = g(rng);
      const double im = g(rng);
      h(i, j) = Complex(re, im) * off;
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

double semicircle_cdf(double x) {
  if (x <= -2.0) return 0.0;
  if (x >= 2.0) return 1.0;
  return x * std::sqrt(4.0 - x * x) / (4.0 * std::numbers::pi) +
         std::asin(x / 2.0) / std::numbers::pi + 0.5;
}

double semicircle_deviation(const RealVector& eigenvalues) {
  std::vector<double> e(eigenvalues.begin(), eigenvalues.end());
  std::sort(e.begin(), e.end());
  const double n = static_cast<double>(e.size());
  double dev = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const double f = semicircle_cdf(e[i]);
    dev = std::max({dev, std::abs(f - i / n), std::abs(f - (i + 1) / n)});
  }
  return dev;
}

}  // namespace tpqsdp::exact
