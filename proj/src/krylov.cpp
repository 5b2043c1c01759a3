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

#include "tpqsdp/krylov.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace tpqsdp::krylov {
namespace {

// Lanczos recurrence with two passes of classical Gram-Schmidt against the
// whole basis after each step.
class Lanczos {
 public:
  Lanczos(const ops::SparseOperator& h, const StateVector& v0, int max_dim)
      : h_(h), basis_(h.dim(), std::min<Eigen::Index>(max_dim, h.dim())), w_(h.dim()) {
    basis_.col(0) = v0;
  }

  int size() const { return static_cast<int>(alpha_.size()); }
  int capacity() const { return static_cast<int>(basis_.cols()); }
  bool exhausted() const { return invariant_; }
  const std::vector<double>& alpha() const { return alpha_; }
  const std::vector<double>& beta() const { return beta_; }
  auto basis() const { return basis_.leftCols(size()); }

  /// Adds one vector; returns the new off-diagonal element.
  double step() {
    const int k = size();
    h_.apply(basis_.col(k), w_);
    const double a = basis_.col(k).dot(w_).real();
    w_ -= a * basis_.col(k);
    if (k > 0) w_ -= beta_.back() * basis_.col(k - 1);
    for (int pass = 0; pass < 2; ++pass) {
      const StateVector c = basis_.leftCols(k + 1).adjoint() * w_;
      w_.noalias() -= basis_.leftCols(k + 1) * c;
    }
    alpha_.push_back(a);
    const double b = w_.norm();
    scale_ = std::max({scale_, std::abs(a), b});
    if (b <= 1e-12 * std::max(1.0, scale_) || k + 1 == static_cast<int>(h_.dim())) {
      invariant_ = true;
    } else if (k + 1 < capacity()) {
      basis_.col(k + 1) = w_ / b;
    }
    beta_.push_back(b);
    return b;
  }

  /// Eigen-decomposition of the current tridiagonal matrix.
  Eigen::SelfAdjointEigenSolver<RealMatrix> ritz() const {
    const int k = size();
    RealVector d = Eigen::Map<const RealVector>(alpha_.data(), k);
    RealVector e = k > 1 ? RealVector(Eigen::Map<const RealVector>(beta_.data(), k - 1))
                         : RealVector(0);
    Eigen::SelfAdjointEigenSolver<RealMatrix> es;
    es.computeFromTridiagonal(d, e, Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success) throw NumericalError("tridiagonal eigensolver failed");
    return es;
  }

 private:
  const ops::SparseOperator& h_;
  DenseMatrix basis_;
  StateVector w_;
  std::vector<double> alpha_, beta_;
  double scale_ = 0.0;
  bool invariant_ = false;
};

void check_input(const ops::SparseOperator& h, const StateVector& v,
                 const KrylovConfig& cfg) {
  if (v.size() != h.dim()) throw std::invalid_argument("vector size mismatch");
  if (cfg.max_dim < 2 || !(cfg.tol > 0.0)) {
    throw std::invalid_argument("invalid Krylov configuration");
  }
}

}  // namespace

ExpmvResult lanczos_expmv(const ops::SparseOperator& h, double beta,
                          const StateVector& v, const KrylovConfig& cfg) {
  check_input(h, v, cfg);
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("beta must be finite and non-negative");
  }
  if (std::abs(v.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("input vector must be normalized");
  }
  ExpmvResult out;
  if (beta == 0.0) {
    out.state = v;
    return out;
  }

  Lanczos lz(h, v, cfg.max_dim);
  while (true) {
    const double b = lz.step();
    const int k = lz.size();
    const auto es = lz.ritz();
    const RealVector& theta = es.eigenvalues();
    const double tmin = theta(0);
    // y = exp(-beta/2 (T - tmin)) e_1
    const RealVector weights =
        (-0.5 * beta * (theta.array() - tmin)).exp() *
        es.eigenvectors().row(0).transpose().array();
    const RealVector y = es.eigenvectors() * weights;
    const double ynorm = y.norm();
    out.residual = lz.exhausted() ? 0.0 : b * std::abs(y(k - 1)) / ynorm;
    if (lz.exhausted() || out.residual < cfg.tol) {
      out.state = lz.basis() * (y / ynorm).cast<Complex>();
      out.log_norm = -0.5 * beta * tmin + std::log(ynorm);
      out.norm = std::exp(out.log_norm);
      out.krylov_dim = k;
      out.state.normalize();
      return out;
    }
    if (k >= lz.capacity()) {
      throw NumericalError("Lanczos exponential did not converge: residual " +
                           std::to_string(out.residual) + " at dimension " +
                           std::to_string(k));
    }
  }
}

GroundEstimate ground_energy_estimate(const ops::SparseOperator& h, double beta_max,
                                      const KrylovConfig& cfg) {
  if (!(beta_max > 0.0)) throw std::invalid_argument("beta_max must be positive");
  if (cfg.max_dim < 2 || !(cfg.tol > 0.0)) {
    throw std::invalid_argument("invalid Krylov configuration");
  }
  // Fixed pseudo-random start so the estimate is reproducible.
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> g;
  StateVector v0(h.dim());
  for (auto& a : v0) a = Complex(g(rng), g(rng));
  v0.normalize();

  Lanczos lz(h, v0, cfg.max_dim);
  GroundEstimate out;
  while (true) {
    const double b = lz.step();
    const auto es = lz.ritz();
    const int k = lz.size();
    out.ritz_min = es.eigenvalues()(0);
    out.residual = lz.exhausted() ? 0.0 : b * std::abs(es.eigenvectors()(k - 1, 0));
    out.krylov_dim = k;
    // The Ritz value error is second order in the residual.
    if (lz.exhausted() || out.residual * out.residual < cfg.tol) break;
    if (k >= lz.capacity()) {
      throw NumericalError("Lanczos ground state did not converge: residual " +
                           std::to_string(out.residual) + " at dimension " +
                           std::to_string(k));
    }
  }
  const double margin = std::min(1e-4, 1.0 / (4.0 * beta_max));
  if (out.ritz_min < -1.0 + 1.0 / (2.0 * beta_max)) {
    out.xi = 0.0;
    out.clamped = true;
  } else {
    out.xi = out.ritz_min - margin;
  }
  return out;
}

}  // namespace tpqsdp::krylov
