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

#include "tpqsdp/resources.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tpqsdp/mmw.hpp"

namespace tpqsdp::resources {
namespace {

// Ceiling that ignores floating-point noise just above an integer.
long ceil_tolerant(double v) {
  const double r = std::round(v);
  if (std::abs(v - r) <= 1e-9 * std::max(1.0, std::abs(v))) return static_cast<long>(r);
  return static_cast<long>(std::ceil(v));
}

double log_binom_pmf(long x, double p, long k) {
  return std::lgamma(x + 1.0) - std::lgamma(k + 1.0) - std::lgamma(x - k + 1.0) +
         k * std::log(p) + (x - k) * std::log1p(-p);
}

}  // namespace

long copies_required(double xi, long m, double delta) {
  if (!(xi > 0.0 && xi <= 1.0)) throw std::invalid_argument("xi must lie in (0, 1]");
  if (!(delta > 0.0 && delta <= 1.0)) throw std::invalid_argument("delta must lie in (0, 1]");
  if (m < 0) throw std::invalid_argument("m must be non-negative");
  return ceil_tolerant((8.0 / (xi * xi)) * std::log((m + 1.0) / delta));
}

OrGapReport or_lemma_probabilities(double delta, double zeta, long m, double purity_term) {
  if (delta < 0.0 || zeta < 0.0 || purity_term < 0.0 || m < 0) {
    throw std::invalid_argument("OR-lemma parameters must be non-negative");
  }
  OrGapReport r;
  r.delta = delta;
  r.zeta = zeta;
  r.m = m;
  r.purity_term = purity_term;
  r.upsilon = 3.0 * delta / (m + 1.0);
  r.phi = 2.0 * delta / (m + 1.0);
  const double a = 1.0 - r.upsilon - purity_term;
  r.p1 = std::clamp(a * a / 4.0 - zeta, 0.0, 1.0);
  r.p2 = std::clamp(5.0 * (m + 1.0) * (r.phi + purity_term) + zeta, 0.0, 1.0);
  r.gap = r.p1 - r.p2;
  return r;
}

EigenvalueDiscriminator::EigenvalueDiscriminator(double lo_, double hi_, double dp)
    : lo(lo_), hi(hi_), delta_prime(dp) {
  if (!(lo >= 0.0 && hi <= 1.0 && hi > lo)) {
    throw std::invalid_argument("thresholds must satisfy 0 <= lo < hi <= 1");
  }
  if (!(dp > 0.0 && dp < 0.5)) throw std::invalid_argument("delta_prime must lie in (0, 1/2)");
  sign = poly::sign_poly(2.0 * dp, hi - lo);
}

double EigenvalueDiscriminator::operator()(double y) const {
  return 0.5 * (1.0 + sign(y - 0.5 * (lo + hi)));
}

double or_acceptance_binomial(double p_true, long x, const EigenvalueDiscriminator& ped) {
  if (!(p_true >= 0.0 && p_true <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  if (x < 1) throw std::invalid_argument("x must be positive");
  auto sq = [&](long k) {
    const double v = ped(static_cast<double>(k) / x);
    return v * v;
  };
  if (p_true == 0.0) return sq(0);
  if (p_true == 1.0) return sq(x);
  double acc = 0.0;
  for (long k = 0; k <= x; ++k) {
    const double lp = log_binom_pmf(x, p_true, k);
    if (lp < -745.0) continue;
    acc += std::exp(lp) * sq(k);
  }
  return acc;
}

EigenvalueDiscriminator projector_discriminator(double epsilon, double xi, long m,
                                                double delta) {
  const double a = 0.5 + epsilon / 4.0;
  return EigenvalueDiscriminator(a, a + xi, delta / (m + 1.0));
}

OrGapReport or_binomial_gap(double epsilon, double xi, long m, double delta, double zeta,
                            double purity_term) {
  const auto ped = projector_discriminator(epsilon, xi, m, delta);
  const long x = copies_required(xi, m, delta);
  OrGapReport r;
  r.delta = delta;
  r.zeta = zeta;
  r.m = m;
  r.purity_term = purity_term;
  r.upsilon = 1.0 - or_acceptance_binomial(ped.hi, x, ped);
  r.phi = or_acceptance_binomial(ped.lo, x, ped);
  const double a = 1.0 - r.upsilon - purity_term;
  r.p1 = std::clamp(a * a / 4.0 - zeta, 0.0, 1.0);
  r.p2 = std::clamp(5.0 * (m + 1.0) * (r.phi + purity_term) + zeta, 0.0, 1.0);
  r.gap = r.p1 - r.p2;
  return r;
}

OrRepetitions or_repetitions(double gap, long log2m, double delta_tilde) {
  if (!(gap > 0.0)) throw std::invalid_argument("gap must be positive");
  if (log2m < 1) throw std::invalid_argument("log2 m must be at least 1");
  if (!(delta_tilde > 0.0 && delta_tilde <= 1.0)) {
    throw std::invalid_argument("delta_tilde must lie in (0, 1]");
  }
  OrRepetitions r;
  const double v = 2.0 * std::log(log2m / delta_tilde) / (gap * gap);
  r.k = std::max(0L, ceil_tolerant(v));
  r.degenerate = r.k == 0;
  r.total = r.k * log2m;
  return r;
}

ComplexityReport complexity_report(double dim, long m, double epsilon, double xi,
                                   double delta_tilde, bool spectral_condition,
                                   const BlockCosts& costs) {
  if (!(dim >= 2.0)) throw std::invalid_argument("dimension must be at least 2");
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon out of range");
  if (!(xi > 0.0 && xi <= 1.0)) throw std::invalid_argument("xi out of range");
  if (!(delta_tilde > 0.0 && delta_tilde < 1.0)) {
    throw std::invalid_argument("delta_tilde out of range");
  }
  ComplexityReport r;
  const double n = std::log2(dim);
  r.iterations = mmw::iteration_budget(epsilon, dim);
  r.beta_max = ceil_tolerant((2.0 / epsilon) * std::log(dim));
  r.mu = (xi / 8.0) * std::exp2(-n) * std::exp(-0.5) / 2.0;
  r.qet_degree = std::sqrt(static_cast<double>(r.beta_max)) * std::log(1.0 / r.mu);
  r.amplification_rounds = spectral_condition ? std::pow(dim, 0.25) : std::sqrt(dim);
  r.tpq_queries = r.amplification_rounds * r.qet_degree;

  r.copies_x = copies_required(xi, m, kOrDelta);
  r.or_gap = or_lemma_probabilities(kOrDelta, kOrZeta, m, 0.0).gap;
  // Logarithms of m are floored at 1 so that m = 1 still yields a finite cost.
  const double log_m = std::max(1.0, std::ceil(std::log2(static_cast<double>(m))));
  const double loglog_m = std::max(1.0, std::log2(log_m));
  const auto reps = or_repetitions(r.or_gap, static_cast<long>(log_m), delta_tilde);
  r.or_repetitions_k = std::max(1L, reps.k);
  r.or_tests = r.or_repetitions_k * static_cast<long>(log_m);

  const double sqrt_m = std::sqrt(static_cast<double>(m));
  r.check_queries =
      sqrt_m * log_m * log_m * (loglog_m + std::log(1.0 / delta_tilde)) / (xi * xi);
  r.check_other_gates = r.check_queries / xi;
  r.check_ancillas = log_m / (xi * xi);

  const double amp_n = spectral_condition ? std::pow(dim, 0.25) : std::sqrt(dim);
  r.total_gates_leading = amp_n / std::pow(epsilon, 4.5) * costs.t_k +
                          sqrt_m * (costs.t_sqrt_a / std::pow(epsilon, 4) +
                                    1.0 / std::pow(epsilon, 5));
  r.depth_leading = amp_n / std::sqrt(epsilon) * costs.t_k +
                    sqrt_m * (costs.t_sqrt_a + 1.0 / std::pow(epsilon, 3));
  r.total_block_encoding_queries = static_cast<double>(r.iterations) * r.or_tests *
                                   static_cast<double>(r.copies_x) * r.tpq_queries;
  r.total_gates = static_cast<double>(r.iterations) * r.or_tests *
                  (static_cast<double>(r.copies_x) * r.tpq_queries * costs.t_k +
                   r.check_queries * costs.t_sqrt_a + r.check_other_gates);
  r.qubit_estimate = static_cast<double>(r.copies_x) * n + r.check_ancillas +
                     std::ceil(std::log2(static_cast<double>(r.copies_x))) + 1.0;
  return r;
}

ToffoliEstimate toffoli_estimate(const ops::LatticeSpec& lattice, double epsilon,
                                 ToffoliMode mode) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon out of range");
  const int n = lattice.sites();
  if (n < 2) throw std::invalid_argument("lattice has no bonds");
  const double dim = std::exp2(n);
  const double terms = n + 2.0 * static_cast<double>(lattice.bonds().size());
  const double beta = std::ceil((2.0 / epsilon) * std::log(dim));
  const double mu = epsilon * std::exp2(-n) * std::exp(-0.5) / 16.0;

  ToffoliEstimate e;
  // Parity-constrained sign-based exponential: beta^{3/2} log(1/mu) log(beta/mu).
  e.degree = std::pow(beta, 1.5) * std::log(1.0 / mu) * std::log(beta / mu);
  // Unary-iteration SELECT plus PREPARE over the Pauli terms.
  e.lcu_cost = 2.0 * terms;
  e.rounds = mode == ToffoliMode::amplified
                 ? std::ceil(std::sqrt(2.0 * std::exp(0.5) * dim))
                 : 1.0;
  e.gates = e.degree * e.lcu_cost * e.rounds;
  e.qubits = n + static_cast<int>(std::ceil(std::log2(terms))) + 3 +
             (mode == ToffoliMode::amplified ? 2 : 0);
  return e;
}

}  // namespace tpqsdp::resources
