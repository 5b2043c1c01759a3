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

#ifndef TPQSDP_RESOURCES_HPP
#define TPQSDP_RESOURCES_HPP

#include <cstdint>
#include <string>

#include "tpqsdp/chebyshev.hpp"
#include "tpqsdp/models.hpp"

namespace tpqsdp::resources {

/// Failure probability and projector-test error used by the OR-lemma analysis.
inline constexpr double kOrDelta = 1.0 / 184.0;
inline constexpr double kOrZeta = 1.0 / 32.0;

/// ceil((8 / xi^2) ln((m + 1) / delta)).
long copies_required(double xi, long m, double delta);

struct OrGapReport {
  double p1 = 0.0;
  double p2 = 0.0;
  double gap = 0.0;
  double delta = 0.0;
  double zeta = 0.0;
  double upsilon = 0.0;  // case (i) acceptance deficit
  double phi = 0.0;      // case (ii) acceptance
  long m = 0;
  double purity_term = 0.0;
  bool applicable() const { return gap > 0.0; }
};

/// Plug-in of the worst-case acceptance bounds.
OrGapReport or_lemma_probabilities(double delta, double zeta, long m, double purity_term);

/// Eigenvalue discrimination polynomial P(y) = (1 + S(y - c)) / 2, with S an
/// odd sign approximation of width hi - lo centred at c = (lo + hi) / 2 and
/// error 2 delta_prime, so P <= delta_prime below lo and >= 1 - delta_prime above hi.
struct EigenvalueDiscriminator {
  double lo = 0.0;
  double hi = 0.0;
  double delta_prime = 0.0;
  poly::ChebyshevPoly sign;

  EigenvalueDiscriminator(double lo, double hi, double delta_prime);
  double operator()(double y) const;
};

/// sum_k Binom(x, p, k) P(k / x)^2.
double or_acceptance_binomial(double p_true, long x, const EigenvalueDiscriminator& ped);

/// Thresholds a = 1/2 + eps/4 and b = a + xi of the projector test.
EigenvalueDiscriminator projector_discriminator(double epsilon, double xi, long m,
                                                double delta);

/// Gap from the exact binomial acceptances at p = b (case i) and p = a (case ii).
OrGapReport or_binomial_gap(double epsilon, double xi, long m, double delta, double zeta,
                            double purity_term);

struct OrRepetitions {
  long k = 0;
  long total = 0;
  bool degenerate = false;
};

/// K = ceil(2 ln(log2m / delta_tilde) / gap^2) and total = K * log2m.
OrRepetitions or_repetitions(double gap, long log2m, double delta_tilde);

struct BlockCosts {
  double t_k = 1.0;      // gates per block encoding of the shifted Hamiltonian
  double t_sqrt_a = 1.0; // gates per block encoding of sqrt(A_j)
};

/// Every entry uses unit constants. The *_leading fields drop polylog factors.
struct ComplexityReport {
  long iterations = 0;   // T
  long beta_max = 0;
  double mu = 0.0;
  double qet_degree = 0.0;
  double amplification_rounds = 0.0;
  double tpq_queries = 0.0;
  long copies_x = 0;
  double or_gap = 0.0;
  long or_repetitions_k = 0;
  long or_tests = 0;
  double check_queries = 0.0;
  double check_other_gates = 0.0;
  double check_ancillas = 0.0;
  double total_gates_leading = 0.0;
  double total_gates = 0.0;
  double depth_leading = 0.0;
  double total_block_encoding_queries = 0.0;
  double qubit_estimate = 0.0;
};

ComplexityReport complexity_report(double dim, long m, double epsilon, double xi,
                                   double delta_tilde, bool spectral_condition,
                                   const BlockCosts& costs = {});

enum class ToffoliMode { amplified, proof_of_concept };

struct ToffoliEstimate {
  double gates = 0.0;
  int qubits = 0;
  double degree = 0.0;
  double lcu_cost = 0.0;
  double rounds = 1.0;
};

/// Order-of-magnitude Toffoli and qubit counts for one TPQ preparation.
ToffoliEstimate toffoli_estimate(const ops::LatticeSpec& lattice, double epsilon,
                                 ToffoliMode mode);

}  // namespace tpqsdp::resources

#endif  // TPQSDP_RESOURCES_HPP
