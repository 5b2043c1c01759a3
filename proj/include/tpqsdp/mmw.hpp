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

#ifndef TPQSDP_MMW_HPP
#define TPQSDP_MMW_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tpqsdp/pauli.hpp"
#include "tpqsdp/sparse_operator.hpp"
#include "tpqsdp/tpq.hpp"

namespace tpqsdp::mmw {

/// One-sided constraint tr[A rho] <= bound.
struct Constraint {
  ops::PauliSum op;
  double bound = 0.0;
  std::string label;
};

/// Feasibility problem over n-qubit density matrices, solved to accuracy epsilon.
struct SdpProblem {
  int n = 0;
  std::vector<Constraint> constraints;
  double epsilon = 0.1;
  std::optional<ops::PauliSum> objective;  // maximize tr[C rho]
  double trace_bound = 1.0;

  /// Checks sizes, |b_j| <= 1, ||A_j|| <= 1 and 0 < epsilon < 1.
  void validate() const;
};

/// Extends every operator by a fresh leading qubit, A -> |0><0| (x) A, and
/// divides bounds and epsilon by R.
SdpProblem rescale_problem(const SdpProblem& raw, double r);

/// ceil(8 ln N / eps^2).
long iteration_budget(double epsilon, double dim);

/// Constraint operators compiled once per solve.
struct CompiledProblem {
  int n = 0;
  std::vector<ops::SparseOperator> ops;
  std::vector<double> bounds;
  double epsilon = 0.0;
};

CompiledProblem compile_problem(const SdpProblem& problem);

/// H = (4 / (tau eps)) sum_j theta_j A_j and beta = tau eps / 4.
std::pair<ops::SparseOperator, double> hamiltonian_from_theta(
    const CompiledProblem& problem, std::span<const double> theta, long tau);

/// First index, in a freshly shuffled order, whose estimate exceeds b_j + eps.
std::optional<std::size_t> find_broken_constraint(std::span<const double> estimates,
                                                  std::span<const double> bounds,
                                                  double epsilon, std::mt19937_64& rng);

struct TraceRow {
  long tau = 0;
  double beta = 0.0;
  long violated_index = -1;
  double max_violation = 0.0;  // max_j (estimate_j - b_j)
  std::optional<double> rel_entropy;
  std::optional<double> seconds;
};

struct SolverTrace {
  std::vector<TraceRow> rows;

  void write_csv(std::ostream& os) const;
};

enum class VerdictKind { feasible, infeasible };

struct Verdict {
  VerdictKind kind = VerdictKind::infeasible;
  long tau = 0;  // iteration at which the loop stopped
  bool stopped_by_hook = false;
  std::vector<double> theta;
  SolverTrace trace;
  std::vector<double> final_estimates;

  bool feasible() const { return kind == VerdictKind::feasible; }
};

enum class SolverBackend { exact, tpq };

struct SolverOptions {
  SolverBackend backend = SolverBackend::exact;
  tpq::EnsembleConfig ensemble;  // used by the tpq backend
  std::uint64_t seed = 0;
  bool record_time = false;
};

struct SolverHooks {
  /// Relative entropy to a reference state given theta; evaluated every
  /// `rel_entropy_stride` steps and at the final step.
  std::function<double(std::span<const double> theta)> rel_entropy;
  int rel_entropy_stride = 10;
  /// Optional early stop, called after estimates are available.
  std::function<bool(long tau, std::span<const double> theta,
                     std::span<const double> estimates)>
      stop;
  std::function<void(const TraceRow&)> on_row;
};

/// Zero-sum matrix multiplicative weights loop.
Verdict zero_sum_solve(const SdpProblem& problem, const SolverOptions& options,
                       const SolverHooks& hooks = {});

struct OptimizationResult {
  double value = -1.0;
  int calls = 0;
  std::optional<Verdict> witness;  // last feasible verdict
};

/// Bisection on a0 in [-1, 1] with the extra constraint tr[-C rho] <= -a0.
OptimizationResult binary_search_optimize(const SdpProblem& problem,
                                          const SolverOptions& options);

}  // namespace tpqsdp::mmw

#endif  // TPQSDP_MMW_HPP
