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

#include "tpqsdp/mmw.hpp"

#include <chrono>
#include <cmath>
#include <algorithm>
#include <cstdio>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "tpqsdp/exactspec.hpp"
#include "tpqsdp/random.hpp"

namespace tpqsdp::mmw {
namespace {

constexpr double kNormTolerance = 1e-9;

double operator_norm(const ops::PauliSum& a) {
  if (a.coefficient_norm() <= 1.0 + kNormTolerance) return a.coefficient_norm();
  const auto compiled = ops::compile(a);
  if (a.num_qubits() <= 10) {
    const RealVector ev = exact::eigenvalues(ops::to_dense(compiled));
    return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  }
  return ops::spectral_norm_estimate(compiled, 2000);
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

void SdpProblem::validate() const {
  if (n < 1 || n > kMaxQubits) throw std::invalid_argument("qubit count out of range");
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  if (!(trace_bound > 0.0)) throw std::invalid_argument("trace bound must be positive");
  if (constraints.empty() && !objective) {
    throw std::invalid_argument("problem has no constraints");
  }
  for (std::size_t j = 0; j < constraints.size(); ++j) {
    const auto& c = constraints[j];
    const std::string name = c.label.empty() ? "constraint " + std::to_string(j) : c.label;
    if (c.op.num_qubits() != n) throw std::invalid_argument(name + ": qubit count mismatch");
    if (!(std::abs(c.bound) <= 1.0)) throw std::invalid_argument(name + ": |b| exceeds 1");
    if (operator_norm(c.op) > 1.0 + kNormTolerance) {
      throw std::invalid_argument(name + ": operator norm exceeds 1");
    }
  }
  if (objective) {
    if (objective->num_qubits() != n) {
      throw std::invalid_argument("objective: qubit count mismatch");
    }
    if (operator_norm(*objective) > 1.0 + kNormTolerance) {
      throw std::invalid_argument("objective: operator norm exceeds 1");
    }
  }
}

SdpProblem rescale_problem(const SdpProblem& raw, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("R must be positive");
  auto extend = [](const ops::PauliSum& a) {
    // |0><0| (x) A = ((I + Z) / 2) (x) A
    std::vector<ops::PauliTerm> terms;
    for (const auto& t : a.terms()) {
      terms.push_back({0.5 * t.coefficient, "I" + t.letters});
      terms.push_back({0.5 * t.coefficient, "Z" + t.letters});
    }
    return ops::PauliSum(a.num_qubits() + 1, std::move(terms));
  };
  SdpProblem out;
  out.n = raw.n + 1;
  out.epsilon = raw.epsilon / r;
  out.trace_bound = 1.0;
  for (const auto& c : raw.constraints) {
    out.constraints.push_back({extend(c.op), c.bound / r, c.label});
  }
  if (raw.objective) out.objective = extend(*raw.objective);
  return out;
}

long iteration_budget(double epsilon, double dim) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (!(dim >= 2.0)) throw std::invalid_argument("dimension must be at least 2");
  const double t = 8.0 * std::log(dim) / (epsilon * epsilon);
  // Guard against t landing a rounding error above an integer.
  const double r = std::round(t);
  return static_cast<long>(std::abs(t - r) < 1e-9 * t ? r : std::ceil(t));
}

CompiledProblem compile_problem(const SdpProblem& problem) {
  problem.validate();
  CompiledProblem out;
  out.n = problem.n;
  out.epsilon = problem.epsilon;
  for (const auto& c : problem.constraints) {
    out.ops.push_back(ops::compile(c.op));
    out.bounds.push_back(c.bound);
  }
  return out;
}

std::pair<ops::SparseOperator, double> hamiltonian_from_theta(
    const CompiledProblem& problem, std::span<const double> theta, long tau) {
  if (tau < 1) throw std::invalid_argument("tau must be at least 1");
  if (theta.size() != problem.ops.size()) throw std::invalid_argument("theta size mismatch");
  const double scale = 4.0 / (static_cast<double>(tau) * problem.epsilon);
  std::vector<double> w(theta.begin(), theta.end());
  for (auto& x : w) x *= scale;
  return {ops::linear_combination(w, problem.ops), tau * problem.epsilon / 4.0};
}

std::optional<std::size_t> find_broken_constraint(std::span<const double> estimates,
                                                  std::span<const double> bounds,
                                                  double epsilon, std::mt19937_64& rng) {
  if (estimates.size() != bounds.size()) throw std::invalid_argument("size mismatch");
  std::vector<std::size_t> order(estimates.size());
  std::iota(order.begin(), order.end(), 0);
  // Fisher-Yates with raw engine output so the order is library independent.
  for (std::size_t i = order.size(); i > 1; --i) {
    const auto k = static_cast<std::size_t>(
        (static_cast<unsigned __int128>(rng()) * i) >> 64);
    std::swap(order[i - 1], order[k]);
  }
  for (std::size_t j : order) {
    if (estimates[j] > bounds[j] + epsilon) return j;
  }
  return std::nullopt;
}

void SolverTrace::write_csv(std::ostream& os) const {
  os << "tau,beta,violated_index,max_violation,rel_entropy,seconds\n";
  for (const auto& r : rows) {
    os << r.tau << ',' << format_double(r.beta) << ',' << r.violated_index << ','
       << format_double(r.max_violation) << ','
       << (r.rel_entropy ? format_double(*r.rel_entropy) : "") << ','
       << (r.seconds ? format_double(*r.seconds) : "") << '\n';
  }
}

Verdict zero_sum_solve(const SdpProblem& problem, const SolverOptions& options,
                       const SolverHooks& hooks) {
  const CompiledProblem cp = compile_problem(problem);
  const std::size_t m = cp.ops.size();
  if (m == 0) throw std::invalid_argument("problem has no constraints");
  const double eps = cp.epsilon;
  const double dim = std::exp2(cp.n);
  const long budget = iteration_budget(eps, dim);
  if (hooks.rel_entropy_stride < 1) throw std::invalid_argument("stride must be >= 1");

  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 order_rng(derive_seed(options.seed, {0x6f72646572ULL}));
  const ops::SparseOperator zero(cp.n, SparseMatrix(static_cast<Eigen::Index>(dim),
                                                    static_cast<Eigen::Index>(dim)));
  Verdict v;
  v.theta.assign(m, 0.0);
  std::vector<double> est(m);

  for (long tau = 0;; ++tau) {
    if (options.backend == SolverBackend::exact) {
      // rho = exp(-sum_j theta_j A_j) / Z; tau = 0 gives the maximally mixed state.
      const auto w = ops::linear_combination(v.theta, cp.ops);
      const auto rho = exact::gibbs_state(exact::eigendecompose(w), 1.0);
      for (std::size_t j = 0; j < m; ++j) est[j] = exact::gibbs_expectation(rho, cp.ops[j]);
    } else {
      tpq::EnsembleConfig cfg = options.ensemble;
      cfg.seed = options.seed;
      cfg.stream = static_cast<std::uint64_t>(tau);
      cfg.beta_max = budget * eps / 4.0;
      const auto est_tpq =
          tau == 0 ? tpq::estimate_expectations(zero, 0.0, cp.ops, cfg)
                   : [&] {
                       const auto [h, beta] = hamiltonian_from_theta(cp, v.theta, tau);
                       return tpq::estimate_expectations(h, beta, cp.ops, cfg);
                     }();
      est = est_tpq.values;
    }

    TraceRow row;
    row.tau = tau;
    row.beta = tau * eps / 4.0;
    row.max_violation = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < m; ++j) {
      row.max_violation = std::max(row.max_violation, est[j] - cp.bounds[j]);
    }
    const auto broken = find_broken_constraint(est, cp.bounds, eps, order_rng);
    const bool stop = hooks.stop && hooks.stop(tau, v.theta, est);
    const bool last = !broken || stop || tau == budget;
    if (broken) row.violated_index = static_cast<long>(*broken);
    if (hooks.rel_entropy && (tau % hooks.rel_entropy_stride == 0 || last)) {
      row.rel_entropy = hooks.rel_entropy(v.theta);
    }
    if (options.record_time) {
      row.seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    v.trace.rows.push_back(row);
    if (hooks.on_row) hooks.on_row(row);

    if (last) {
      v.tau = tau;
      v.final_estimates = est;
      v.stopped_by_hook = stop && broken.has_value();
      v.kind = (!broken || stop) ? VerdictKind::feasible : VerdictKind::infeasible;
      return v;
    }
    v.theta[*broken] += eps / 4.0;
  }
}

OptimizationResult binary_search_optimize(const SdpProblem& problem,
                                          const SolverOptions& options) {
  if (!problem.objective) throw std::invalid_argument("problem has no objective");
  const int calls = static_cast<int>(std::ceil(std::log2(1.0 / problem.epsilon)));
  double lo = -1.0, hi = 1.0;
  OptimizationResult out;
  for (int k = 0; k < calls; ++k) {
    const double mid = 0.5 * (lo + hi);
    SdpProblem p = problem;
    p.objective.reset();
    p.constraints.push_back({-1.0 * *problem.objective, -mid, "objective"});
    Verdict v = zero_sum_solve(p, options);
    ++out.calls;
    if (v.feasible()) {
      lo = mid;
      out.witness = std::move(v);
    } else {
      hi = mid;
    }
  }
  out.value = lo;
  return out;
}

}  // namespace tpqsdp::mmw
