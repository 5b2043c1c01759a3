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

#include "tpqsdp/hamlearn.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <ostream>
#include <random>
#include <stdexcept>

#include "tpqsdp/random.hpp"

namespace tpqsdp::learn {

int ModelSpec::num_qubits() const {
  return kind == ModelKind::hubbard ? lattice.sites() : chain_length;
}

LearningInstance make_instance(const ModelSpec& model, double beta_target,
                               double epsilon, std::uint64_t seed) {
  if (!(beta_target >= 0.0)) throw std::invalid_argument("beta_target must be >= 0");
  const int n = model.num_qubits();
  if (n > exact::kMaxDenseQubits) {
    throw std::invalid_argument("target state too large for the dense oracle");
  }
  LearningInstance inst;
  inst.model = model;
  inst.beta_target = beta_target;
  inst.epsilon = epsilon;
  inst.seed = seed;
  if (model.kind == ModelKind::hubbard) {
    inst.terms = ops::build_hubbard_spinless(model.lattice, model.mu, model.w, model.u);
  } else {
    if (inst.model.h.empty()) {
      std::mt19937_64 rng(derive_seed(seed, {0x78787a68ULL}));
      for (int i = 0; i < n; ++i) {
        const double u01 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        inst.model.h.push_back(-2.0 + 4.0 * u01);
      }
    }
    inst.terms = ops::build_xxz(n, model.j, model.delta, inst.model.h);
  }

  const auto target = exact::gibbs_state(
      exact::eigendecompose(ops::compile(inst.terms.hamiltonian)), beta_target);
  inst.target_purity = exact::purity(target);
  inst.target_entropy = exact::entropy(target);

  inst.problem.n = n;
  inst.problem.epsilon = epsilon;
  for (std::size_t k = 0; k < inst.terms.constraint_terms.size(); ++k) {
    const auto& o = inst.terms.constraint_terms[k];
    const double b = exact::gibbs_expectation(target, ops::compile(o));
    inst.expectations.push_back(b);
    inst.problem.constraints.push_back({o, b, inst.terms.labels[k] + "+"});
    inst.problem.constraints.push_back({-o, -b, inst.terms.labels[k] + "-"});
  }
  inst.problem.validate();
  return inst;
}

void write_instance(std::ostream& os, const LearningInstance& inst) {
  const auto prec = os.precision(17);
  const auto& m = inst.model;
  if (m.kind == ModelKind::hubbard) {
    os << "model hubbard\nnx " << m.lattice.nx << "\nny " << m.lattice.ny << "\nmu " << m.mu
       << "\nw " << m.w << "\nu " << m.u << '\n';
  } else {
    os << "model xxz\nn " << m.chain_length << "\nj " << m.j << "\ndelta " << m.delta
       << "\nh";
    for (double h : m.h) os << ' ' << h;
    os << '\n';
  }
  os << "beta_target " << inst.beta_target << "\nepsilon " << inst.epsilon << "\nseed "
     << inst.seed << "\npurity " << inst.target_purity << '\n';
  for (std::size_t k = 0; k < inst.expectations.size(); ++k) {
    os << "b " << inst.terms.labels[k] << ' ' << inst.expectations[k] << ' '
       << inst.terms.target_params[k] << '\n';
  }
  os.precision(prec);
}

std::vector<double> learned_parameters(const std::vector<double>& theta,
                                       const LearningInstance& inst) {
  const std::size_t m = inst.terms.constraint_terms.size();
  if (theta.size() != 2 * m) throw std::invalid_argument("theta size mismatch");
  if (!(inst.beta_target > 0.0)) {
    throw std::invalid_argument("parameters are undefined at beta_target = 0");
  }
  std::vector<double> out(m);
  for (std::size_t k = 0; k < m; ++k) {
    out[k] = (theta[2 * k] - theta[2 * k + 1]) / inst.beta_target;
  }
  return out;
}

RelativeEntropyOracle::RelativeEntropyOracle(const LearningInstance& inst) : inst_(inst) {
  for (const auto& c : inst.problem.constraints) {
    ops_.push_back(ops::compile(c.op));
    bounds_.push_back(c.bound);
  }
}

double RelativeEntropyOracle::operator()(std::span<const double> theta) const {
  // S(eta || e^{-W}/Z) = -S(eta) + sum_j theta_j tr[eta A_j] + ln Z
  const auto w = ops::linear_combination(theta, ops_);
  const RealVector ev = exact::eigenvalues(ops::to_dense(w));
  double lin = 0.0;
  for (std::size_t j = 0; j < bounds_.size(); ++j) lin += theta[j] * bounds_[j];
  return -inst_.target_entropy + lin + exact::log_partition(ev, 1.0);
}

LearningMetrics recover_parameters(const mmw::Verdict& verdict,
                                   const LearningInstance& inst) {
  if (!verdict.feasible()) {
    throw std::invalid_argument("parameters can only be recovered from a feasible verdict");
  }
  LearningMetrics out;
  out.learned = learned_parameters(verdict.theta, inst);
  const auto& truth = inst.terms.target_params;
  double sq = 0.0;
  for (std::size_t k = 0; k < truth.size(); ++k) {
    const double d = out.learned[k] - truth[k];
    sq += d * d;
    if (truth[k] != 0.0) {
      out.max_multiplicative_error =
          std::max(out.max_multiplicative_error, std::abs(d / truth[k]));
    }
  }
  out.mse = sq / static_cast<double>(truth.size());

  const RelativeEntropyOracle rel(inst);
  out.final_rel_entropy = rel(verdict.theta);
  out.initial_rel_entropy = rel(std::vector<double>(verdict.theta.size(), 0.0));

  std::vector<ops::SparseOperator> ops;
  for (const auto& c : inst.problem.constraints) ops.push_back(ops::compile(c.op));
  const auto rho =
      exact::gibbs_state(exact::eigendecompose(ops::linear_combination(verdict.theta, ops)), 1.0);
  out.exact_max_violation = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < ops.size(); ++j) {
    out.exact_max_violation =
        std::max(out.exact_max_violation,
                 exact::gibbs_expectation(rho, ops[j]) - inst.problem.constraints[j].bound);
  }
  return out;
}

LearningRun run_learning(const LearningInstance& inst, const mmw::SolverOptions& options,
                         int rel_entropy_stride) {
  const RelativeEntropyOracle rel(inst);
  mmw::SolverHooks hooks;
  hooks.rel_entropy = [&rel](std::span<const double> theta) { return rel(theta); };
  hooks.rel_entropy_stride = rel_entropy_stride;
  LearningRun run;
  run.verdict = mmw::zero_sum_solve(inst.problem, options, hooks);
  if (run.verdict.feasible()) run.metrics = recover_parameters(run.verdict, inst);
  return run;
}

}  // namespace tpqsdp::learn
