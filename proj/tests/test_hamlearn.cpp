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

#include <cmath>
#include <numeric>
#include <sstream>

#include <gtest/gtest.h>

#include "dense_oracle.hpp"
#include "tpqsdp/exactspec.hpp"
#include "tpqsdp/hamlearn.hpp"
#include "tpqsdp/sparse_operator.hpp"

namespace {

using namespace tpqsdp;

learn::ModelSpec hubbard(int nx, int ny) {
  learn::ModelSpec m;
  m.lattice = {nx, ny};
  return m;
}

learn::ModelSpec xxz(int n) {
  learn::ModelSpec m;
  m.kind = learn::ModelKind::xxz;
  m.chain_length = n;
  return m;
}

TEST(Instance, ConstraintCounts) {
  const auto h = learn::make_instance(hubbard(2, 2), 0.4, 0.05, 1);
  EXPECT_EQ(h.problem.constraints.size(), 24u);
  const auto x = learn::make_instance(xxz(10), 0.4, 0.05, 1);
  EXPECT_EQ(x.problem.constraints.size(), 56u);
  for (double f : x.model.h) {
    EXPECT_GE(f, -2.0);
    EXPECT_LE(f, 2.0);
  }
  // Same seed, same fields; different seed, different fields.
  EXPECT_EQ(learn::make_instance(xxz(6), 0.4, 0.05, 3).model.h,
            learn::make_instance(xxz(6), 0.4, 0.05, 3).model.h);
  EXPECT_NE(learn::make_instance(xxz(6), 0.4, 0.05, 3).model.h,
            learn::make_instance(xxz(6), 0.4, 0.05, 4).model.h);
}

TEST(Instance, PairsAndBounds) {
  const auto inst = learn::make_instance(hubbard(2, 2), 0.4, 0.05, 1);
  const auto rho = oracle::expm(-0.4 * oracle::dense(inst.terms.hamiltonian));
  const DenseMatrix target = rho / rho.trace();
  for (std::size_t k = 0; k < inst.expectations.size(); ++k) {
    const auto& plus = inst.problem.constraints[2 * k];
    const auto& minus = inst.problem.constraints[2 * k + 1];
    EXPECT_EQ(minus.op, -plus.op);
    EXPECT_DOUBLE_EQ(minus.bound, -plus.bound);
    EXPECT_NEAR(plus.bound, (target * oracle::dense(plus.op)).trace().real(), 1e-12);
    EXPECT_LE(std::abs(plus.bound), 1.0);
  }
  EXPECT_NEAR(inst.target_purity, (target * target).trace().real(), 1e-12);

  const auto hot = learn::make_instance(hubbard(2, 2), 0.0, 0.05, 1);
  for (double b : hot.expectations) EXPECT_NEAR(b, 0.0, 1e-15);
}

TEST(Instance, SnapshotListsBounds) {
  const auto inst = learn::make_instance(xxz(4), 0.4, 0.05, 9);
  std::ostringstream os;
  learn::write_instance(os, inst);
  const std::string s = os.str();
  EXPECT_NE(s.find("model xxz"), std::string::npos);
  EXPECT_NE(s.find("seed 9"), std::string::npos);
  int lines = 0;
  for (std::size_t p = 0; (p = s.find("\nb ", p)) != std::string::npos; ++p) ++lines;
  EXPECT_EQ(lines, 10);
}

TEST(Recovery, ExactThetaGivesTargetParameters) {
  const auto inst = learn::make_instance(hubbard(2, 2), 0.4, 0.05, 1);
  std::vector<double> theta(inst.problem.constraints.size(), 0.0);
  for (std::size_t k = 0; k < inst.terms.target_params.size(); ++k) {
    const double t = 0.4 * inst.terms.target_params[k];
    theta[2 * k + (t < 0)] = std::abs(t);
  }
  const auto learned = learn::learned_parameters(theta, inst);
  for (std::size_t k = 0; k < learned.size(); ++k) {
    EXPECT_NEAR(learned[k], inst.terms.target_params[k], 1e-14);
  }
  const learn::RelativeEntropyOracle rel(inst);
  EXPECT_NEAR(rel(theta), 0.0, 1e-10);
  // At theta = 0 the model is maximally mixed: S = ln N - S(target).
  EXPECT_NEAR(rel(std::vector<double>(theta.size(), 0.0)), std::log(16.0) - inst.target_entropy,
              1e-12);
}

TEST(Recovery, RelativeEntropyMatchesDense) {
  const auto inst = learn::make_instance(xxz(4), 0.4, 0.05, 2);
  std::vector<double> theta(inst.problem.constraints.size());
  for (std::size_t j = 0; j < theta.size(); ++j) theta[j] = 0.01 * ((j * 7) % 5);
  DenseMatrix w = DenseMatrix::Zero(16, 16);
  for (std::size_t j = 0; j < theta.size(); ++j) w += theta[j] * oracle::dense(inst.problem.constraints[j].op);
  DenseMatrix rho = oracle::expm(-w);
  rho /= rho.trace();
  DenseMatrix eta = oracle::expm(-0.4 * oracle::dense(inst.terms.hamiltonian));
  eta /= eta.trace();
  const double want = (eta * (eta.log() - rho.log())).trace().real();
  EXPECT_NEAR(learn::RelativeEntropyOracle(inst)(theta), want, 1e-10);
}

TEST(Learning, HubbardExactBackend) {
  const auto inst = learn::make_instance(hubbard(2, 2), 0.4, 0.05, 1);
  const auto run = learn::run_learning(inst, {}, 1);
  ASSERT_TRUE(run.verdict.feasible());
  EXPECT_LE(run.verdict.trace.rows.back().max_violation, inst.epsilon);
  EXPECT_LE(run.metrics.exact_max_violation, inst.epsilon + 1e-12);
  EXPECT_LT(run.metrics.final_rel_entropy, run.metrics.initial_rel_entropy);
  EXPECT_LE(run.metrics.final_rel_entropy, 1e-2);
  int down = 0, steps = 0;
  const auto& rows = run.verdict.trace.rows;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    ++steps;
    down += *rows[i].rel_entropy < *rows[i - 1].rel_entropy;
  }
  EXPECT_GE(static_cast<double>(down) / steps, 0.95);
  EXPECT_NEAR(*rows.back().rel_entropy, run.metrics.final_rel_entropy, 1e-12);
  EXPECT_NEAR(*rows.front().rel_entropy, run.metrics.initial_rel_entropy, 1e-12);
}

TEST(Learning, SelfConsistentRecovery) {
  // The learned parameters define a Hamiltonian whose Gibbs state at the
  // target temperature is the solver's own final state.
  const auto inst = learn::make_instance(hubbard(2, 2), 0.4, 0.05, 1);
  const auto run = learn::run_learning(inst, {}, 50);
  ASSERT_TRUE(run.verdict.feasible());
  DenseMatrix model = DenseMatrix::Zero(16, 16);
  for (std::size_t k = 0; k < run.metrics.learned.size(); ++k) {
    model += run.metrics.learned[k] * oracle::dense(inst.terms.constraint_terms[k]);
  }
  DenseMatrix w = DenseMatrix::Zero(16, 16);
  for (std::size_t j = 0; j < run.verdict.theta.size(); ++j) {
    w += run.verdict.theta[j] * oracle::dense(inst.problem.constraints[j].op);
  }
  DenseMatrix a = oracle::expm(-inst.beta_target * model), b = oracle::expm(-w);
  EXPECT_LT((a / a.trace() - b / b.trace()).norm(), 1e-12);

  // Feeding the learned model back as the target recovers it exactly.
  auto spec = inst.model;
  auto again = learn::make_instance(spec, inst.beta_target, inst.epsilon, inst.seed);
  again.terms.target_params = run.metrics.learned;
  EXPECT_NEAR(learn::recover_parameters(run.verdict, again).mse, 0.0, 1e-24);
  EXPECT_THROW(learn::recover_parameters(mmw::Verdict{}, inst), std::invalid_argument);
}

TEST(Learning, AccuracyImprovesWithEpsilon) {
  double prev = 1e9;
  for (double eps : {0.2, 0.1, 0.05}) {
    const auto inst = learn::make_instance(hubbard(2, 2), 0.4, eps, 1);
    const auto run = learn::run_learning(inst, {}, 100);
    ASSERT_TRUE(run.verdict.feasible());
    EXPECT_LE(run.metrics.mse, prev) << eps;
    prev = run.metrics.mse;
  }
}

TEST(Learning, TpqBackendVerdictHoldsOnExactState) {
  const auto inst = learn::make_instance(hubbard(2, 2), 0.4, 0.05, 1);
  mmw::SolverOptions opt;
  opt.backend = mmw::SolverBackend::tpq;
  opt.seed = 3;
  const auto run = learn::run_learning(inst, opt, 100);
  ASSERT_TRUE(run.verdict.feasible());
  EXPECT_LE(run.metrics.exact_max_violation, inst.epsilon + 2 * opt.ensemble.xi);
}

}  // namespace
