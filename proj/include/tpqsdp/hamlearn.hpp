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

#ifndef TPQSDP_HAMLEARN_HPP
#define TPQSDP_HAMLEARN_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tpqsdp/exactspec.hpp"
#include "tpqsdp/mmw.hpp"
#include "tpqsdp/models.hpp"

namespace tpqsdp::learn {

enum class ModelKind { hubbard, xxz };

struct ModelSpec {
  ModelKind kind = ModelKind::hubbard;
  // Hubbard
  ops::LatticeSpec lattice{2, 2};
  double mu = 1.0;
  double w = 0.5;
  double u = 1.2;
  // XXZ
  int chain_length = 10;
  double j = 1.0;
  double delta = 0.5;
  std::vector<double> h;  // drawn from U[-2, 2] with the instance seed when empty

  int num_qubits() const;
};

struct LearningInstance {
  ModelSpec model;
  double beta_target = 0.4;
  double epsilon = 0.05;
  std::uint64_t seed = 0;
  ops::ModelTerms terms;
  std::vector<double> expectations;  // b_j = tr[rho_target O_j]
  mmw::SdpProblem problem;           // pairs (O_j, b_j), (-O_j, -b_j)
  double target_purity = 0.0;
  double target_entropy = 0.0;
};

LearningInstance make_instance(const ModelSpec& model, double beta_target,
                               double epsilon, std::uint64_t seed);

/// Writes model, parameters, seed and b_j so a run can be replayed.
void write_instance(std::ostream& os, const LearningInstance& inst);

struct LearningMetrics {
  std::vector<double> learned;  // per physical term
  double mse = 0.0;
  double max_multiplicative_error = 0.0;
  double final_rel_entropy = 0.0;
  double initial_rel_entropy = 0.0;
  double exact_max_violation = 0.0;  // against the exact Gibbs state of the final theta
};

/// theta_hat_j = (theta(O_j, b_j) - theta(-O_j, -b_j)) / beta_target.
std::vector<double> learned_parameters(const std::vector<double>& theta,
                                       const LearningInstance& inst);

/// S(rho_target || rho_theta) from spectra only.
class RelativeEntropyOracle {
 public:
  explicit RelativeEntropyOracle(const LearningInstance& inst);
  double operator()(std::span<const double> theta) const;

 private:
  const LearningInstance& inst_;
  std::vector<ops::SparseOperator> ops_;
  std::vector<double> bounds_;
};

LearningMetrics recover_parameters(const mmw::Verdict& verdict,
                                   const LearningInstance& inst);

struct LearningRun {
  mmw::Verdict verdict;
  LearningMetrics metrics;
};

LearningRun run_learning(const LearningInstance& inst, const mmw::SolverOptions& options,
                         int rel_entropy_stride = 10);

}  // namespace tpqsdp::learn

#endif  // TPQSDP_HAMLEARN_HPP
