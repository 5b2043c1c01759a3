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

#ifndef TPQSDP_TPQ_HPP
#define TPQSDP_TPQ_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "tpqsdp/exactspec.hpp"
#include "tpqsdp/krylov.hpp"
#include "tpqsdp/qet.hpp"
#include "tpqsdp/sparse_operator.hpp"

namespace tpqsdp::tpq {

enum class Backend { exact, krylov, qet };

Backend parse_backend(const std::string& name);
std::string to_string(Backend b);

struct EnsembleConfig {
  int batches = 3;
  int samples_per_batch = 25;
  Backend backend = Backend::krylov;
  double xi = 0.05;  // target deviation, used by the qet backend
  std::uint64_t seed = 0;
  int threads = 1;
  krylov::KrylovConfig krylov;
  /// Distinguishes ensembles drawn from the same seed, e.g. solver iterations.
  std::uint64_t stream = 0;
  /// Largest inverse temperature of the run; sets the ground-shift margin of
  /// the qet backend. Non-positive means use the preparation beta.
  double beta_max = 0.0;

  void validate() const;
};

struct TpqEstimate {
  std::vector<double> values;                   // median of batch means
  std::vector<std::vector<double>> batch_means; // [observable][batch]
  int samples = 0;
};

/// Random stabilizer state for sample `index` of stream `stream`.
StateVector random_stabilizer_state(int n, std::uint64_t seed, std::uint64_t stream,
                                    std::uint64_t index);

/// Holds whatever the backend precomputes for a fixed (H, beta).
class TpqPreparer {
 public:
  TpqPreparer(const ops::SparseOperator& h, double beta, const EnsembleConfig& cfg);

  /// Normalized e^{-beta H / 2} u for the sample's stabilizer state u.
  StateVector prepare(std::uint64_t sample_index) const;

  /// Same, from a caller-supplied input state.
  StateVector prepare_from(const StateVector& u) const;

  /// Ground-energy shift used by the qet backend.
  double ground_shift() const { return ground_shift_; }

 private:
  const ops::SparseOperator& h_;
  double beta_;
  EnsembleConfig cfg_;
  DenseMatrix propagator_;  // exact backend: e^{-beta H / 2}
  std::unique_ptr<poly::QetPreparer> qet_;
  double ground_shift_ = 0.0;
};

StateVector prepare_tpq(const ops::SparseOperator& h, double beta,
                        const EnsembleConfig& cfg, std::uint64_t sample_index);

/// Median-of-means estimate of <psi|A_j|psi> over the ensemble.
TpqEstimate estimate_expectations(const ops::SparseOperator& h, double beta,
                                  std::span<const ops::SparseOperator> observables,
                                  const EnsembleConfig& cfg);

/// Median of an odd-length list.
double median(std::vector<double> v);

/// Pairwise (cascade) sum, independent of evaluation order.
double pairwise_sum(std::span<const double> v);

struct ObservableErrorStats {
  double exact = 0.0;
  double mse = 0.0;
  double mse_stderr = 0.0;
  double tail_frequency = 0.0;  // fraction with |err| >= tail_threshold
};

struct TpqErrorStats {
  double purity = 0.0;
  double bound = 0.0;  // (105/2) sqrt(purity)
  double tail_threshold = 0.1;
  int trials = 0;
  std::vector<ObservableErrorStats> observables;

  /// MSE <= bound + 3 stderr for every observable.
  bool bound_holds() const;
};

/// Single-sample TPQ errors against exact Gibbs values (krylov backend).
TpqErrorStats tpq_error_stats(const ops::SparseOperator& h, double beta,
                              std::span<const ops::SparseOperator> observables,
                              int trials, std::uint64_t seed,
                              double tail_threshold = 0.1, int threads = 1);

/// Runs f(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& f);

}  // namespace tpqsdp::tpq

#endif  // TPQSDP_TPQ_HPP
