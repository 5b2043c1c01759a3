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

#include "tpqsdp/tpq.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "tpqsdp/clifford.hpp"
#include "tpqsdp/random.hpp"

namespace tpqsdp::tpq {

Backend parse_backend(const std::string& name) {
  if (name == "exact") return Backend::exact;
  if (name == "krylov") return Backend::krylov;
  if (name == "qet") return Backend::qet;
  throw std::invalid_argument("unknown backend '" + name + "'");
}

std::string to_string(Backend b) {
  switch (b) {
    case Backend::exact: return "exact";
    case Backend::krylov: return "krylov";
    case Backend::qet: return "qet";
  }
  return "unknown";
}

void EnsembleConfig::validate() const {
  if (batches < 1 || batches % 2 == 0) {
    throw std::invalid_argument("batch count must be odd and positive");
  }
  if (samples_per_batch < 1) throw std::invalid_argument("samples_per_batch must be >= 1");
  if (!(xi > 0.0 && xi <= 1.0)) throw std::invalid_argument("xi must lie in (0, 1]");
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
}

void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& f) {
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

StateVector random_stabilizer_state(int n, std::uint64_t seed, std::uint64_t stream,
                                    std::uint64_t index) {
  std::mt19937_64 rng(derive_seed(seed, {stream, index}));
  return clifford::tableau_to_statevector(clifford::sample_random_stabilizer(n, rng));
}

TpqPreparer::TpqPreparer(const ops::SparseOperator& h, double beta,
                         const EnsembleConfig& cfg)
    : h_(h), beta_(beta), cfg_(cfg) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("beta must be finite and non-negative");
  }
  cfg_.validate();
  switch (cfg_.backend) {
    case Backend::exact: {
      const auto eig = exact::eigendecompose(h);
      const double lmin = eig.eigenvalues.minCoeff();
      const RealVector w = (-0.5 * beta * (eig.eigenvalues.array() - lmin)).exp();
      propagator_ = eig.eigenvectors * w.cast<Complex>().asDiagonal() *
                    eig.eigenvectors.adjoint();
      break;
    }
    case Backend::krylov:
      break;
    case Backend::qet: {
      const double beta_max = cfg_.beta_max > 0.0 ? cfg_.beta_max : std::max(beta, 1.0);
      const auto ground = krylov::ground_energy_estimate(h, beta_max, cfg_.krylov);
      // With the clamp, K = H - I would leave [-1, 1]; K = H keeps the
      // spectrum inside and still satisfies the bracketing of the shift.
      ground_shift_ = ground.clamped ? -1.0 : ground.xi;
      qet_ = std::make_unique<poly::QetPreparer>(h, beta, ground_shift_, cfg_.xi);
      break;
    }
  }
}

StateVector TpqPreparer::prepare_from(const StateVector& u) const {
  if (beta_ == 0.0) return u;
  switch (cfg_.backend) {
    case Backend::exact: {
      StateVector w = propagator_ * u;
      return w / w.norm();
    }
    case Backend::krylov:
      return krylov::lanczos_expmv(h_, beta_, u, cfg_.krylov).state;
    case Backend::qet:
      return qet_->prepare(u).state;
  }
  return u;
}

StateVector TpqPreparer::prepare(std::uint64_t sample_index) const {
  return prepare_from(
      random_stabilizer_state(h_.num_qubits(), cfg_.seed, cfg_.stream, sample_index));
}

StateVector prepare_tpq(const ops::SparseOperator& h, double beta,
                        const EnsembleConfig& cfg, std::uint64_t sample_index) {
  return TpqPreparer(h, beta, cfg).prepare(sample_index);
}

double median(std::vector<double> v) {
  if (v.empty()) throw std::invalid_argument("median of empty list");
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  if (v.size() % 2 == 1) return *mid;
  const double upper = *mid;
  return 0.5 * (upper + *std::max_element(v.begin(), mid));
}

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

TpqEstimate estimate_expectations(const ops::SparseOperator& h, double beta,
                                  std::span<const ops::SparseOperator> observables,
                                  const EnsembleConfig& cfg) {
  for (const auto& a : observables) {
    if (a.dim() != h.dim()) throw std::invalid_argument("observable size mismatch");
  }
  const TpqPreparer prep(h, beta, cfg);
  const std::size_t total =
      static_cast<std::size_t>(cfg.batches) * static_cast<std::size_t>(cfg.samples_per_batch);
  const std::size_t m = observables.size();
  // samples[s * m + j] = <psi_s|A_j|psi_s>
  std::vector<double> samples(total * m);
  parallel_for(total, cfg.threads, [&](std::size_t s) {
    const StateVector psi = prep.prepare(s);
    StateVector tmp(psi.size());
    for (std::size_t j = 0; j < m; ++j) {
      observables[j].apply(psi, tmp);
      samples[s * m + j] = psi.dot(tmp).real();
    }
  });

  TpqEstimate out;
  out.samples = static_cast<int>(total);
  out.values.resize(m);
  out.batch_means.assign(m, std::vector<double>(cfg.batches));
  std::vector<double> column(cfg.samples_per_batch);
  for (std::size_t j = 0; j < m; ++j) {
    for (int b = 0; b < cfg.batches; ++b) {
      for (int i = 0; i < cfg.samples_per_batch; ++i) {
        column[i] = samples[(static_cast<std::size_t>(b) * cfg.samples_per_batch + i) * m + j];
      }
      out.batch_means[j][b] = pairwise_sum(column) / cfg.samples_per_batch;
    }
    out.values[j] = median(out.batch_means[j]);
  }
  return out;
}

bool TpqErrorStats::bound_holds() const {
  for (const auto& o : observables) {
    if (o.mse > bound + 3.0 * o.mse_stderr) return false;
  }
  return true;
}

TpqErrorStats tpq_error_stats(const ops::SparseOperator& h, double beta,
                              std::span<const ops::SparseOperator> observables,
                              int trials, std::uint64_t seed, double tail_threshold,
                              int threads) {
  if (trials < 2) throw std::invalid_argument("need at least two trials");
  const auto gibbs = exact::gibbs_state(exact::eigendecompose(h), beta);
  TpqErrorStats out;
  out.purity = exact::purity(gibbs);
  out.bound = 52.5 * std::sqrt(out.purity);
  out.tail_threshold = tail_threshold;
  out.trials = trials;

  EnsembleConfig cfg;
  cfg.seed = seed;
  cfg.threads = threads;
  cfg.krylov.max_dim = 128;
  const TpqPreparer prep(h, beta, cfg);
  const std::size_t m = observables.size();
  std::vector<double> samples(static_cast<std::size_t>(trials) * m);
  parallel_for(trials, threads, [&](std::size_t s) {
    const StateVector psi = prep.prepare(s);
    StateVector tmp(psi.size());
    for (std::size_t j = 0; j < m; ++j) {
      observables[j].apply(psi, tmp);
      samples[s * m + j] = psi.dot(tmp).real();
    }
  });
  for (std::size_t j = 0; j < m; ++j) {
    ObservableErrorStats st;
    st.exact = exact::gibbs_expectation(gibbs, observables[j]);
    std::vector<double> sq(trials);
    int tail = 0;
    for (int s = 0; s < trials; ++s) {
      const double err = samples[static_cast<std::size_t>(s) * m + j] - st.exact;
      sq[s] = err * err;
      if (std::abs(err) >= tail_threshold) ++tail;
    }
    st.mse = pairwise_sum(sq) / trials;
    double var = 0.0;
    for (double v : sq) var += (v - st.mse) * (v - st.mse);
    var /= (trials - 1);
    st.mse_stderr = std::sqrt(var / trials);
    st.tail_frequency = static_cast<double>(tail) / trials;
    out.observables.push_back(st);
  }
  return out;
}

}  // namespace tpqsdp::tpq
