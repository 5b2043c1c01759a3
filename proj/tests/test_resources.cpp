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
#include <vector>

#include <gtest/gtest.h>

#include "tpqsdp/resources.hpp"

namespace {

using namespace tpqsdp::resources;

TEST(Copies, Examples) {
  EXPECT_EQ(copies_required(0.05, 39, 1.0 / 184.0), 28493);
  EXPECT_EQ(copies_required(1.0, 0, std::exp(-1.0)), 8);
  EXPECT_EQ(copies_required(0.3, 0, 1.0), 0);
  EXPECT_THROW(copies_required(0.0, 3, 0.1), std::invalid_argument);
  EXPECT_THROW(copies_required(0.1, -1, 0.1), std::invalid_argument);
  EXPECT_THROW(copies_required(0.1, 3, 0.0), std::invalid_argument);
}

TEST(OrLemma, CleanLimit) {
  const auto r = or_lemma_probabilities(0.0, 0.0, 10, 0.0);
  EXPECT_DOUBLE_EQ(r.p1, 0.25);
  EXPECT_DOUBLE_EQ(r.p2, 0.0);
  EXPECT_DOUBLE_EQ(r.gap, 0.25);
}

TEST(OrLemma, DefaultConstantsGiveEighthGap) {
  for (long m : {1L, 16L, 1000L, 1000000L}) {
    const auto r = or_lemma_probabilities(kOrDelta, kOrZeta, m, 0.0);
    EXPECT_GE(r.gap, 0.125) << m;
    EXPECT_NEAR(r.gap, r.p1 - r.p2, 1e-15);
    EXPECT_GE(r.p1, 0.0);
    EXPECT_LE(r.p1, 1.0);
    EXPECT_GE(r.p2, 0.0);
    EXPECT_LE(r.p2, 1.0);
  }
  const auto big = or_lemma_probabilities(kOrDelta, kOrZeta, 1000000, 0.0);
  EXPECT_NEAR(big.p1, 0.21875, 1e-6);
  EXPECT_NEAR(big.p2, 10.0 / 184.0 + 1.0 / 32.0, 1e-6);
  EXPECT_NEAR(big.gap, 0.133, 1e-3);
}

TEST(OrLemma, LargePurityIsInapplicable) {
  const auto r = or_lemma_probabilities(kOrDelta, kOrZeta, 56, 0.01);
  EXPECT_LE(r.gap, 0.0);
  EXPECT_FALSE(r.applicable());
  EXPECT_TRUE(or_lemma_probabilities(kOrDelta, kOrZeta, 56, 0.0).applicable());
}

TEST(Binomial, Endpoints) {
  const EigenvalueDiscriminator ped(0.5125, 0.5625, 1e-3);
  EXPECT_NEAR(or_acceptance_binomial(1.0, 100, ped), 1.0, 2e-3);
  EXPECT_LE(or_acceptance_binomial(0.0, 100, ped), 1e-6);
  EXPECT_LE(ped(0.3), 1e-3);
  EXPECT_GE(ped(0.7), 1.0 - 1e-3);
  EXPECT_THROW(or_acceptance_binomial(1.5, 10, ped), std::invalid_argument);
  EXPECT_THROW(EigenvalueDiscriminator(0.6, 0.5, 1e-3), std::invalid_argument);
}

TEST(Binomial, CaseBoundsAtCopyCount) {
  const double eps = 0.05, xi = 0.05, delta = kOrDelta;
  const long m = 12;
  const auto ped = projector_discriminator(eps, xi, m, delta);
  const long x = copies_required(xi, m, delta);
  EXPECT_GE(or_acceptance_binomial(ped.hi, x, ped), 1.0 - 3.0 * delta / (m + 1) - 1e-3);
  EXPECT_LE(or_acceptance_binomial(ped.lo, x, ped), 2.0 * delta / (m + 1) + 1e-3);
}

TEST(Binomial, CaseTwoDecreasesWithCopies) {
  const auto ped = projector_discriminator(0.05, 0.05, 12, kOrDelta);
  double prev = 1.0;
  for (long x : {50L, 200L, 800L, 3200L, 12800L}) {
    const double acc = or_acceptance_binomial(ped.lo, x, ped);
    EXPECT_LT(acc, prev) << x;
    prev = acc;
  }
}

TEST(Binomial, ExactGapExceedsEighthWhenClean) {
  for (double purity : {0.0, 1e-5, 1e-4}) {
    const auto r = or_binomial_gap(0.05, 0.05, 12, kOrDelta, kOrZeta, purity);
    EXPECT_GT(r.gap, 0.125) << purity;
  }
}

TEST(Repetitions, Examples) {
  const auto r = or_repetitions(0.125, 4, 0.01);
  EXPECT_EQ(r.k, 767);
  EXPECT_EQ(r.total, 3068);
  EXPECT_FALSE(r.degenerate);
  const auto d = or_repetitions(0.5, 1, 1.0);
  EXPECT_EQ(d.k, 0);
  EXPECT_TRUE(d.degenerate);
  EXPECT_THROW(or_repetitions(0.0, 4, 0.01), std::invalid_argument);
}

TEST(Repetitions, QuadraticInGap) {
  for (double gap : {0.05, 0.1, 0.2}) {
    const long k1 = or_repetitions(gap, 6, 0.01).k;
    const long k2 = or_repetitions(2 * gap, 6, 0.01).k;
    EXPECT_NEAR(static_cast<double>(k1) / 4.0, static_cast<double>(k2), 1.0) << gap;
  }
}

TEST(Complexity, EpsilonLaws) {
  const auto a = complexity_report(1024, 56, 0.1, 0.05, 0.01, false);
  const auto b = complexity_report(1024, 56, 0.05, 0.05, 0.01, false);
  EXPECT_NEAR(static_cast<double>(b.iterations) / a.iterations, 4.0, 1e-3);
  EXPECT_NEAR(static_cast<double>(b.beta_max) / a.beta_max, 2.0, 0.02);
  EXPECT_NEAR(b.qet_degree / a.qet_degree, std::sqrt(2.0), 0.02);
  EXPECT_GT(b.total_gates, a.total_gates);
  EXPECT_GT(b.total_gates_leading, a.total_gates_leading);
}

TEST(Complexity, SpectralToggleOnlyChangesAmplification) {
  const auto g = complexity_report(1 << 16, 56, 0.05, 0.05, 0.01, false);
  const auto s = complexity_report(1 << 16, 56, 0.05, 0.05, 0.01, true);
  EXPECT_DOUBLE_EQ(g.amplification_rounds, 256.0);
  EXPECT_DOUBLE_EQ(s.amplification_rounds, 16.0);
  EXPECT_EQ(g.iterations, s.iterations);
  EXPECT_EQ(g.copies_x, s.copies_x);
  EXPECT_EQ(g.or_tests, s.or_tests);
  EXPECT_DOUBLE_EQ(g.qet_degree, s.qet_degree);
  EXPECT_DOUBLE_EQ(g.check_queries, s.check_queries);
  EXPECT_LT(s.total_gates, g.total_gates);
}

TEST(Complexity, SmallCaseIsFinite) {
  const auto r = complexity_report(2, 1, 0.5, 0.5, 0.5, false);
  for (double v : {static_cast<double>(r.iterations), static_cast<double>(r.beta_max),
                   r.qet_degree, r.amplification_rounds, r.tpq_queries,
                   static_cast<double>(r.copies_x), static_cast<double>(r.or_repetitions_k),
                   static_cast<double>(r.or_tests), r.check_queries, r.check_other_gates,
                   r.check_ancillas, r.total_gates, r.total_gates_leading, r.depth_leading,
                   r.total_block_encoding_queries, r.qubit_estimate}) {
    EXPECT_TRUE(std::isfinite(v));
    EXPECT_GE(v, 1.0);
  }
  EXPECT_THROW(complexity_report(1, 1, 0.5, 0.5, 0.5, false), std::invalid_argument);
  EXPECT_THROW(complexity_report(4, 0, 0.5, 0.5, 0.5, false), std::invalid_argument);
}

double slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= x.size();
  my /= y.size();
  double num = 0, den = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += (std::log(x[i]) - mx) * (std::log(y[i]) - my);
    den += (std::log(x[i]) - mx) * (std::log(x[i]) - mx);
  }
  return num / den;
}

TEST(Complexity, PowerLawSlopes) {
  // Two decades in each variable; polylog factors are divided out first.
  std::vector<double> inv_eps, t, deg, lead_n, dims, rounds, ms, checks;
  for (double e = 0.5; e >= 0.005; e /= 1.5) {
    const auto r = complexity_report(1024, 56, e, 0.05, 0.01, false);
    inv_eps.push_back(1.0 / e);
    t.push_back(r.iterations);
    deg.push_back(r.qet_degree);
  }
  EXPECT_NEAR(slope(inv_eps, t), 2.0, 0.2);
  EXPECT_NEAR(slope(inv_eps, deg), 0.5, 0.05);

  for (int n = 4; n <= 14; ++n) {
    const double dim = std::exp2(n);
    const auto g = complexity_report(dim, 56, 0.05, 0.05, 0.01, false);
    const auto s = complexity_report(dim, 56, 0.05, 0.05, 0.01, true);
    dims.push_back(dim);
    rounds.push_back(g.amplification_rounds);
    lead_n.push_back(s.amplification_rounds);
  }
  EXPECT_NEAR(slope(dims, rounds), 0.5, 0.05);
  EXPECT_NEAR(slope(dims, lead_n), 0.25, 0.025);

  for (long m = 16; m <= 4096; m *= 2) {
    const auto r = complexity_report(1024, m, 0.05, 0.05, 0.01, false);
    const double lm = std::log2(static_cast<double>(m));
    ms.push_back(static_cast<double>(m));
    checks.push_back(r.check_queries / (lm * lm * (std::log2(lm) + std::log(100.0))));
  }
  EXPECT_NEAR(slope(ms, checks), 0.5, 0.05);
}

TEST(Toffoli, TwoByTwoProofOfConcept) {
  const auto e = toffoli_estimate({2, 2}, 0.05, ToffoliMode::proof_of_concept);
  EXPECT_GE(e.gates, 1.61e6 / 100);
  EXPECT_LE(e.gates, 1.61e6 * 100);
  EXPECT_NEAR(e.qubits, 13, 4);
}

TEST(Toffoli, AmplifiedDominatesAndGrowsWithSize) {
  double prev = 0.0;
  for (int l : {2, 3, 4, 5, 6}) {
    const auto poc = toffoli_estimate({l, l}, 0.05, ToffoliMode::proof_of_concept);
    const auto amp = toffoli_estimate({l, l}, 0.05, ToffoliMode::amplified);
    EXPECT_GE(amp.gates, poc.gates);
    EXPECT_GE(amp.qubits, poc.qubits);
    EXPECT_GT(poc.gates, prev);
    prev = poc.gates;
  }
  EXPECT_LT(toffoli_estimate({2, 2}, 0.1, ToffoliMode::amplified).gates,
            toffoli_estimate({2, 2}, 0.05, ToffoliMode::amplified).gates);
}

}  // namespace
