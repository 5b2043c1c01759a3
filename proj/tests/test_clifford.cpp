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
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "tpqsdp/clifford.hpp"
#include "tpqsdp/tpq.hpp"

namespace {

using namespace tpqsdp;

// Phase-normalized, rounded amplitudes as a map key.
std::string state_key(const StateVector& v) {
  Eigen::Index first = 0;
  while (std::abs(v(first)) < 1e-9) ++first;
  const Complex phase = std::abs(v(first)) / v(first);
  std::ostringstream os;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const Complex a = v(i) * phase;
    os << std::lround(a.real() * 1e6) << ',' << std::lround(a.imag() * 1e6) << ';';
  }
  return os.str();
}

void expect_stabilized(const clifford::StabilizerTableau& t, const StateVector& v) {
  EXPECT_NEAR(v.norm(), 1.0, 1e-12);
  for (int g = 0; g < t.n; ++g) {
    const StateVector gv = clifford::apply_pauli(t.generators[g], t.signs[g], v);
    EXPECT_LT((gv - v).norm(), 1e-12);
  }
}

TEST(Tableau, FixedStates) {
  for (int n = 1; n <= 5; ++n) {
    const auto id = clifford::identity_tableau(n);
    EXPECT_TRUE(clifford::is_valid(id));
    const StateVector zero = clifford::tableau_to_statevector(id);
    EXPECT_NEAR(std::abs(zero(0)), 1.0, 1e-15);
    EXPECT_NEAR(zero.norm(), 1.0, 1e-15);
    const StateVector plus = clifford::tableau_to_statevector(clifford::hadamard_tableau(n));
    const StateVector uniform =
        StateVector::Constant(Eigen::Index{1} << n, std::exp2(-0.5 * n));
    EXPECT_NEAR(std::abs(plus.dot(uniform)), 1.0, 1e-12);
  }
}

TEST(Tableau, RejectsInvalid) {
  clifford::StabilizerTableau t{2, {ops::to_mask("XI"), ops::to_mask("ZI")}, {0, 0}};
  EXPECT_FALSE(clifford::is_valid(t));
  EXPECT_THROW(clifford::tableau_to_statevector(t), std::invalid_argument);
  clifford::StabilizerTableau dup{2, {ops::to_mask("ZI"), ops::to_mask("ZI")}, {0, 0}};
  EXPECT_FALSE(clifford::is_valid(dup));
}

TEST(Sampler, SingleQubitUniform) {
  std::mt19937_64 rng(1);
  std::map<std::string, int> counts;
  const int draws = 6000;
  for (int i = 0; i < draws; ++i) {
    const auto t = clifford::sample_random_stabilizer(1, rng);
    ++counts[state_key(clifford::tableau_to_statevector(t))];
  }
  ASSERT_EQ(counts.size(), 6u);
  double chi2 = 0.0;
  for (const auto& [k, c] : counts) chi2 += (c - 1000.0) * (c - 1000.0) / 1000.0;
  EXPECT_LT(chi2, 20.5);  // 5 dof, p = 0.001
}

TEST(Sampler, TwoQubitCount) {
  std::mt19937_64 rng(2);
  std::set<std::string> seen;
  for (int i = 0; i < 3000; ++i) {
    seen.insert(state_key(clifford::tableau_to_statevector(clifford::sample_random_stabilizer(2, rng))));
  }
  EXPECT_EQ(seen.size(), 60u);
}

TEST(Sampler, Deterministic) {
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 10; ++i) {
    const auto ta = clifford::sample_random_stabilizer(6, a);
    const auto tb = clifford::sample_random_stabilizer(6, b);
    EXPECT_EQ(ta.generators, tb.generators);
    EXPECT_EQ(ta.signs, tb.signs);
  }
  EXPECT_EQ(tpq::random_stabilizer_state(5, 7, 1, 3), tpq::random_stabilizer_state(5, 7, 1, 3));
  EXPECT_NE(tpq::random_stabilizer_state(5, 7, 1, 3), tpq::random_stabilizer_state(5, 7, 1, 4));
}

TEST(Sampler, StructureOfRandomStates) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + i % 8;
    const auto t = clifford::sample_random_stabilizer(n, rng);
    EXPECT_TRUE(clifford::is_valid(t));
    const StateVector v = clifford::tableau_to_statevector(t);
    expect_stabilized(t, v);
    // Nonzero amplitudes share one magnitude 2^{-k/2} on 2^k basis states.
    int support = 0;
    double mag = 0.0;
    for (const Complex& a : v) {
      if (std::abs(a) > 1e-9) {
        if (support == 0) mag = std::abs(a);
        EXPECT_NEAR(std::abs(a), mag, 1e-12);
        ++support;
      }
    }
    EXPECT_EQ(support & (support - 1), 0);
    EXPECT_NEAR(mag * mag * support, 1.0, 1e-12);
  }
}

TEST(Sampler, FirstAndSecondMoments) {
  std::mt19937_64 rng(4);
  for (int n : {2, 4}) {
    const double dim = std::exp2(n);
    const int draws = 10000;
    double s1 = 0, s1sq = 0, s2 = 0, s2sq = 0;
    for (int i = 0; i < draws; ++i) {
      const StateVector v =
          clifford::tableau_to_statevector(clifford::sample_random_stabilizer(n, rng));
      const double p = std::norm(v(0));
      s1 += p;
      s1sq += p * p;
      s2 += p * p;
      s2sq += p * p * p * p;
    }
    const double m1 = s1 / draws, m2 = s2 / draws;
    const double se1 = std::sqrt((s1sq / draws - m1 * m1) / draws);
    const double se2 = std::sqrt((s2sq / draws - m2 * m2) / draws);
    EXPECT_NEAR(m1, 1.0 / dim, 5 * se1) << n;
    EXPECT_NEAR(m2, 2.0 / (dim * (dim + 1)), 5 * se2) << n;
  }
}

}  // namespace
