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

#include <random>

#include <gtest/gtest.h>

#include "dense_oracle.hpp"
#include "tpqsdp/fermion.hpp"
#include "tpqsdp/models.hpp"
#include "tpqsdp/pauli.hpp"
#include "tpqsdp/sparse_operator.hpp"

namespace {

using namespace tpqsdp;
using ops::PauliSum;

// Fermionic matrices built directly: |1> is occupied, Z strings on the left.
DenseMatrix annihilator(int site, int n) {
  DenseMatrix a(2, 2);
  a << 0, 1, 0, 0;
  DenseMatrix out = oracle::embed(a, site, n);
  for (int q = 0; q < site; ++q) out = oracle::embed(oracle::pauli('Z'), q, n) * out;
  return out;
}

double max_abs(const DenseMatrix& m) { return m.cwiseAbs().maxCoeff(); }

TEST(Pauli, MultiplyPhases) {
  // XY = iZ, YX = -iZ, ZZ = I
  auto [k, m] = ops::multiply(ops::to_mask("X"), ops::to_mask("Y"));
  EXPECT_EQ(k, 1);
  EXPECT_EQ(ops::to_letters(m, 1), "Z");
  k = ops::multiply(ops::to_mask("Y"), ops::to_mask("X")).first;
  EXPECT_EQ(k, 3);
  EXPECT_TRUE(ops::commutes(ops::to_mask("XX"), ops::to_mask("YY")));
  EXPECT_FALSE(ops::commutes(ops::to_mask("XI"), ops::to_mask("ZI")));
}

TEST(Pauli, ProductMatchesDense) {
  const char* letters[] = {"IXYZ", "YYZX", "ZXXY", "XZIY"};
  for (const char* a : letters) {
    for (const char* b : letters) {
      auto [k, c] = ops::multiply(ops::to_mask(a), ops::to_mask(b));
      const Complex phase = std::pow(Complex(0, 1), k);
      const DenseMatrix lhs = oracle::kron_string(a) * oracle::kron_string(b);
      const DenseMatrix rhs = phase * oracle::kron_string(ops::to_letters(c, 4));
      EXPECT_LT(max_abs(lhs - rhs), 1e-14) << a << " * " << b;
    }
  }
}

TEST(Pauli, MergeAndDrop) {
  PauliSum s(1, {{0.5, "X"}, {0.5, "X"}, {1e-16, "Z"}});
  ASSERT_EQ(s.size(), 1u);
  EXPECT_DOUBLE_EQ(s.terms()[0].coefficient, 1.0);
  EXPECT_TRUE((s - s).empty());
}

TEST(Pauli, ParseRoundTrip) {
  const PauliSum s = PauliSum::parse("# test\n0.25 XIZ\n-1.5 YYI\n\n0.125 IIZ # tail\n");
  EXPECT_EQ(s.num_qubits(), 3);
  EXPECT_EQ(s.size(), 3u);
  const PauliSum back = PauliSum::parse(s.to_string());
  EXPECT_EQ(back, s);
  EXPECT_THROW(PauliSum::parse("1.0 XX\n1.0 X\n"), std::invalid_argument);
  EXPECT_THROW(PauliSum::parse("abc XX\n"), std::invalid_argument);
  EXPECT_THROW(PauliSum::parse("1.0 XQ\n"), std::invalid_argument);
}

TEST(Compile, SmallExamples) {
  const DenseMatrix z = ops::to_dense(ops::compile(PauliSum::single("Z")));
  EXPECT_EQ(z(0, 0), Complex(1));
  EXPECT_EQ(z(1, 1), Complex(-1));
  EXPECT_EQ(z(0, 1), Complex(0));
  const DenseMatrix x = ops::to_dense(ops::compile(PauliSum(1, {{0.5, "X"}, {0.5, "X"}})));
  EXPECT_EQ(x(0, 1), Complex(1));
  EXPECT_EQ(x(1, 0), Complex(1));
  EXPECT_EQ(x(0, 0), Complex(0));
}

TEST(Compile, MatchesKroneckerOracle) {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 6; ++n) {
    const PauliSum s = oracle::random_pauli_sum(n, 12, rng);
    EXPECT_LT(max_abs(ops::to_dense(ops::compile(s)) - oracle::dense(s)), 1e-14) << n;
  }
}

TEST(Compile, Linearity) {
  std::mt19937_64 rng(4);
  for (int n = 1; n <= 5; ++n) {
    const PauliSum a = oracle::random_pauli_sum(n, 6, rng);
    const PauliSum b = oracle::random_pauli_sum(n, 6, rng);
    const DenseMatrix lhs = ops::to_dense(ops::compile(a + b));
    const DenseMatrix rhs = ops::to_dense(ops::compile(a)) + ops::to_dense(ops::compile(b));
    EXPECT_LT(max_abs(lhs - rhs), 1e-14);
  }
}

TEST(Compile, RejectsOversize) {
  EXPECT_THROW(ops::compile(PauliSum::identity(15)), std::invalid_argument);
  EXPECT_THROW(ops::compile(PauliSum::identity(6), 5), std::invalid_argument);
}

TEST(Matvec, Examples) {
  const auto z = ops::compile(PauliSum::single("Z"));
  StateVector e0(2), e1(2);
  e0 << 1, 0;
  e1 << 0, 1;
  EXPECT_EQ(ops::matvec(z, e0), e0);
  EXPECT_EQ(ops::matvec(z, e1), (-e1).eval());
  std::mt19937_64 rng(5);
  const StateVector v = oracle::random_state(8, rng);
  EXPECT_LT((ops::matvec(ops::compile(PauliSum::identity(3)), v) - v).norm(), 1e-15);
  const PauliSum s = oracle::random_pauli_sum(3, 20, rng);
  EXPECT_LT((ops::matvec(ops::compile(s), v) - oracle::dense(s) * v).norm(), 1e-14);
  EXPECT_THROW(ops::matvec(z, v), std::invalid_argument);
}

TEST(JordanWigner, Examples) {
  const std::vector<ops::FermionTerm> number{{1.0, {ops::create(0), ops::annihilate(0)}},
                                             {-0.5, {}}};
  EXPECT_EQ(ops::jordan_wigner(number, 1), PauliSum(1, {{-0.5, "Z"}}));

  const std::vector<ops::FermionTerm> hop{{1.0, {ops::create(0), ops::annihilate(1)}},
                                          {-1.0, {ops::annihilate(0), ops::create(1)}}};
  const PauliSum h = ops::jordan_wigner(hop, 2);
  EXPECT_EQ(h, PauliSum(2, {{0.5, "XX"}, {0.5, "YY"}}));

  const std::vector<ops::FermionTerm> id{{1.0, {}}};
  EXPECT_EQ(ops::jordan_wigner(id, 3), PauliSum::identity(3));

  const std::vector<ops::FermionTerm> bad{{1.0, {ops::create(0)}}};
  EXPECT_THROW(ops::jordan_wigner(bad, 1), std::invalid_argument);
}

TEST(JordanWigner, CanonicalAnticommutation) {
  for (int n = 1; n <= 4; ++n) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        // Hermitian combinations survive the real-coefficient check.
        const std::vector<ops::FermionTerm> ci_cj{
            {1.0, {ops::create(i), ops::annihilate(j)}},
            {1.0, {ops::create(j), ops::annihilate(i)}}};
        const DenseMatrix got = oracle::dense(ops::jordan_wigner(ci_cj, n));
        const DenseMatrix a_i = annihilator(i, n), a_j = annihilator(j, n);
        const DenseMatrix want = a_i.adjoint() * a_j + a_j.adjoint() * a_i;
        EXPECT_LT(max_abs(got - want), 1e-14) << n << ' ' << i << ' ' << j;
        const DenseMatrix anti = a_i.adjoint() * a_j + a_j * a_i.adjoint();
        const double delta = i == j ? 1.0 : 0.0;
        EXPECT_LT(max_abs(anti - delta * DenseMatrix::Identity(anti.rows(), anti.cols())),
                  1e-14);
        EXPECT_LT(max_abs(a_i * a_j + a_j * a_i), 1e-14);
      }
    }
  }
}

TEST(Models, HubbardCounts) {
  EXPECT_EQ(ops::build_hubbard_spinless({2, 2}, 1.0, 0.5, 1.2).constraint_terms.size(), 12u);
  EXPECT_EQ(ops::build_hubbard_spinless({5, 2}, 1.0, 0.5, 1.2).constraint_terms.size(), 36u);
  EXPECT_TRUE(ops::build_hubbard_spinless({1, 2}, 0, 0, 0).hamiltonian.empty());
  EXPECT_THROW(ops::build_hubbard_spinless({1, 1}, 1, 1, 1), std::invalid_argument);
}

TEST(Models, HubbardMatchesFermionOracle) {
  const ops::LatticeSpec lat{2, 2};
  const double mu = 1.0, w = 0.5, u = 1.2;
  const int n = lat.sites();
  const Eigen::Index dim = 1 << n;
  const DenseMatrix id = DenseMatrix::Identity(dim, dim);
  DenseMatrix h = DenseMatrix::Zero(dim, dim);
  std::vector<DenseMatrix> shifted;
  for (int i = 0; i < n; ++i) {
    const DenseMatrix c = annihilator(i, n);
    shifted.push_back(c.adjoint() * c - 0.5 * id);
    h += mu * shifted.back();
  }
  for (auto [i, j] : lat.bonds()) {
    const DenseMatrix ci = annihilator(i, n), cj = annihilator(j, n);
    h += w * (ci.adjoint() * cj - ci * cj.adjoint());
    h += u * shifted[i] * shifted[j];
  }
  const auto terms = ops::build_hubbard_spinless(lat, mu, w, u);
  EXPECT_LT(max_abs(ops::to_dense(ops::compile(terms.hamiltonian)) - h), 1e-12);
  EXPECT_EQ(lat.bonds().size(), 4u);
}

TEST(Models, XxzCountsAndSymmetry) {
  std::vector<double> h(10, 0.3);
  EXPECT_EQ(ops::build_xxz(10, 1.0, 0.5, h).constraint_terms.size(), 28u);
  const std::vector<double> zero2(2, 0.0);
  EXPECT_TRUE(ops::build_xxz(2, 0, 0, zero2).hamiltonian.empty());
  EXPECT_THROW(ops::build_xxz(3, 1, 1, zero2), std::invalid_argument);

  const std::vector<double> zero3(3, 0.0);
  const DenseMatrix hm = oracle::dense(ops::build_xxz(3, 1.0, 0.0, zero3).hamiltonian);
  DenseMatrix sz = DenseMatrix::Zero(8, 8);
  for (int q = 0; q < 3; ++q) sz += oracle::embed(oracle::pauli('Z'), q, 3);
  EXPECT_LT(max_abs(hm * sz - sz * hm), 1e-14);
}

TEST(Models, XxzMatchesDirectSum) {
  const std::vector<double> h{0.3, -1.1, 0.7, 1.9};
  const double j = 1.0, delta = 0.5;
  DenseMatrix want = DenseMatrix::Zero(16, 16);
  for (int i = 0; i < 3; ++i) {
    for (char p : {'X', 'Y'}) {
      want += j * oracle::embed(oracle::pauli(p), i, 4) * oracle::embed(oracle::pauli(p), i + 1, 4);
    }
    want += delta * oracle::embed(oracle::pauli('Z'), i, 4) *
            oracle::embed(oracle::pauli('Z'), i + 1, 4);
  }
  for (int i = 0; i < 4; ++i) want += h[i] * oracle::embed(oracle::pauli('Z'), i, 4);
  EXPECT_LT(max_abs(oracle::dense(ops::build_xxz(4, j, delta, h).hamiltonian) - want), 1e-13);
}

TEST(Models, ConstraintNormsAndOrthogonality) {
  std::vector<ops::ModelTerms> models;
  models.push_back(ops::build_hubbard_spinless({2, 2}, 1.0, 0.5, 1.2));
  models.push_back(ops::build_hubbard_spinless({5, 1}, 1.0, 0.5, 1.2));
  const std::vector<double> h{0.1, -0.4, 1.3, 0.8, -1.7};
  models.push_back(ops::build_xxz(5, 1.0, 0.5, h));
  for (const auto& m : models) {
    std::vector<DenseMatrix> dense;
    for (const auto& o : m.constraint_terms) {
      const auto op = ops::compile(o);
      EXPECT_LE(ops::spectral_norm_estimate(op), 1.0 + 1e-10);
      // Exact norm: each constraint is normalized to 1.
      Eigen::SelfAdjointEigenSolver<DenseMatrix> es(ops::to_dense(op));
      EXPECT_NEAR(es.eigenvalues().cwiseAbs().maxCoeff(), 1.0, 1e-12);
      dense.push_back(ops::to_dense(op));
    }
    for (std::size_t a = 0; a < dense.size(); ++a) {
      for (std::size_t b = a + 1; b < dense.size(); ++b) {
        EXPECT_LT(std::abs((dense[a].adjoint() * dense[b]).trace()), 1e-10);
      }
    }
  }
}

TEST(SparseOperator, ShiftAndCombination) {
  std::mt19937_64 rng(9);
  const PauliSum a = oracle::random_pauli_sum(3, 5, rng), b = oracle::random_pauli_sum(3, 5, rng);
  const std::vector<ops::SparseOperator> o{ops::compile(a), ops::compile(b)};
  const std::vector<double> wts{0.3, -0.7};
  const DenseMatrix lc = ops::to_dense(ops::linear_combination(wts, o));
  EXPECT_LT(max_abs(lc - (0.3 * oracle::dense(a) - 0.7 * oracle::dense(b))), 1e-14);
  const DenseMatrix sh = ops::to_dense(ops::shifted(o[0], 0.25));
  EXPECT_LT(max_abs(sh - (oracle::dense(a) + 0.25 * DenseMatrix::Identity(8, 8))), 1e-14);
}

}  // namespace
