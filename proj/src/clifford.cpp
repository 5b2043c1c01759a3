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

#include "tpqsdp/clifford.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace tpqsdp::clifford {
namespace {

// Symplectic vectors are packed as x | z << n into 64 bits.
using Word = std::uint64_t;

Word pack(ops::PauliMask m, int n) {
  return static_cast<Word>(m.x) | (static_cast<Word>(m.z) << n);
}

ops::PauliMask unpack(Word w, int n) {
  const Word low = (Word{1} << n) - 1;
  return {static_cast<std::uint32_t>(w & low), static_cast<std::uint32_t>(w >> n)};
}

// Maps w to the functional v -> omega(w, v).
Word symplectic_dual(Word w, int n) {
  const Word low = (Word{1} << n) - 1;
  return ((w & low) << n) | (w >> n);
}

// Rows in reduced echelon form, one pivot bit per row.
struct EchelonBasis {
  std::vector<Word> rows;
  std::vector<int> pivots;

  Word reduce(Word v) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if ((v >> pivots[i]) & 1) v ^= rows[i];
    }
    return v;
  }

  bool insert(Word v) {
    v = reduce(v);
    if (v == 0) return false;
    const int p = std::bit_width(v) - 1;
    for (auto& r : rows) {
      if ((r >> p) & 1) r ^= v;
    }
    rows.push_back(v);
    pivots.push_back(p);
    return true;
  }
};

// Basis of {v : <c, v> = 0 for all constraint rows c} over 2n bits.
std::vector<Word> null_space(const EchelonBasis& constraints, int bits) {
  std::vector<bool> is_pivot(bits, false);
  for (int p : constraints.pivots) is_pivot[p] = true;
  std::vector<Word> basis;
  for (int f = 0; f < bits; ++f) {
    if (is_pivot[f]) continue;
    Word v = Word{1} << f;
    for (std::size_t i = 0; i < constraints.rows.size(); ++i) {
      if ((constraints.rows[i] >> f) & 1) v |= Word{1} << constraints.pivots[i];
    }
    basis.push_back(v);
  }
  return basis;
}

struct SignedPauli {
  ops::PauliMask p;
  bool sign;
};

SignedPauli product(const SignedPauli& a, const SignedPauli& b) {
  auto [k, c] = ops::multiply(a.p, b.p);
  if (k % 2 != 0) throw std::invalid_argument("stabilizer generators anticommute");
  return {c, static_cast<bool>(a.sign ^ b.sign ^ (k == 2))};
}

}  // namespace

StabilizerTableau identity_tableau(int n) {
  StabilizerTableau t{n, {}, {}};
  for (int q = 0; q < n; ++q) {
    t.generators.push_back({0, std::uint32_t{1} << (n - 1 - q)});
    t.signs.push_back(0);
  }
  return t;
}

StabilizerTableau hadamard_tableau(int n) {
  StabilizerTableau t{n, {}, {}};
  for (int q = 0; q < n; ++q) {
    t.generators.push_back({std::uint32_t{1} << (n - 1 - q), 0});
    t.signs.push_back(0);
  }
  return t;
}

bool is_valid(const StabilizerTableau& t) {
  if (t.n < 1 || t.n > kMaxQubits) return false;
  if (static_cast<int>(t.generators.size()) != t.n ||
      t.signs.size() != t.generators.size()) {
    return false;
  }
  EchelonBasis span;
  for (std::size_t i = 0; i < t.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < t.generators.size(); ++j) {
      if (!ops::commutes(t.generators[i], t.generators[j])) return false;
    }
    if (!span.insert(pack(t.generators[i], t.n))) return false;
  }
  return true;
}

StabilizerTableau sample_random_stabilizer(int n, std::mt19937_64& rng) {
  if (n < 1 || n > kMaxQubits) throw std::invalid_argument("qubit count out of range");
  const int bits = 2 * n;
  StabilizerTableau t{n, {}, {}};
  EchelonBasis span, duals;
  for (int i = 0; i < n; ++i) {
    // Uniform over the symplectic complement minus the current span.
    const std::vector<Word> perp = null_space(duals, bits);
    Word v = 0;
    do {
      v = 0;
      Word coins = 0;
      for (std::size_t k = 0; k < perp.size(); ++k) {
        if (k % 64 == 0) coins = rng();
        if (coins & 1) v ^= perp[k];
        coins >>= 1;
      }
    } while (span.reduce(v) == 0);
    span.insert(v);
    duals.insert(symplectic_dual(v, n));
    t.generators.push_back(unpack(v, n));
  }
  Word coins = rng();
  for (int i = 0; i < n; ++i) t.signs.push_back(static_cast<std::uint8_t>((coins >> i) & 1));
  return t;
}

StateVector apply_pauli(ops::PauliMask p, bool sign, const StateVector& v) {
  static const Complex kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Complex base = (sign ? -1.0 : 1.0) * kPhase[std::popcount(p.x & p.z) % 4];
  StateVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const auto u = static_cast<std::uint32_t>(i);
    out(u ^ p.x) = (std::popcount(p.z & u) & 1) ? -base * v(i) : base * v(i);
  }
  return out;
}

StateVector tableau_to_statevector(const StabilizerTableau& t) {
  if (!is_valid(t)) throw std::invalid_argument("invalid stabilizer tableau");
  const int n = t.n;
  std::vector<SignedPauli> rows;
  for (int i = 0; i < n; ++i) rows.push_back({t.generators[i], t.signs[i] != 0});

  // Eliminate on the X part; rows past `rank` end up Z-type.
  int rank = 0;
  for (int b = n - 1; b >= 0 && rank < n; --b) {
    const std::uint32_t bit = std::uint32_t{1} << b;
    int piv = -1;
    for (int r = rank; r < n; ++r) {
      if (rows[r].p.x & bit) { piv = r; break; }
    }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (int r = 0; r < n; ++r) {
      if (r != rank && (rows[r].p.x & bit)) rows[r] = product(rows[r], rows[rank]);
    }
    ++rank;
  }

  // Z-type rows fix parities <z, a> = sign of a basis state a in the support.
  std::vector<std::pair<std::uint32_t, bool>> eqs;
  for (int r = rank; r < n; ++r) eqs.emplace_back(rows[r].p.z, rows[r].sign);
  std::vector<int> pivots;
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if ((eqs[i].first >> pivots[j]) & 1) {
        eqs[i].first ^= eqs[j].first;
        eqs[i].second ^= eqs[j].second;
      }
    }
    if (eqs[i].first == 0) {
      if (eqs[i].second) throw std::invalid_argument("inconsistent stabilizer signs");
      pivots.push_back(-1);
      continue;
    }
    const int p = std::bit_width(eqs[i].first) - 1;
    for (std::size_t j = 0; j < i; ++j) {
      if (pivots[j] >= 0 && ((eqs[j].first >> p) & 1)) {
        eqs[j].first ^= eqs[i].first;
        eqs[j].second ^= eqs[i].second;
      }
    }
    pivots.push_back(p);
  }
  std::uint32_t a = 0;
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    if (pivots[i] >= 0 && eqs[i].second) a |= std::uint32_t{1} << pivots[i];
  }

  StateVector v = StateVector::Zero(Eigen::Index{1} << n);
  v(a) = 1.0;
  for (const auto& g : rows) v = 0.5 * (v + apply_pauli(g.p, g.sign, v));
  const double nrm = v.norm();
  if (nrm < 1e-6) throw std::invalid_argument("stabilizer projection vanished");
  return v / nrm;
}

}  // namespace tpqsdp::clifford
