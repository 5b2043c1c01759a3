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

#ifndef TPQSDP_CHEBYSHEV_HPP
#define TPQSDP_CHEBYSHEV_HPP

#include <functional>

#include "tpqsdp/sparse_operator.hpp"
#include "tpqsdp/types.hpp"

namespace tpqsdp::poly {

/// Polynomial on [-1, 1] in the Chebyshev-T basis.
class ChebyshevPoly {
 public:
  ChebyshevPoly();
  /// Trailing coefficients below 1e-15 in magnitude are trimmed.
  explicit ChebyshevPoly(RealVector coefficients);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const RealVector& coefficients() const { return coeffs_; }

  double operator()(double x) const;

  /// Values at the points cos(pi (j + 1/2) / points), j = 0..points-1.
  RealVector values_on_grid(int points) const;
  double max_abs_on_grid(int points = 10000) const;

 private:
  RealVector coeffs_;
};

/// Q(x) = outer(2 sign(x) x - 1), kept in factored form because the
/// expanded degree outer.degree() * (sign.degree() + 1) is large.
struct CompositePoly {
  ChebyshevPoly outer;
  ChebyshevPoly sign;

  int degree() const { return outer.degree() * (sign.degree() + 1); }
  double operator()(double x) const { return outer(2.0 * sign(x) * x - 1.0); }
};

/// Points cos(pi (j + 1/2) / points) used by the grid checks.
RealVector chebyshev_grid(int points);

/// Chebyshev interpolant of f truncated to the smallest degree whose
/// coefficient tail is below tol, then verified on a Chebyshev grid of
/// at least 10^4 points. Throws NumericalError if max_degree is exceeded.
ChebyshevPoly chebyshev_fit(const std::function<double(double)>& f, double tol,
                            int max_degree = 1 << 20);

/// Approximates exp(-beta (x + 1)) to within mu with max |P| <= 1.
ChebyshevPoly exp_poly(double beta, double mu);

/// Odd approximation of sign(x), within zeta for |x| >= Delta / 2, |P| <= 1.
ChebyshevPoly sign_poly(double zeta, double delta);

/// Even approximation of exp(-beta |x|) built from exp_poly(beta / 2, mu)
/// and sign_poly(zeta, Delta) with zeta = ln(1 / (1 - mu)) / beta.
CompositePoly composite_exp_poly(double beta, double mu, double delta);

/// Inverse complementary error function on (0, 2).
double erfc_inv(double y);

/// P(H) v by the Clenshaw recurrence; one matvec per degree.
/// With check_norm, rejects operators whose norm estimate exceeds 1.01.
StateVector apply_poly(const ChebyshevPoly& p, const ops::SparseOperator& h,
                       const StateVector& v, bool check_norm = true);
StateVector apply_poly(const CompositePoly& p, const ops::SparseOperator& h,
                       const StateVector& v, bool check_norm = true);

}  // namespace tpqsdp::poly

#endif  // TPQSDP_CHEBYSHEV_HPP
