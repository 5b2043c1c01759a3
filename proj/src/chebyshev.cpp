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

#include "tpqsdp/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <unsupported/Eigen/FFT>

namespace tpqsdp::poly {
namespace {

constexpr double kTrim = 1e-15;
constexpr int kMinGrid = 10000;
constexpr double kNormSlack = 1.01;

RealVector trimmed(RealVector c) {
  Eigen::Index n = c.size();
  while (n > 1 && std::abs(c(n - 1)) < kTrim) --n;
  if (n == 0) return RealVector::Zero(1);
  return c.head(n);
}

// c_k = (2/M) sum_j f_j cos(k theta_j), theta_j = pi (j + 1/2) / M, c_0 halved.
RealVector dct_coefficients(const RealVector& f) {
  const Eigen::Index m = f.size();
  std::vector<Complex> in(2 * m, Complex(0.0, 0.0)), out;
  for (Eigen::Index j = 0; j < m; ++j) in[j] = f(j);
  Eigen::FFT<double> fft;
  fft.fwd(out, in);
  RealVector c(m);
  for (Eigen::Index k = 0; k < m; ++k) {
    const Complex tw = std::polar(1.0, -std::numbers::pi * k / (2.0 * m));
    c(k) = (2.0 / m) * (tw * out[k]).real();
  }
  c(0) *= 0.5;
  return c;
}

template <class MatVec>
StateVector clenshaw(const RealVector& c, MatVec&& op, const StateVector& v) {
  const Eigen::Index d = c.size() - 1;
  if (d == 0) return c(0) * v;
  StateVector b1 = StateVector::Zero(v.size());
  StateVector b2 = StateVector::Zero(v.size());
  StateVector hb(v.size());
  for (Eigen::Index k = d; k >= 1; --k) {
    op(b1, hb);
    StateVector b0 = c(k) * v + 2.0 * hb - b2;
    b2.swap(b1);
    b1.swap(b0);
  }
  op(b1, hb);
  return c(0) * v + hb - b2;
}

void check_norm_bound(const ops::SparseOperator& h) {
  const double nrm = ops::spectral_norm_estimate(h);
  if (nrm > kNormSlack) {
    throw NumericalError("operator norm estimate " + std::to_string(nrm) +
                         " exceeds 1");
  }
}

}  // namespace

ChebyshevPoly::ChebyshevPoly() : coeffs_(RealVector::Zero(1)) {}

ChebyshevPoly::ChebyshevPoly(RealVector coefficients)
    : coeffs_(trimmed(std::move(coefficients))) {}

double ChebyshevPoly::operator()(double x) const {
  double b1 = 0.0, b2 = 0.0;
  for (Eigen::Index k = coeffs_.size() - 1; k >= 1; --k) {
    const double b0 = coeffs_(k) + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return coeffs_(0) + x * b1 - b2;
}

RealVector chebyshev_grid(int points) {
  RealVector x(points);
  for (int j = 0; j < points; ++j) {
    x(j) = std::cos(std::numbers::pi * (j + 0.5) / points);
  }
  return x;
}

RealVector ChebyshevPoly::values_on_grid(int points) const {
  if (degree() >= 2 * points) {
    const RealVector x = chebyshev_grid(points);
    return x.unaryExpr([this](double t) { return (*this)(t); });
  }
  // v_j = Re sum_k c_k e^{i pi k / (2L)} e^{2 pi i k j / (2L)}
  std::vector<Complex> in(2 * points, Complex(0.0, 0.0)), out;
  for (int k = 0; k <= degree(); ++k) {
    in[k] = coeffs_(k) * std::polar(1.0, std::numbers::pi * k / (2.0 * points));
  }
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::Unscaled);
  fft.inv(out, in);
  RealVector v(points);
  for (int j = 0; j < points; ++j) v(j) = out[j].real();
  return v;
}

double ChebyshevPoly::max_abs_on_grid(int points) const {
  return values_on_grid(points).cwiseAbs().maxCoeff();
}

ChebyshevPoly chebyshev_fit(const std::function<double(double)>& f, double tol,
                            int max_degree) {
  if (!(tol > 0.0)) throw std::invalid_argument("fit tolerance must be positive");
  for (Eigen::Index m = 64;; m *= 2) {
    const RealVector nodes = chebyshev_grid(static_cast<int>(m));
    const RealVector c = dct_coefficients(nodes.unaryExpr(f));
    // tail(d) = sum_{k > d} |c_k|
    RealVector tail(m);
    tail(m - 1) = 0.0;
    for (Eigen::Index k = m - 2; k >= 0; --k) tail(k) = tail(k + 1) + std::abs(c(k + 1));
    Eigen::Index d = 0;
    while (d < m - 1 && tail(d) > 0.5 * tol) ++d;
    if (d > max_degree) break;
    while (2 * d <= m) {
      ChebyshevPoly p(c.head(d + 1));
      const int points = std::max<int>(kMinGrid, 4 * static_cast<int>(d + 1));
      const RealVector grid = chebyshev_grid(points);
      const double err = (p.values_on_grid(points) - grid.unaryExpr(f)).cwiseAbs().maxCoeff();
      if (err <= tol) return p;
      d += std::max<Eigen::Index>(1, d / 8);
    }
    if (m > 4 * static_cast<Eigen::Index>(max_degree) + 64) break;
  }
  throw NumericalError("Chebyshev fit exceeded maximum degree " +
                       std::to_string(max_degree));
}

double erfc_inv(double y) {
  if (!(y > 0.0 && y < 2.0)) throw std::invalid_argument("erfc_inv needs y in (0, 2)");
  // erfc is decreasing; bisection is exact to the resolution of erfc itself.
  double lo = -30.0, hi = 30.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
    const double mid = 0.5 * (lo + hi);
    (std::erfc(mid) > y ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

ChebyshevPoly exp_poly(double beta, double mu) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("beta must be finite and non-negative");
  }
  if (!(mu > 0.0 && mu <= 0.5)) throw std::invalid_argument("mu must lie in (0, 1/2]");
  if (beta == 0.0) return ChebyshevPoly(RealVector::Ones(1));
  auto f = [beta](double x) { return std::exp(-beta * (x + 1.0)); };
  const ChebyshevPoly fit = chebyshev_fit(f, 0.5 * mu);
  ChebyshevPoly p(fit.coefficients() / (1.0 + 0.5 * mu));

  const int points = std::max(kMinGrid, 4 * (p.degree() + 1));
  const RealVector grid = chebyshev_grid(points);
  const RealVector vals = p.values_on_grid(points);
  if ((vals - grid.unaryExpr(f)).cwiseAbs().maxCoeff() > mu ||
      vals.cwiseAbs().maxCoeff() > 1.0) {
    throw NumericalError("exponential polynomial failed its grid check");
  }
  return p;
}

ChebyshevPoly sign_poly(double zeta, double delta) {
  if (!(zeta > 0.0 && zeta < 1.0)) throw std::invalid_argument("zeta must lie in (0, 1)");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("Delta must lie in (0, 1)");
  // erfc(k Delta / 2) = zeta / 4
  const double k = 2.0 * erfc_inv(0.25 * zeta) / delta;
  auto f = [k](double x) { return std::erf(k * x); };
  RealVector c = chebyshev_fit(f, 0.25 * zeta).coefficients();
  for (Eigen::Index i = 0; i < c.size(); i += 2) c(i) = 0.0;
  ChebyshevPoly p(c / (1.0 + 0.25 * zeta));

  const int points = std::max(kMinGrid, 4 * (p.degree() + 1));
  const RealVector grid = chebyshev_grid(points);
  const RealVector vals = p.values_on_grid(points);
  double err = 0.0;
  for (int j = 0; j < points; ++j) {
    if (std::abs(grid(j)) >= 0.5 * delta) {
      err = std::max(err, std::abs(vals(j) - std::copysign(1.0, grid(j))));
    }
  }
  if (err > zeta || vals.cwiseAbs().maxCoeff() > 1.0) {
    throw NumericalError("sign polynomial failed its grid check");
  }
  return p;
}

CompositePoly composite_exp_poly(double beta, double mu, double delta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("beta must be finite and non-negative");
  }
  if (!(mu > 0.0 && mu <= 0.5)) throw std::invalid_argument("mu must lie in (0, 1/2]");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("Delta must lie in (0, 1)");
  CompositePoly q;
  q.outer = exp_poly(0.5 * beta, mu);
  if (beta == 0.0) {
    q.sign = ChebyshevPoly(RealVector::Unit(2, 1));
    return q;
  }
  // Tiny beta makes the prescribed zeta exceed the sign-poly range; a
  // smaller zeta only tightens the approximation.
  const double zeta = std::min(0.5, std::log(1.0 / (1.0 - mu)) / beta);
  q.sign = sign_poly(zeta, delta);
  return q;
}

StateVector apply_poly(const ChebyshevPoly& p, const ops::SparseOperator& h,
                       const StateVector& v, bool check_norm) {
  if (v.size() != h.dim()) throw std::invalid_argument("vector size mismatch");
  if (check_norm) check_norm_bound(h);
  return clenshaw(p.coefficients(), [&h](const StateVector& in, StateVector& out) {
    h.apply(in, out);
  }, v);
}

StateVector apply_poly(const CompositePoly& p, const ops::SparseOperator& h,
                       const StateVector& v, bool check_norm) {
  if (v.size() != h.dim()) throw std::invalid_argument("vector size mismatch");
  if (check_norm) check_norm_bound(h);
  StateVector hv(v.size());
  auto inner = [&](const StateVector& in, StateVector& out) {
    h.apply(in, hv);
    out = 2.0 * apply_poly(p.sign, h, hv, false) - in;
  };
  return clenshaw(p.outer.coefficients(), inner, v);
}

}  // namespace tpqsdp::poly
