#pragma once

#include <cstddef>

#include "resolvent/linalg.hpp"

namespace resolvent {

/// Size and subdiagonal value of X_beta, 0 <= beta <= 2.
struct XBetaSpec {
  XBetaSpec(std::size_t n, double beta);

  std::size_t n;
  double beta;
};

/// Root of cot(n theta) = ((beta - 2)/beta) cot(theta/2) on [(2n-1)pi/(2n), pi).
///
/// `complement` is pi - theta carried at full relative precision; near the
/// pole theta itself cannot represent it.
struct ThetaStarResult {
  double theta;
  double complement;
  double residual;
  std::size_t iterations;
  double bracket_lo;
  double bracket_hi;
};

/// Lower-triangular Toeplitz matrix: 1 on the diagonal, beta below it.
ComplexMatrix x_beta(const XBetaSpec& spec);

/// f(theta) = cot(n theta) - ((beta - 2)/beta) cot(theta/2).
///
/// Both cotangents are reduced against pi: with phi = pi - theta,
/// f = -cot(n phi) + ((2 - beta)/beta) tan(phi/2). Throws DomainError when
/// |sin(n theta)| < 1e-14.
double fn_theta(std::size_t n, double beta, double theta);

/// Bisection for theta*. `tol` bounds the bracket width relative to
/// pi - theta*; the loop also stops after 200 halvings or once the
/// midpoint stops moving.
ThetaStarResult theta_star(const XBetaSpec& spec, double tol = 1e-15);

/// |X_beta| = (1/2) sqrt((beta - 2)^2 + beta^2 / cot^2(theta*/2)), with
/// beta = 0 giving 1.
double x_beta_norm(const XBetaSpec& spec);

/// R(n, r) = |X_{1+r}| / (1 - r), the supremum of |(zeta - T)^{-1}| over
/// n x n contractions with spectral radius <= r and |zeta| >= 1.
double resolvent_sup(std::size_t n, double r);

/// Large-n law (2/pi) (1 + r)/(1 - r) n.
double asymptotic_value(std::size_t n, double r);

/// cot(pi / (4n)).
double davies_simon(std::size_t n);

}  // namespace resolvent
