#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "resolvent/blaschke.hpp"
#include "resolvent/linalg.hpp"

namespace resolvent {

/// coeffs[k] is the coefficient of z^k.
struct PolynomialCoefficients {
  std::vector<Complex> coeffs;

  std::size_t degree_bound() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  Complex eval(Complex z) const;
};

/// Parameters of the Fejer lower-bound construction for B = b_{-r}^n:
/// r in (0, 1) and a real zeta with -1/r < zeta < -1 (1e-12 margin at both ends).
struct FejerQuery {
  static constexpr double kWindowGuard = 1e-12;

  FejerQuery(std::size_t n, double r, double zeta);

  /// a = -(1 + r zeta)/(r + zeta); lies in (0, 1) on the window.
  double ratio() const noexcept { return -(1.0 + r * zeta) / (r + zeta); }

  std::size_t n;
  double r;
  double zeta;
};

/// sum_k (1 + |lambda_k|)/(1 - |lambda_k|): the interpolation upper bound on
/// |(zeta - T)^{-1}| for |zeta| >= 1 and a contraction T with minimal
/// polynomial zeros sigma.
double upper_bound_sum(const Spectrum& sigma);

/// (n(1 + r) + 1 - r) / (2(1 - r)), the lower bound on R(n, r).
double lower_bound(std::size_t n, double r);

/// Phi_n(z) = 1 + r a^{n-1} z^n - ((1 - r^2)/(r + zeta)) sum_{k=1}^{n-1} a^{k-1} z^k.
PolynomialCoefficients phi_coeffs(const FejerQuery& q);

/// Psi_n(z) = Phi_n(z) / (zeta + r); equals g(b_{-r}(z)) for the interpolant g
/// of 1/(zeta - z) on n copies of -r.
Complex psi_eval(const FejerQuery& q, Complex z);

/// S_j(1) = 1 - ((1 - r^2)/(r + zeta)) sum_{k=1}^{j} a^{k-1}, by direct summation.
double partial_sum_S(const FejerQuery& q, std::size_t j);

/// S_j(1) = (r + zeta + (1 - r) a^j) / (zeta + 1). Loses accuracy as zeta -> -1.
double partial_sum_S_closed(const FejerQuery& q, std::size_t j);

/// sum_{j=0}^{n-1} S_j(1) by compensated direct summation.
double direct_partial_sum_total(const FejerQuery& q);

/// sum_{j=0}^{n-1} S_j(1) through
///   (zeta + r)/((zeta + 1)^2 (1 + r)) (a^n (r - 1) + ((zeta + 1)n - 1) r + 1 + (zeta + 1) n).
/// The formula is 0/0 at zeta = -1; for |zeta + 1| < kClosedFormSwitch the
/// compensated direct sum is returned instead.
double closed_form_sum(const FejerQuery& q);

inline constexpr double kClosedFormSwitch = 1e-2;

/// (Phi_n * F_n)(1) = (1/n) sum_j S_j(1), the Cesaro mean of the partial sums
/// at z = 1.
double fejer_mean(const FejerQuery& q);

/// sum_{k=0}^{n-1} (1 - k/n) c_k: convolution of a polynomial with the
/// (n-1)-th Fejer kernel, evaluated at 1.
double fejer_convolution_at_one(const PolynomialCoefficients& p, std::size_t n);

/// Cesaro mean of the Fourier partial sums of degree 0..n-1, applied to a
/// function sampled on `samples.size()` equispaced circle points (a circular
/// convolution with the Fejer kernel). Output is sampled on the same grid.
std::vector<Complex> fejer_smooth(std::span<const Complex> samples, std::size_t n);

/// (1/|zeta + r|) fejer_mean(q): certified lower bound on |(zeta - M_B)^{-1}|
/// for B = b_{-r}^n.
double quotient_norm_lower(const FejerQuery& q);

/// Numeric zeta -> -1 limit of fejer_mean along zeta_k = -1 - 10^{-k},
/// k = 4..8, extrapolated to zeta = -1 with Neville's scheme.
struct FejerLimit {
  double value;
  double last_change;  // |difference| of the last two extrapolants
  bool accepted;       // last_change < 1e-6
};

FejerLimit fejer_mean_limit(std::size_t n, double r);

}  // namespace resolvent
