#include "resolvent/toeplitz_norm.hpp"

#include <cmath>
#include <numbers>

#include "resolvent/errors.hpp"

namespace resolvent {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMaxBisections = 200;

// f expressed through phi = pi - theta; c = (2 - beta)/beta.
double f_complement(std::size_t n, double c, double phi) {
  const double arg = static_cast<double>(n) * phi;
  const double s = std::sin(arg);
  if (std::abs(s) < 1e-14) throw DomainError("fn_theta: too close to a pole of cot(n theta)");
  return -std::cos(arg) / s + c * std::tan(0.5 * phi);
}

void check_r(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw PreconditionError("r must lie in [0, 1)");
}

}  // namespace

XBetaSpec::XBetaSpec(std::size_t n_, double beta_) : n(n_), beta(beta_) {
  if (n == 0) throw PreconditionError("XBetaSpec: n must be positive");
  if (!(beta >= 0.0 && beta <= 2.0)) throw PreconditionError("XBetaSpec: beta must lie in [0, 2]");
}

ComplexMatrix x_beta(const XBetaSpec& spec) {
  ComplexMatrix x(spec.n, spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    x(i, i) = 1.0;
    for (std::size_t j = 0; j < i; ++j) x(i, j) = spec.beta;
  }
  return x;
}

double fn_theta(std::size_t n, double beta, double theta) {
  if (n == 0) throw PreconditionError("fn_theta: n must be positive");
  if (!(beta > 0.0 && beta <= 2.0)) throw PreconditionError("fn_theta: beta must lie in (0, 2]");
  const double left = kPi * static_cast<double>(2 * n - 1) / static_cast<double>(2 * n);
  if (!(theta >= left && theta < kPi))
    throw PreconditionError("fn_theta: theta must lie in [(2n-1)pi/(2n), pi)");
  return f_complement(n, (2.0 - beta) / beta, kPi - theta);
}

ThetaStarResult theta_star(const XBetaSpec& spec, double tol) {
  if (!(spec.beta > 0.0)) throw PreconditionError("theta_star: beta must lie in (0, 2]");
  if (!(tol >= 1e-15 && tol <= 1e-6)) throw PreconditionError("theta_star: tol must lie in [1e-15, 1e-6]");

  const std::size_t n = spec.n;
  const double c = (2.0 - spec.beta) / spec.beta;
  const double phi_left = kPi / static_cast<double>(2 * n);  // theta = (2n-1)pi/(2n)
  const double theta_left = kPi - phi_left;

  if (spec.beta == 2.0) {
    // cot(n theta) vanishes at the left endpoint
    return {theta_left, phi_left, 0.0, 0, theta_left, theta_left};
  }

  double lo = 0.5 * phi_left;  // phi with f < 0
  while (f_complement(n, c, lo) >= 0.0) {
    lo *= 0.5;
    if (lo < 1e-300) throw InternalError("theta_star: failed to bracket the root near theta = pi");
  }
  double hi = phi_left;  // f >= 0
  if (f_complement(n, c, hi) < 0.0) throw InternalError("theta_star: no sign change on the bracket");
  const double bracket_far = lo;

  std::size_t it = 0;
  while (it < kMaxBisections) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    ++it;
    if (f_complement(n, c, mid) < 0.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= tol * lo) break;
  }

  const double phi = 0.5 * (lo + hi);
  return {kPi - phi, phi, f_complement(n, c, phi), it, theta_left, kPi - bracket_far};
}

double x_beta_norm(const XBetaSpec& spec) {
  if (spec.beta == 0.0) return 1.0;
  const auto root = theta_star(spec);
  // cot(theta*/2) = tan((pi - theta*)/2)
  const double cot_half = std::tan(0.5 * root.complement);
  return 0.5 * std::hypot(spec.beta - 2.0, spec.beta / cot_half);
}

double resolvent_sup(std::size_t n, double r) {
  check_r(r);
  return x_beta_norm(XBetaSpec(n, 1.0 + r)) / (1.0 - r);
}

double asymptotic_value(std::size_t n, double r) {
  check_r(r);
  if (n == 0) throw PreconditionError("asymptotic_value: n must be positive");
  return 2.0 / kPi * (1.0 + r) / (1.0 - r) * static_cast<double>(n);
}

double davies_simon(std::size_t n) {
  if (n == 0) throw PreconditionError("davies_simon: n must be positive");
  return 1.0 / std::tan(kPi / static_cast<double>(4 * n));
}

}  // namespace resolvent
