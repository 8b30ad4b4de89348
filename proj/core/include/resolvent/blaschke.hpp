#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "resolvent/linalg.hpp"

namespace resolvent {

/// Points of the open unit disk listed with multiplicity; the zero set of a
/// finite Blaschke product and the eigenvalue list of a model operator.
class Spectrum {
 public:
  /// Interior guard: every point must satisfy |lambda| <= 1 - kInteriorGuard.
  static constexpr double kInteriorGuard = 1e-12;

  explicit Spectrum(std::vector<Complex> points);

  /// n copies of the same point.
  static Spectrum repeated(Complex lambda, std::size_t n);

  std::size_t size() const noexcept { return points_.size(); }
  std::span<const Complex> points() const noexcept { return points_; }
  const Complex& operator[](std::size_t i) const { return points_[i]; }
  double max_modulus() const noexcept;

 private:
  std::vector<Complex> points_;
};

/// Coordinates of a model-space element in the Takenaka-Malmquist-Walsh basis.
struct TMWCoefficients {
  Spectrum sigma;
  std::vector<Complex> coeffs;
};

/// b_lambda(z) = (lambda - z) / (1 - conj(lambda) z). Throws DomainError at the pole.
Complex blaschke_factor_eval(Complex lambda, Complex z);

/// B_sigma(z), the product of the factors in sequence order.
Complex blaschke_product_eval(const Spectrum& sigma, Complex z);

/// e_k(z) for 1-based k:
///   e_k = prod_{j<k} b_{lambda_j} * (1 - |lambda_k|^2)^{1/2} / (1 - conj(lambda_k) z).
Complex tmw_basis_eval(const Spectrum& sigma, std::size_t k, Complex z);

/// (e_1(z), ..., e_m(z)) in one O(m) sweep.
std::vector<Complex> tmw_basis_all(const Spectrum& sigma, Complex z);

/// Evaluates sum_k c_k e_k(z).
Complex tmw_expansion_eval(const TMWCoefficients& f, Complex z);

/// Reproducing kernel of the model space,
///   k_zeta^B(z) = (1 - conj(B(zeta)) B(z)) / (1 - conj(zeta) z).
/// Close to the removable singularity conj(zeta) z = 1 the value comes from
/// the basis expansion sum_k conj(e_k(zeta)) e_k(z) instead.
Complex reproducing_kernel_eval(const Spectrum& sigma, Complex zeta, Complex z);

/// Same kernel, always through the basis expansion.
Complex reproducing_kernel_tmw(const Spectrum& sigma, Complex zeta, Complex z);

/// TMW coordinates of g = (1/zeta) P_B k_{1/conj(zeta)}, the model-space
/// interpolant of 1/(zeta - z) on sigma:
///   c_k = (1 - |lambda_k|^2)^{1/2} / (zeta - lambda_k) * conj(prod_{j<k} b_{lambda_j}(1/conj(zeta))).
/// Requires |zeta| > 1.
TMWCoefficients interpolant_g(const Spectrum& sigma, Complex zeta);

/// Default number of nodes for trapezoid-rule inner products on the circle.
inline constexpr std::size_t kDefaultCircleGrid = 4096;

/// Discrete H^2 inner product <f, g> = (1/N) sum f(w_k) conj(g(w_k)) over N
/// equispaced circle points. Exact up to aliasing for the rational functions
/// used here.
Complex circle_inner_product(const CircleFunction& f, const CircleFunction& g,
                             std::size_t grid_size = kDefaultCircleGrid);

/// Gram matrix of (e_k) under `circle_inner_product`.
ComplexMatrix tmw_gram_matrix(const Spectrum& sigma, std::size_t grid_size = kDefaultCircleGrid);

}  // namespace resolvent
