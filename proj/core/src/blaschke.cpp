#include "resolvent/blaschke.hpp"

#include <algorithm>
#include <cmath>

#include "resolvent/errors.hpp"

namespace resolvent {

namespace {

// Below this |1 - conj(zeta) z| the closed kernel formula loses more than
// ~1e-12 relative accuracy to cancellation.
constexpr double kKernelSwitch = 1e-4;

Complex cauchy_denominator(Complex lambda, Complex z) {
  const Complex d = 1.0 - std::conj(lambda) * z;
  if (std::abs(d) < 1e-300) throw DomainError("Blaschke factor evaluated at its pole");
  return d;
}

}  // namespace

Spectrum::Spectrum(std::vector<Complex> points) : points_(std::move(points)) {
  if (points_.empty()) throw PreconditionError("Spectrum: at least one point is required");
  for (const auto& p : points_) {
    if (!std::isfinite(p.real()) || !std::isfinite(p.imag()))
      throw PreconditionError("Spectrum: non-finite point");
    if (std::abs(p) > 1.0 - kInteriorGuard)
      throw PreconditionError("Spectrum: point outside the open unit disk");
  }
}

Spectrum Spectrum::repeated(Complex lambda, std::size_t n) {
  return Spectrum(std::vector<Complex>(n, lambda));
}

double Spectrum::max_modulus() const noexcept {
  double m = 0.0;
  for (const auto& p : points_) m = std::max(m, std::abs(p));
  return m;
}

Complex blaschke_factor_eval(Complex lambda, Complex z) {
  return (lambda - z) / cauchy_denominator(lambda, z);
}

Complex blaschke_product_eval(const Spectrum& sigma, Complex z) {
  Complex b{1.0};
  for (const auto& lambda : sigma.points()) b *= blaschke_factor_eval(lambda, z);
  return b;
}

std::vector<Complex> tmw_basis_all(const Spectrum& sigma, Complex z) {
  std::vector<Complex> e(sigma.size());
  Complex partial{1.0};  // prod_{j<k} b_{lambda_j}(z)
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    const Complex lambda = sigma[k];
    const Complex denom = cauchy_denominator(lambda, z);
    e[k] = partial * std::sqrt(1.0 - std::norm(lambda)) / denom;
    partial *= (lambda - z) / denom;
  }
  return e;
}

Complex tmw_basis_eval(const Spectrum& sigma, std::size_t k, Complex z) {
  if (k < 1 || k > sigma.size()) throw PreconditionError("tmw_basis_eval: index out of range");
  Complex partial{1.0};
  for (std::size_t j = 0; j + 1 < k; ++j) partial *= blaschke_factor_eval(sigma[j], z);
  const Complex lambda = sigma[k - 1];
  return partial * std::sqrt(1.0 - std::norm(lambda)) / cauchy_denominator(lambda, z);
}

Complex tmw_expansion_eval(const TMWCoefficients& f, Complex z) {
  if (f.coeffs.size() != f.sigma.size())
    throw PreconditionError("TMWCoefficients: coefficient count differs from |sigma|");
  const auto e = tmw_basis_all(f.sigma, z);
  Complex s{};
  for (std::size_t k = 0; k < e.size(); ++k) s += f.coeffs[k] * e[k];
  return s;
}

Complex reproducing_kernel_tmw(const Spectrum& sigma, Complex zeta, Complex z) {
  const auto ez = tmw_basis_all(sigma, z);
  const auto ezeta = tmw_basis_all(sigma, zeta);
  Complex s{};
  for (std::size_t k = 0; k < ez.size(); ++k) s += std::conj(ezeta[k]) * ez[k];
  return s;
}

Complex reproducing_kernel_eval(const Spectrum& sigma, Complex zeta, Complex z) {
  const Complex denom = 1.0 - std::conj(zeta) * z;
  if (std::abs(denom) < kKernelSwitch) return reproducing_kernel_tmw(sigma, zeta, z);
  const Complex b_zeta = blaschke_product_eval(sigma, zeta);
  const Complex b_z = blaschke_product_eval(sigma, z);
  return (1.0 - std::conj(b_zeta) * b_z) / denom;
}

TMWCoefficients interpolant_g(const Spectrum& sigma, Complex zeta) {
  if (!(std::abs(zeta) > 1.0)) throw PreconditionError("interpolant_g: requires |zeta| > 1");
  const Complex w = 1.0 / std::conj(zeta);
  std::vector<Complex> c(sigma.size());
  Complex partial{1.0};  // prod_{j<k} b_{lambda_j}(1/conj(zeta))
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    const Complex lambda = sigma[k];
    c[k] = std::sqrt(1.0 - std::norm(lambda)) / (zeta - lambda) * std::conj(partial);
    partial *= blaschke_factor_eval(lambda, w);
  }
  return {sigma, std::move(c)};
}

Complex circle_inner_product(const CircleFunction& f, const CircleFunction& g, std::size_t grid_size) {
  if (grid_size == 0) throw PreconditionError("circle_inner_product: empty grid");
  Complex s{};
  for (std::size_t k = 0; k < grid_size; ++k) {
    const Complex w = circle_point(k, grid_size);
    s += f(w) * std::conj(g(w));
  }
  return s / static_cast<double>(grid_size);
}

ComplexMatrix tmw_gram_matrix(const Spectrum& sigma, std::size_t grid_size) {
  if (grid_size == 0) throw PreconditionError("tmw_gram_matrix: empty grid");
  const std::size_t m = sigma.size();
  ComplexMatrix gram(m, m);
  for (std::size_t q = 0; q < grid_size; ++q) {
    const auto e = tmw_basis_all(sigma, circle_point(q, grid_size));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) gram(i, j) += e[i] * std::conj(e[j]);
  }
  gram *= Complex{1.0 / static_cast<double>(grid_size)};
  return gram;
}

}  // namespace resolvent
