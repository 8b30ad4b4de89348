#include "resolvent/interpolation_bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "resolvent/errors.hpp"

namespace resolvent {

namespace {

class KahanSum {
 public:
  void add(double x) {
    const double y = x - carry_;
    const double t = sum_ + y;
    carry_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace

Complex PolynomialCoefficients::eval(Complex z) const {
  Complex acc{};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

FejerQuery::FejerQuery(std::size_t n_, double r_, double zeta_) : n(n_), r(r_), zeta(zeta_) {
  if (n == 0) throw PreconditionError("FejerQuery: n must be positive");
  if (!(r > 0.0 && r < 1.0)) throw PreconditionError("FejerQuery: r must lie in (0, 1)");
  if (!(zeta > -1.0 / r + kWindowGuard && zeta < -1.0 - kWindowGuard))
    throw PreconditionError("FejerQuery: zeta must satisfy -1/r < zeta < -1");
}

double upper_bound_sum(const Spectrum& sigma) {
  double s = 0.0;
  for (const auto& lambda : sigma.points()) {
    const double m = std::abs(lambda);
    s += (1.0 + m) / (1.0 - m);
  }
  return s;
}

double lower_bound(std::size_t n, double r) {
  if (n == 0) throw PreconditionError("lower_bound: n must be positive");
  if (!(r >= 0.0 && r < 1.0)) throw PreconditionError("lower_bound: r must lie in [0, 1)");
  const double nd = static_cast<double>(n);
  return (nd * (1.0 + r) + 1.0 - r) / (2.0 * (1.0 - r));
}

PolynomialCoefficients phi_coeffs(const FejerQuery& q) {
  const double a = q.ratio();
  const double weight = -(1.0 - q.r * q.r) / (q.r + q.zeta);
  std::vector<Complex> c(q.n + 1);
  c[0] = 1.0;
  double power = 1.0;  // a^{k-1}
  for (std::size_t k = 1; k < q.n; ++k) {
    c[k] = weight * power;
    power *= a;
  }
  c[q.n] = q.r * power;  // power == a^{n-1} here
  return {std::move(c)};
}

Complex psi_eval(const FejerQuery& q, Complex z) {
  return phi_coeffs(q).eval(z) / (q.zeta + q.r);
}

double partial_sum_S(const FejerQuery& q, std::size_t j) {
  if (j >= q.n) throw PreconditionError("partial_sum_S: j must lie in [0, n-1]");
  const double a = q.ratio();
  KahanSum sum;
  double power = 1.0;
  for (std::size_t k = 1; k <= j; ++k) {
    sum.add(power);
    power *= a;
  }
  return 1.0 - (1.0 - q.r * q.r) / (q.r + q.zeta) * sum.value();
}

double partial_sum_S_closed(const FejerQuery& q, std::size_t j) {
  if (j >= q.n) throw PreconditionError("partial_sum_S_closed: j must lie in [0, n-1]");
  const double a = q.ratio();
  return (q.r + q.zeta + (1.0 - q.r) * std::pow(a, static_cast<double>(j))) / (q.zeta + 1.0);
}

double direct_partial_sum_total(const FejerQuery& q) {
  const double a = q.ratio();
  const double weight = -(1.0 - q.r * q.r) / (q.r + q.zeta);
  KahanSum geometric;  // sum_{k=1}^{j} a^{k-1}
  KahanSum total;
  double power = 1.0;
  for (std::size_t j = 0; j < q.n; ++j) {
    total.add(1.0 + weight * geometric.value());
    geometric.add(power);
    power *= a;
  }
  return total.value();
}

double closed_form_sum(const FejerQuery& q) {
  const double zp1 = q.zeta + 1.0;
  if (std::abs(zp1) < kClosedFormSwitch) return direct_partial_sum_total(q);
  const double r = q.r;
  const double nd = static_cast<double>(q.n);
  const double a_n = std::pow((-r * q.zeta - 1.0) / (r + q.zeta), nd);
  const double bracket = a_n * (r - 1.0) + (zp1 * nd - 1.0) * r + 1.0 + zp1 * nd;
  return (q.zeta + r) / (zp1 * zp1 * (1.0 + r)) * bracket;
}

double fejer_mean(const FejerQuery& q) { return closed_form_sum(q) / static_cast<double>(q.n); }

double fejer_convolution_at_one(const PolynomialCoefficients& p, std::size_t n) {
  if (n == 0) throw PreconditionError("fejer_convolution_at_one: n must be positive");
  const double nd = static_cast<double>(n);
  KahanSum sum;
  for (std::size_t k = 0; k < std::min(n, p.coeffs.size()); ++k)
    sum.add((1.0 - static_cast<double>(k) / nd) * p.coeffs[k].real());
  return sum.value();
}

std::vector<Complex> fejer_smooth(std::span<const Complex> samples, std::size_t n) {
  const std::size_t grid = samples.size();
  if (n == 0) throw PreconditionError("fejer_smooth: n must be positive");
  if (2 * n - 1 > grid) throw PreconditionError("fejer_smooth: grid too coarse for the kernel degree");

  // kernel K(w_m) = sum_{|j|<n} (1 - |j|/n) w_m^j, nonnegative with mean 1
  std::vector<double> kernel(grid);
  const double nd = static_cast<double>(n);
  for (std::size_t m = 0; m < grid; ++m) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(grid);
    double s = 1.0;
    for (std::size_t j = 1; j < n; ++j)
      s += 2.0 * (1.0 - static_cast<double>(j) / nd) * std::cos(angle * static_cast<double>(j));
    kernel[m] = s;
  }

  std::vector<Complex> out(grid);
  for (std::size_t m = 0; m < grid; ++m) {
    Complex acc{};
    for (std::size_t q = 0; q < grid; ++q) acc += kernel[(m + grid - q) % grid] * samples[q];
    out[m] = acc / static_cast<double>(grid);
  }
  return out;
}

double quotient_norm_lower(const FejerQuery& q) { return fejer_mean(q) / std::abs(q.zeta + q.r); }

FejerLimit fejer_mean_limit(std::size_t n, double r) {
  constexpr std::size_t kPoints = 5;  // k = 4..8
  std::array<double, kPoints> x{};
  std::array<double, kPoints> p{};
  for (std::size_t i = 0; i < kPoints; ++i) {
    x[i] = std::pow(10.0, -static_cast<double>(i + 4));
    p[i] = fejer_mean(FejerQuery(n, r, -1.0 - x[i]));
  }

  // Neville tableau evaluated at x = 0; diag[k] is the degree-k extrapolant.
  std::array<double, kPoints> diag{};
  diag[0] = p[0];
  for (std::size_t level = 1; level < kPoints; ++level) {
    for (std::size_t i = 0; i + level < kPoints; ++i)
      p[i] = (x[i + level] * p[i] - x[i] * p[i + 1]) / (x[i + level] - x[i]);
    diag[level] = p[0];
  }
  const double change = std::abs(diag[kPoints - 1] - diag[kPoints - 2]);
  return {diag[kPoints - 1], change, change < 1e-6};
}

}  // namespace resolvent
