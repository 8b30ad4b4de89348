#include "resolvent/model_operator.hpp"

#include <cmath>
#include <limits>

#include "resolvent/errors.hpp"

namespace resolvent {

ResolventQuery::ResolventQuery(Spectrum s, Complex z) : sigma(std::move(s)), zeta(z) {
  if (!std::isfinite(zeta.real()) || !std::isfinite(zeta.imag()))
    throw PreconditionError("ResolventQuery: zeta must be finite");
  for (const auto& lambda : sigma.points())
    if (std::abs(zeta - lambda) < kGuard)
      throw PreconditionError("ResolventQuery: zeta lies on (or within 1e-10 of) the spectrum");
}

ComplexMatrix model_matrix(const Spectrum& sigma) {
  const std::size_t n = sigma.size();
  std::vector<double> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = std::sqrt(1.0 - std::norm(sigma[i]));

  ComplexMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    m(j, j) = sigma[j];
    Complex running{1.0};
    for (std::size_t i = j + 1; i < n; ++i) {
      m(i, j) = s[i] * s[j] * running;
      running *= -std::conj(sigma[i]);
    }
  }
  return m;
}

ComplexMatrix extremal_matrix(std::size_t n, double r) {
  if (n == 0) throw PreconditionError("extremal_matrix: n must be positive");
  if (!(r > 0.0 && r < 1.0)) throw PreconditionError("extremal_matrix: r must lie in (0, 1)");
  return model_matrix(Spectrum::repeated(r, n));
}

ComplexMatrix resolvent_closed_form(const ResolventQuery& q) {
  const auto& sigma = q.sigma;
  const Complex zeta = q.zeta;
  const std::size_t n = sigma.size();

  std::vector<Complex> diag(n);   // 1 / (zeta - lambda_i)
  std::vector<Complex> scaled(n); // s_i / (zeta - lambda_i)
  std::vector<Complex> ratio(n);  // (1 - conj(lambda_i) zeta) / (zeta - lambda_i)
  for (std::size_t i = 0; i < n; ++i) {
    const Complex lambda = sigma[i];
    diag[i] = 1.0 / (zeta - lambda);
    scaled[i] = std::sqrt(1.0 - std::norm(lambda)) * diag[i];
    ratio[i] = (1.0 - std::conj(lambda) * zeta) * diag[i];
  }

  ComplexMatrix out(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out(j, j) = diag[j];
    Complex running{1.0};
    for (std::size_t i = j + 1; i < n; ++i) {
      out(i, j) = scaled[i] * scaled[j] * running;
      running *= ratio[i];
    }
  }
  return out;
}

double resolvent_norm(const ComplexMatrix& t, Complex zeta) {
  const ComplexMatrix inv = solve(shifted(zeta, t), ComplexMatrix::identity(t.rows()));
  return spectral_norm(inv, 1e-10);
}

}  // namespace resolvent
