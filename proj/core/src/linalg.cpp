#include "resolvent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "resolvent/errors.hpp"

namespace resolvent {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double norm2(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return s;
}

Complex dot(std::span<const Complex> x, std::span<const Complex> y) {
  // <x, y> = sum conj(x_i) y_i
  Complex s{};
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

// splitmix64 finalizer; decorrelates neighbouring (seed, index) pairs.
std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw PreconditionError("ComplexMatrix: dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw PreconditionError("ComplexMatrix: dimensions must be positive");
  if (data_.size() != rows * cols)
    throw PreconditionError("ComplexMatrix: entry count does not match rows*cols");
  if (!all_finite()) throw PreconditionError("ComplexMatrix: non-finite entry");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  std::vector<Complex> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw PreconditionError("ComplexMatrix::from_rows: ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return {r, c, std::move(entries)};
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
  return t;
}

double ComplexMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

bool ComplexMatrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), finite);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw PreconditionError("matrix sum: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw PreconditionError("matrix difference: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator*(ComplexMatrix lhs, Complex s) { return lhs *= s; }
ComplexMatrix operator*(Complex s, ComplexMatrix rhs) { return rhs *= s; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw PreconditionError("matrix product: inner dimension mismatch");
  ComplexMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

std::vector<Complex> matvec(const ComplexMatrix& a, std::span<const Complex> x) {
  if (x.size() != a.cols()) throw PreconditionError("matvec: dimension mismatch");
  std::vector<Complex> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex s{};
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

std::vector<Complex> matvec_adjoint(const ComplexMatrix& a, std::span<const Complex> x) {
  if (x.size() != a.rows()) throw PreconditionError("matvec_adjoint: dimension mismatch");
  std::vector<Complex> y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Complex xi = x[i];
    for (std::size_t j = 0; j < a.cols(); ++j) y[j] += std::conj(a(i, j)) * xi;
  }
  return y;
}

ComplexMatrix shifted(Complex zeta, const ComplexMatrix& a) {
  if (!a.is_square()) throw PreconditionError("shifted: matrix must be square");
  ComplexMatrix out = a * Complex{-1.0};
  for (std::size_t i = 0; i < a.rows(); ++i) out(i, i) += zeta;
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw PreconditionError("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
  return m;
}

double spectral_norm(const ComplexMatrix& a, double rel_tol) {
  if (!(rel_tol > 0.0 && rel_tol <= 1e-3))
    throw PreconditionError("spectral_norm: rel_tol must lie in (0, 1e-3]");
  if (!a.all_finite()) throw PreconditionError("spectral_norm: non-finite entry");
  if (a.max_abs() == 0.0) return 0.0;

  const std::size_t n = a.cols();
  const double threshold = std::max(rel_tol * rel_tol, 1e-14);
  const std::size_t cap = 100 * n + 10000;

  std::vector<Complex> x(n, Complex{1.0 / std::sqrt(static_cast<double>(n))});
  x[0] += 1e-3;
  {
    const double s = std::sqrt(norm2(x));
    for (auto& v : x) v /= s;
  }

  double rho = 0.0;
  int quiet_steps = 0;
  std::vector<Complex> gx;
  for (std::size_t it = 1; it <= cap; ++it) {
    const auto y = matvec(a, x);
    gx = matvec_adjoint(a, y);
    const double next = norm2(y);  // x^* A^* A x with |x| = 1
    const double g = std::sqrt(norm2(gx));
    if (g == 0.0) {
      // start vector lies in the kernel: restart from the heaviest column's unit vector
      std::size_t best = 0;
      double best_norm = -1.0;
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.rows(); ++i) s += std::norm(a(i, j));
        if (s > best_norm) {
          best_norm = s;
          best = j;
        }
      }
      std::fill(x.begin(), x.end(), Complex{});
      x[best] = 1.0;
      rho = 0.0;
      quiet_steps = 0;
      continue;
    }

    const double change = std::abs(next - rho);
    rho = next;
    quiet_steps = (it > 1 && change <= threshold * rho) ? quiet_steps + 1 : 0;
    if (quiet_steps >= 2) return std::sqrt(rho);

    for (std::size_t i = 0; i < n; ++i) x[i] = gx[i] / g;
  }

  std::vector<Complex> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = gx[i] - rho * x[i];
  const double residual = rho > 0.0 ? std::sqrt(norm2(r)) / rho : 0.0;
  throw ConvergenceError("spectral_norm: power iteration did not converge within " +
                             std::to_string(cap) + " iterations",
                         std::sqrt(rho), residual, cap, x);
}

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.is_square()) throw PreconditionError("solve: coefficient matrix must be square");
  if (b.rows() != a.rows()) throw PreconditionError("solve: right-hand side row count mismatch");

  const std::size_t n = a.rows();
  const std::size_t m = b.cols();
  ComplexMatrix lu = a;
  ComplexMatrix x = b;
  const double scale = a.max_abs();
  const double tiny = 1e-14 * scale;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(lu(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (best <= tiny || scale == 0.0)
      throw SingularMatrixError("solve: matrix is numerically singular (pivot " +
                                    std::to_string(best) + " in column " + std::to_string(k) + ")",
                                k, best);
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(p, j));
      for (std::size_t j = 0; j < m; ++j) std::swap(x(k, j), x(p, j));
    }
    const Complex pivot = lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = lu(i, k) / pivot;
      if (f == Complex{}) continue;
      lu(i, k) = f;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
      for (std::size_t j = 0; j < m; ++j) x(i, j) -= f * x(k, j);
    }
  }

  // back substitution on the upper factor
  for (std::size_t kk = n; kk-- > 0;) {
    for (std::size_t j = 0; j < m; ++j) {
      Complex s = x(kk, j);
      for (std::size_t c = kk + 1; c < n; ++c) s -= lu(kk, c) * x(c, j);
      x(kk, j) = s / lu(kk, kk);
    }
  }
  return x;
}

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : master_seed_(master_seed), stream_index_(stream_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(mix(master_seed)),
                    static_cast<std::uint32_t>(mix(master_seed) >> 32),
                    static_cast<std::uint32_t>(mix(stream_index ^ 0x5bd1e995ULL)),
                    static_cast<std::uint32_t>(mix(stream_index ^ 0x5bd1e995ULL) >> 32)};
  engine_.seed(seq);
}

double RngStream::uniform() { return std::generate_canonical<double, 53>(engine_); }

double RngStream::normal() { return normal_(engine_); }

Complex RngStream::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

Complex RngStream::uniform_in_disk(double radius) {
  const double rad = radius * std::sqrt(uniform());
  const double angle = 2.0 * std::numbers::pi * uniform();
  return std::polar(rad, angle);
}

ComplexMatrix random_unitary(std::size_t n, RngStream& rng) {
  if (n == 0) throw PreconditionError("random_unitary: n must be positive");
  // columns stored contiguously while orthonormalizing
  std::vector<std::vector<Complex>> cols(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cols[j][i] = rng.complex_normal();

  for (std::size_t j = 0; j < n; ++j) {
    auto& v = cols[j];
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        const Complex c = dot(cols[k], v);
        for (std::size_t i = 0; i < n; ++i) v[i] -= c * cols[k][i];
      }
    }
    const double s = std::sqrt(norm2(v));
    for (auto& z : v) z /= s;
  }

  ComplexMatrix u(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) u(i, j) = cols[j][i];
  return u;
}

SampledContraction sample_contraction_with_diagonal(std::span<const Complex> diagonal,
                                                    RngStream& rng) {
  const std::size_t n = diagonal.size();
  if (n == 0) throw PreconditionError("sample_contraction: empty diagonal");
  for (const auto& d : diagonal)
    if (!(std::abs(d) < 1.0)) throw PreconditionError("sample_contraction: |diagonal| must be < 1");

  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = diagonal[i];
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = rng.complex_normal();
  }
  // tight tolerance: an underestimated norm would leave |T| slightly above 1
  const double norm = spectral_norm(a, 1e-8);
  const double scale = norm > 1.0 ? 1.0 / norm : 1.0;
  a *= scale;

  std::vector<Complex> eig(diagonal.begin(), diagonal.end());
  for (auto& e : eig) e *= scale;

  const ComplexMatrix u = random_unitary(n, rng);
  return {u * a * u.adjoint(), std::move(eig)};
}

SampledContraction sample_contraction(std::size_t n, double r, RngStream& rng) {
  if (n == 0) throw PreconditionError("random_contraction: n must be positive");
  if (!(r >= 0.0 && r < 1.0)) throw PreconditionError("random_contraction: r must lie in [0, 1)");
  std::vector<Complex> diag(n);
  for (auto& d : diag) d = rng.uniform_in_disk(r);
  return sample_contraction_with_diagonal(diag, rng);
}

ComplexMatrix random_contraction(std::size_t n, double r, RngStream& rng) {
  return sample_contraction(n, r, rng).matrix;
}

Complex circle_point(std::size_t k, std::size_t grid_size) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) /
                             static_cast<double>(grid_size));
}

double sup_norm_on_circle(const CircleFunction& f, std::size_t grid_size) {
  if (grid_size < 16) throw PreconditionError("sup_norm_on_circle: grid_size must be >= 16");
  double best = 0.0;
  for (std::size_t k = 0; k < grid_size; ++k) best = std::max(best, std::abs(f(circle_point(k, grid_size))));
  return best;
}

}  // namespace resolvent
