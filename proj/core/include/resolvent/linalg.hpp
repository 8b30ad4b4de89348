#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

namespace resolvent {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Entries are always finite; constructors and
/// `from_rows` reject NaN/Inf.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  static ComplexMatrix diagonal(std::span<const Complex> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Complex> entries() const noexcept { return data_; }
  std::span<Complex> entries() noexcept { return data_; }

  ComplexMatrix adjoint() const;
  /// Largest entry modulus (0 for the zero matrix).
  double max_abs() const noexcept;
  bool all_finite() const noexcept;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(ComplexMatrix lhs, Complex s);
ComplexMatrix operator*(Complex s, ComplexMatrix rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

/// y = A x
std::vector<Complex> matvec(const ComplexMatrix& a, std::span<const Complex> x);
/// y = A^* x
std::vector<Complex> matvec_adjoint(const ComplexMatrix& a, std::span<const Complex> x);

/// zeta * I - A for square A.
ComplexMatrix shifted(Complex zeta, const ComplexMatrix& a);

/// max_ij |A_ij - B_ij|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Default relative tolerance for `spectral_norm`; squared it gives the
/// Rayleigh-quotient stopping threshold 1e-14.
inline constexpr double kDefaultNormTolerance = 1e-7;

/// Largest singular value by power iteration on A^*A.
///
/// The start vector is the normalized all-ones vector perturbed by 1e-3 e_1.
/// Iteration stops once the Rayleigh quotient changes by less than
/// max(rel_tol^2, 1e-14) relative on two consecutive steps. The cap is
/// 100 n + 10^4 iterations; exceeding it throws ConvergenceError carrying the
/// last iterate and the eigen-residual |A^*A x - rho x| / rho.
///
/// The Rayleigh quotient approaches sigma_max^2 from below, so a truncated
/// run underestimates.
double spectral_norm(const ComplexMatrix& a, double rel_tol = kDefaultNormTolerance);

/// Solves A X = B by LU with partial pivoting. Throws SingularMatrixError when
/// a pivot falls below 1e-14 * max|A_ij|.
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b);

/// Deterministic random stream. Identical (master_seed, stream_index) pairs
/// reproduce identical draws; concurrent callers use distinct stream indices.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

  std::uint64_t master_seed() const noexcept { return master_seed_; }
  std::uint64_t stream_index() const noexcept { return stream_index_; }

  /// Uniform in [0, 1).
  double uniform();
  double normal();
  /// Standard complex Gaussian: E|z|^2 = 1.
  Complex complex_normal();
  /// Area-uniform point in the closed disk of the given radius.
  Complex uniform_in_disk(double radius);
  std::uint64_t next_u64() { return engine_(); }

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Haar-distributed unitary: Gram-Schmidt (applied twice) on a complex
/// Gaussian matrix. The triangular factor has positive real diagonal, which
/// fixes the phases.
ComplexMatrix random_unitary(std::size_t n, RngStream& rng);

/// Contraction with spectral radius <= r, together with its eigenvalues.
struct SampledContraction {
  ComplexMatrix matrix;
  std::vector<Complex> eigenvalues;
};

/// Upper-triangular draw (area-uniform diagonal in the r-disk, Gaussian strict
/// upper part), scaled by min(1, 1/|A|), then conjugated by a Haar unitary.
SampledContraction sample_contraction(std::size_t n, double r, RngStream& rng);

/// Same draw as `sample_contraction` but with a caller-chosen diagonal
/// (every |d_i| must be < 1).
SampledContraction sample_contraction_with_diagonal(std::span<const Complex> diagonal,
                                                    RngStream& rng);

ComplexMatrix random_contraction(std::size_t n, double r, RngStream& rng);

using CircleFunction = std::function<Complex(Complex)>;

/// max |f| over grid_size equispaced points of the unit circle. A lower
/// estimate of the sup norm that converges as the grid is refined.
double sup_norm_on_circle(const CircleFunction& f, std::size_t grid_size);

/// The k-th of `grid_size` equispaced points exp(2 pi i k / grid_size).
Complex circle_point(std::size_t k, std::size_t grid_size);

}  // namespace resolvent
