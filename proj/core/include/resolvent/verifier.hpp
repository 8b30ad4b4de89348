#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "resolvent/blaschke.hpp"
#include "resolvent/linalg.hpp"

namespace resolvent {

/// 64 equispaced circle points followed by 1.5, 2 and 10 e^{i pi/3}.
std::vector<Complex> default_zeta_grid();

struct TrialConfig {
  std::size_t n = 1;
  double r = 0.5;
  std::size_t trials = 1;
  std::uint64_t master_seed = 0;
  std::vector<Complex> zeta_grid = default_zeta_grid();
  double tolerance = 1e-7;  // relative: a check fails when observed > bound (1 + tolerance)

  void validate() const;
};

/// Outcome of a batch of checks. Margins are relative, (bound - observed) / bound;
/// worst_margin is +inf when no check produced a number.
struct TrialReport {
  std::size_t passed = 0;
  std::size_t failed = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  std::string worst_case;  // empty unless failed > 0
  double worst_case_margin = std::numeric_limits<double>::infinity();

  std::size_t checks() const noexcept { return passed + failed; }
};

/// Commutative, associative combination of two reports.
TrialReport merge(const TrialReport& a, const TrialReport& b);

/// |R(zeta, T)| <= R(n, r)(1 + tol) for each zeta.
TrialReport check_extremal(const ComplexMatrix& t, double r, std::span<const Complex> zetas,
                           double tolerance, const std::string& label = {});

/// |R(zeta, T)| <= |R(zeta, M_B)| (1 + tol) with B built from sigma.
TrialReport check_dominance(const ComplexMatrix& t, const Spectrum& sigma,
                            std::span<const Complex> zetas, double tolerance,
                            const std::string& label = {});

/// Along every ray zeta = s w, s in [1, 5] sampled at `radial_samples`
/// points, the resolvent norm never exceeds its value at s = 1 by more than
/// the tolerance. One check per ray.
TrialReport check_boundary(const ComplexMatrix& t, std::size_t ray_count, std::size_t radial_samples,
                           double tolerance, const std::string& label = {});

/// Trial i draws random_contraction(n, r) from RngStream(master_seed, i).
TrialReport verify_extremal(const TrialConfig& cfg);

/// Trial i draws a triangular-based contraction whose recorded eigenvalues
/// are pairwise at least 1e-3 apart and compares it with the model operator.
TrialReport verify_dominance(const TrialConfig& cfg);

struct BoundaryConfig {
  std::size_t n = 4;
  double r = 0.5;
  std::size_t ray_count = 32;
  std::size_t radial_samples = 16;
  std::size_t random_models = 20;
  std::uint64_t master_seed = 0;
  double tolerance = 1e-7;

  void validate() const;
};

/// Runs check_boundary on extremal_matrix(n, r) and on `random_models` model
/// matrices with spectra drawn from the r-disk.
TrialReport verify_boundary_max(const BoundaryConfig& cfg);

}  // namespace resolvent
