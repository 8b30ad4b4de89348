#include "resolvent/verifier.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <numbers>

#include "resolvent/errors.hpp"
#include "resolvent/model_operator.hpp"
#include "resolvent/toeplitz_norm.hpp"

namespace resolvent {

namespace {

constexpr double kMinEigenGap = 1e-3;
constexpr int kMaxSpectrumRedraws = 1000;

std::string format_case(const std::string& label, Complex zeta, double observed, double bound) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "zeta=%.17g%+.17gi observed=%.17g bound=%.17g", zeta.real(),
                zeta.imag(), observed, bound);
  return label.empty() ? std::string(buf) : label + " " + buf;
}

// Folds one observation into the report.
void record(TrialReport& rep, double observed, double bound, double tolerance, const std::string& label,
            Complex zeta) {
  const double margin = (bound - observed) / bound;
  rep.worst_margin = std::min(rep.worst_margin, margin);
  if (observed <= bound * (1.0 + tolerance)) {
    ++rep.passed;
    return;
  }
  ++rep.failed;
  std::string text = format_case(label, zeta, observed, bound);
  if (rep.failed == 1 || margin < rep.worst_case_margin ||
      (margin == rep.worst_case_margin && text < rep.worst_case)) {
    rep.worst_case = std::move(text);
    rep.worst_case_margin = margin;
  }
}

TrialReport error_report(std::size_t checks, const std::string& label, const std::exception& e) {
  TrialReport rep;
  rep.failed = checks;
  rep.worst_case = (label.empty() ? std::string() : label + " ") + "error: " + e.what();
  rep.worst_case_margin = -std::numeric_limits<double>::infinity();
  return rep;
}

std::string trial_label(const char* suite, std::uint64_t seed, std::size_t index) {
  return std::string(suite) + " seed=" + std::to_string(seed) + " trial=" + std::to_string(index);
}

bool well_separated(std::span<const Complex> pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (std::abs(pts[i] - pts[j]) < kMinEigenGap) return false;
  return true;
}

}  // namespace

std::vector<Complex> default_zeta_grid() {
  std::vector<Complex> grid;
  grid.reserve(67);
  for (std::size_t k = 0; k < 64; ++k) grid.push_back(circle_point(k, 64));
  grid.emplace_back(1.5, 0.0);
  grid.emplace_back(2.0, 0.0);
  grid.push_back(std::polar(10.0, std::numbers::pi / 3.0));
  return grid;
}

void TrialConfig::validate() const {
  if (n == 0) throw PreconditionError("TrialConfig: n must be positive");
  if (!(r > 0.0 && r < 1.0)) throw PreconditionError("TrialConfig: r must lie in (0, 1)");
  if (trials == 0) throw PreconditionError("TrialConfig: trials must be positive");
  if (zeta_grid.empty()) throw PreconditionError("TrialConfig: empty zeta grid");
  for (const auto& z : zeta_grid)
    if (!(std::abs(z) >= 1.0 - 1e-14)) throw PreconditionError("TrialConfig: every |zeta| must be >= 1");
  if (!(tolerance >= 0.0)) throw PreconditionError("TrialConfig: tolerance must be nonnegative");
}

void BoundaryConfig::validate() const {
  if (n == 0) throw PreconditionError("BoundaryConfig: n must be positive");
  if (!(r > 0.0 && r < 1.0)) throw PreconditionError("BoundaryConfig: r must lie in (0, 1)");
  if (ray_count < 2 || radial_samples < 2)
    throw PreconditionError("BoundaryConfig: ray_count and radial_samples must be >= 2");
  if (!(tolerance >= 0.0)) throw PreconditionError("BoundaryConfig: tolerance must be nonnegative");
}

TrialReport merge(const TrialReport& a, const TrialReport& b) {
  TrialReport out;
  out.passed = a.passed + b.passed;
  out.failed = a.failed + b.failed;
  out.worst_margin = std::min(a.worst_margin, b.worst_margin);
  const TrialReport* pick = nullptr;
  if (a.failed > 0 && b.failed > 0) {
    if (a.worst_case_margin != b.worst_case_margin)
      pick = a.worst_case_margin < b.worst_case_margin ? &a : &b;
    else
      pick = a.worst_case <= b.worst_case ? &a : &b;
  } else if (a.failed > 0) {
    pick = &a;
  } else if (b.failed > 0) {
    pick = &b;
  }
  if (pick) {
    out.worst_case = pick->worst_case;
    out.worst_case_margin = pick->worst_case_margin;
  }
  return out;
}

TrialReport check_extremal(const ComplexMatrix& t, double r, std::span<const Complex> zetas,
                           double tolerance, const std::string& label) {
  TrialReport rep;
  try {
    const double bound = resolvent_sup(t.rows(), r);
    for (const auto& zeta : zetas) record(rep, resolvent_norm(t, zeta), bound, tolerance, label, zeta);
  } catch (const std::exception& e) {
    return merge(rep, error_report(zetas.size() - rep.checks(), label, e));
  }
  return rep;
}

TrialReport check_dominance(const ComplexMatrix& t, const Spectrum& sigma,
                            std::span<const Complex> zetas, double tolerance,
                            const std::string& label) {
  TrialReport rep;
  try {
    const ComplexMatrix model = model_matrix(sigma);
    for (const auto& zeta : zetas)
      record(rep, resolvent_norm(t, zeta), resolvent_norm(model, zeta), tolerance, label, zeta);
  } catch (const std::exception& e) {
    return merge(rep, error_report(zetas.size() - rep.checks(), label, e));
  }
  return rep;
}

TrialReport check_boundary(const ComplexMatrix& t, std::size_t ray_count, std::size_t radial_samples,
                           double tolerance, const std::string& label) {
  if (ray_count < 2 || radial_samples < 2)
    throw PreconditionError("check_boundary: ray_count and radial_samples must be >= 2");
  TrialReport rep;
  for (std::size_t k = 0; k < ray_count; ++k) {
    const Complex omega = circle_point(k, ray_count);
    try {
      const double at_circle = resolvent_norm(t, omega);
      double peak = at_circle;
      double peak_s = 1.0;
      for (std::size_t j = 1; j < radial_samples; ++j) {
        const double s = 1.0 + 4.0 * static_cast<double>(j) / static_cast<double>(radial_samples - 1);
        const double v = resolvent_norm(t, s * omega);
        if (v > peak) {
          peak = v;
          peak_s = s;
        }
      }
      record(rep, peak, at_circle, tolerance, label, peak_s * omega);
    } catch (const std::exception& e) {
      rep = merge(rep, error_report(1, label, e));
    }
  }
  return rep;
}

TrialReport verify_extremal(const TrialConfig& cfg) {
  cfg.validate();
  TrialReport total;
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    const std::string label = trial_label("extremal", cfg.master_seed, i);
    try {
      RngStream rng(cfg.master_seed, i);
      const ComplexMatrix t = random_contraction(cfg.n, cfg.r, rng);
      total = merge(total, check_extremal(t, cfg.r, cfg.zeta_grid, cfg.tolerance, label));
    } catch (const std::exception& e) {
      total = merge(total, error_report(cfg.zeta_grid.size(), label, e));
    }
  }
  return total;
}

TrialReport verify_dominance(const TrialConfig& cfg) {
  cfg.validate();
  TrialReport total;
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    const std::string label = trial_label("dominance", cfg.master_seed, i);
    try {
      RngStream rng(cfg.master_seed, i);
      SampledContraction draw = sample_contraction(cfg.n, cfg.r, rng);
      int redraws = 0;
      while (!well_separated(draw.eigenvalues)) {
        if (++redraws > kMaxSpectrumRedraws)
          throw InternalError("verify_dominance: could not draw a well-separated spectrum");
        draw = sample_contraction(cfg.n, cfg.r, rng);
      }
      const Spectrum sigma(draw.eigenvalues);
      total = merge(total, check_dominance(draw.matrix, sigma, cfg.zeta_grid, cfg.tolerance, label));
    } catch (const std::exception& e) {
      total = merge(total, error_report(cfg.zeta_grid.size(), label, e));
    }
  }
  return total;
}

TrialReport verify_boundary_max(const BoundaryConfig& cfg) {
  cfg.validate();
  TrialReport total = check_boundary(extremal_matrix(cfg.n, cfg.r), cfg.ray_count, cfg.radial_samples,
                                     cfg.tolerance, "boundary extremal");
  for (std::size_t i = 0; i < cfg.random_models; ++i) {
    const std::string label = trial_label("boundary model", cfg.master_seed, i);
    try {
      RngStream rng(cfg.master_seed, i);
      std::vector<Complex> pts(cfg.n);
      for (auto& p : pts) p = rng.uniform_in_disk(cfg.r);
      total = merge(total, check_boundary(model_matrix(Spectrum(pts)), cfg.ray_count,
                                          cfg.radial_samples, cfg.tolerance, label));
    } catch (const std::exception& e) {
      total = merge(total, error_report(cfg.ray_count, label, e));
    }
  }
  return total;
}

}  // namespace resolvent
