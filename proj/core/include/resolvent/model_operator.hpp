#pragma once

#include <cstddef>

#include "resolvent/blaschke.hpp"
#include "resolvent/linalg.hpp"

namespace resolvent {

/// A point zeta off the spectrum, with min_i |zeta - lambda_i| >= kGuard.
struct ResolventQuery {
  static constexpr double kGuard = 1e-10;

  ResolventQuery(Spectrum sigma, Complex zeta);

  Spectrum sigma;
  Complex zeta;
};

/// Matrix of the model operator M_B in the TMW basis of K_B:
///   (i < j)  0
///   (i = j)  lambda_i
///   (i > j)  (1-|lambda_i|^2)^{1/2} (1-|lambda_j|^2)^{1/2} prod_{mu=j+1}^{i-1} (-conj(lambda_mu))
/// with the empty product equal to 1.
ComplexMatrix model_matrix(const Spectrum& sigma);

/// The extremal contraction T*: lower-triangular Toeplitz with r on the
/// diagonal and (1 - r^2)(-r)^{k-1} on the k-th subdiagonal. Equals
/// model_matrix of n copies of r.
ComplexMatrix extremal_matrix(std::size_t n, double r);

/// (zeta - M_B)^{-1} entrywise:
///   (i = j)  1 / (zeta - lambda_i)
///   (i > j)  s_i/(zeta-lambda_i) * s_j/(zeta-lambda_j) * prod_{k=j+1}^{i-1} (1 - conj(lambda_k) zeta)/(zeta - lambda_k)
/// where s_i = (1 - |lambda_i|^2)^{1/2}. O(n^2) via running products.
ComplexMatrix resolvent_closed_form(const ResolventQuery& q);

/// |(zeta - T)^{-1}| through `solve` and `spectral_norm`.
double resolvent_norm(const ComplexMatrix& t, Complex zeta);

}  // namespace resolvent
