#pragma once

// Monotone transport from a centred normal onto a one-dimensional target,
// the two-variable normal rotation, and the transformational invariance of
// the information inequality.

#include <array>
#include <cstddef>
#include <vector>

#include "renyi/density.hpp"
#include "renyi/entropy.hpp"
#include "renyi/report.hpp"

namespace renyi {

/// Knots (x[k], t[k]) of T = F^{-1} o Phi_sigma on a uniform source grid.
struct TransportMap1D {
  double source_sigma2;
  Density1D target;
  std::vector<double> x;
  std::vector<double> t;

  double spacing() const { return x[1] - x[0]; }
  /// T' by central differences, one-sided at the two ends.
  std::vector<double> slopes() const;
  bool strictly_increasing() const;
};

struct TransportOptions {
  std::size_t knots = 16385;
  // Knots cover +-span_sigmas standard deviations. Wider spans push the
  // upper-tail knots of bounded targets into ties at double precision.
  double span_sigmas = 7.0;
};

/// Throws NonDiffeomorphicTargetError for grid targets with a zero-density
/// gap inside their support.
TransportMap1D monotone_transport(const Density1D& target, double sigma2, const TransportOptions& opts = {});

/// Sup-norm distance between the CDF of T(X*) and the target CDF, evaluated
/// on 4097 points across the target's default window with T inverted by
/// linear interpolation. Passes when the distance is below 1e-3 and the knots
/// are strictly increasing.
EpiReport pushforward_check(const TransportMap1D& map);

using Mat2 = std::array<std::array<double, 2>, 2>;

struct RotationPair {
  double lambda;
  Mat2 covariance_before;
  Mat2 covariance_after;
  double covariance_error;     // max |after - before|
  double orthogonality_error;  // max |R R^T - I|
  double inverse_error;        // max |R^{-1}(R v) - v| over the unit vectors
  bool pass;                   // all three below 1e-14 (relative to sigma2 for the covariance)
};

/// Applies R = [[sqrt(l), sqrt(1-l)], [-sqrt(1-l), sqrt(l)]] to diag(sigma2, sigma2).
RotationPair normal_rotation_check(double lambda, double sigma2);

struct InvarianceGap {
  double transformed;  // E[phi*^{1/p'}(X*)] / ||f*||_p
  double original;     // E[phi^{1/p'}(X)] / ||f||_p
  double gap;          // |transformed - original| / |original|
};

/// T carries the escort of Normal(sigma2) of order p, i.e. Normal(sigma2/p),
/// onto escort(f, p); phi* = phi(T) T'.
InvarianceGap invariance_gap(const Density1D& f, const Density1D& phi, double p, double sigma2,
                             const NumericsConfig& cfg = {}, const TransportOptions& opts = {});

}  // namespace renyi
