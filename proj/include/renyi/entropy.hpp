#pragma once

// Renyi entropies, entropy powers, KL divergence, the derivative identity,
// varentropy and the log-concave order scans, all by fixed-grid quadrature.

#include <cstddef>
#include <span>
#include <vector>

#include "renyi/density.hpp"
#include "renyi/quadrature.hpp"
#include "renyi/report.hpp"

namespace renyi {

struct NumericsConfig {
  std::size_t grid_n = 16384;   // quadrature intervals across a window
  double richardson_tol = 1e-6;  // entropy change allowed when the spacing doubles
};

/// Orders within this distance of 1 are evaluated through the Shannon integral
/// plus a first-order correction.
inline constexpr double kShannonBridge = 1e-4;

struct EntropyValue {
  double order = 1.0;  // 1 marks the Shannon entropy
  double nats = 0.0;
  int dimension = 1;
  double richardson_delta = 0.0;  // |h at spacing h - h at spacing 2h|
  bool resolution_warning = false;

  bool shannon() const noexcept { return order == 1.0; }
};

/// Window, spacing and breakpoints for integrands shaped like f^p.
/// Analytic densities use the escort's default window at `grid_n` intervals;
/// grids use their own nodes.
struct IntegrationPlan {
  Interval window;
  Interval support;
  std::vector<double> breaks;
  double h;
  bool analytic;
};

IntegrationPlan plan_for(const Density1D& d, double p, const NumericsConfig& cfg = {});

struct PlannedIntegral {
  double value;   // at spacing h (over the doubled window for analytic plans)
  double coarse;  // same window at spacing 2h
};

/// Analytic plans run the window-doubling integrability check.
PlannedIntegral integrate_planned(const IntegrationPlan& plan, const quad::Integrand& g,
                                  double abs_floor = 0.0);

/// log of the integral of f^p for any p > 0 (0 at p = 1).
double log_power_integral(const Density1D& d, double p, const NumericsConfig& cfg = {});

/// h_p in nats. Throws NonIntegrableError when f^p is not integrable.
EntropyValue renyi_entropy(const Density1D& d, double p, const NumericsConfig& cfg = {});
/// Sum over independent coordinates.
EntropyValue renyi_entropy(const ProductDensity& d, double p, const NumericsConfig& cfg = {});

EntropyValue shannon_entropy(const Density1D& d, const NumericsConfig& cfg = {});

/// (n/2) log(2 pi sigma2) + (n/2) p' log(p)/p; the Shannon value at p = 1.
EntropyValue normal_entropy_closed_form(double sigma2, int n, double p);

/// exp(2 h / n).
double entropy_power(const EntropyValue& h);
double entropy_power(const Density1D& d, double r, int n = 1, const NumericsConfig& cfg = {});

/// D(f || g) in nats; +infinity when f puts more than 1e-9 mass where g = 0.
double kl_divergence(const Density1D& f, const Density1D& g, const NumericsConfig& cfg = {});

struct DerivativeIdentity {
  double finite_difference;  // central difference of p -> h_p
  double divergence_form;    // -D(f_p || f) / (1 - p)^2
  double gap;                // |finite_difference - divergence_form|
};

DerivativeIdentity derivative_identity_gap(const Density1D& d, double p, double step = 1e-4,
                                           const NumericsConfig& cfg = {});

/// h_p - h_q >= -1e-8 for p < q.
EpiReport monotonicity_check(const Density1D& d, double p, double q, const NumericsConfig& cfg = {});

struct Varentropy {
  double value;        // Var log f(X_p), X_p drawn from the escort of order p
  double bound;        // n / p^2
  bool log_concave;    // false: the bound is not asserted for this input
  bool within_bound;   // value <= bound + 1e-8
};

Varentropy varentropy(const Density1D& d, double p, const NumericsConfig& cfg = {});
Varentropy varentropy(const ProductDensity& d, double p, const NumericsConfig& cfg = {});

struct ConcavityScan {
  std::vector<double> orders;
  std::vector<double> values;  // n log p + (1 - p) h_p
  double worst_second_difference;
  bool concave;
};

/// Second differences of p -> n log p + (1 - p) h_p over `orders` (sorted,
/// may include 1). Non-uniform spacing uses the chord form scaled to match
/// the plain second difference on uniform grids. Throws PreconditionError for
/// densities that are not log-concave.
ConcavityScan concavity_scan(const Density1D& d, std::span<const double> orders, double tol = 1e-6,
                             const NumericsConfig& cfg = {});

/// h_q + n log(q)/(1-q) >= h_p + n log(p)/(1-p) for p < q, tolerance 1e-8.
/// Throws PreconditionError for densities that are not log-concave.
EpiReport shifted_monotonicity_check(const Density1D& d, double p, double q, const NumericsConfig& cfg = {});

}  // namespace renyi
