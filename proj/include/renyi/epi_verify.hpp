#pragma once

// Both sides of the information inequality and of the Renyi entropy power
// inequalities, reported as EpiReport records.

#include <optional>
#include <span>
#include <vector>

#include "renyi/convolution.hpp"
#include "renyi/density.hpp"
#include "renyi/entropy.hpp"
#include "renyi/exponents.hpp"
#include "renyi/report.hpp"

namespace renyi {

struct VerifyConfig {
  NumericsConfig numerics;
  double entropy_tol = 1e-4;  // nats, for entropy-difference forms
  double power_rel_tol = 1e-6;  // relative, for entropy-power forms
  double info_tol = 1e-6;     // nats, for the information inequality
};

/// lhs = -p' log E[phi^{1/p'}(X)], rhs = h_p(X); equality at phi = escort(f, p).
/// When phi vanishes on part of the support of f and p' < 0 the expectation
/// is infinite and so is lhs.
EpiReport info_inequality_gap(const Density1D& f, const Density1D& phi, double p, const VerifyConfig& cfg = {});

/// lhs = h_r(sqrt(l) X + sqrt(1-l) Y) - l h_p(X) - (1-l) h_q(Y),
/// rhs = (n/2) r' (log(r)/r - log(p)/p - log(q)/q) with n = 1.
EpiReport dct_gap(const Density1D& fx, const Density1D& fy, const ExponentTriple& triple,
                  const VerifyConfig& cfg = {});

/// Coordinate-wise version for product densities of equal dimension n.
EpiReport dct_gap(const ProductDensity& fx, const ProductDensity& fy, const ExponentTriple& triple,
                  const VerifyConfig& cfg = {});

/// m-variable form with weights lambda_i = r'/r'_i.
EpiReport dct_gap_m(std::span<const Density1D> parts, const Exponent& r, std::span<const Exponent> orders,
                    const VerifyConfig& cfg = {});

/// (n/2) (log(c)/alpha + (1/alpha - 1) H(lambda)).
double charact_rhs(double c, double alpha, const WeightVector& w, int n = 1);

/// lhs = N_r^alpha(sum X_i) of the unscaled sum, rhs = c sum N_r^alpha(X_i),
/// passing when lhs >= rhs (1 - power_rel_tol). For r < 1 every part must be
/// log-concave, otherwise PreconditionError.
EpiReport epi_form_check(std::span<const Density1D> parts, const Exponent& r, double c, double alpha,
                         CheckKind form, const VerifyConfig& cfg = {});

/// Forward direction of the characterisation: at lambda_i = N_r^alpha(X_i) / sum_j N_r^alpha(X_j)
/// (or the supplied weights) evaluates the entropy form for Y_i = X_i / sqrt(lambda_i)
/// (lhs, rhs of the report) and the power form (aux_gap, relative to its rhs).
/// Passes when a nonnegative entropy-form gap comes with a power-form gap >= -1e-6.
EpiReport equivalence_probe(std::span<const Density1D> parts, const Exponent& r, double c, double alpha,
                                   std::optional<WeightVector> weights = std::nullopt, const VerifyConfig& cfg = {});

/// Entropy h_r of the density of sum a_i X_i, cached per (parts, coefficients, order floor, grid).
double sum_entropy(std::span<const Density1D> parts, std::span<const double> coefficients, double r,
                   const NumericsConfig& cfg);

}  // namespace renyi
