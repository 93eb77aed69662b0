#pragma once

// Fixed-grid composite Simpson quadrature over windows split at breakpoints.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "renyi/density.hpp"

namespace renyi::quad {

/// Composite Simpson over equally spaced samples. Odd interval counts close
/// with a three-eighths panel; two samples fall back to the trapezoid.
double simpson(std::span<const double> ys, double h);

/// Nodes and weights of a composite rule.
struct Rule {
  std::vector<double> x;
  std::vector<double> w;
};

/// Splits `window` at the breakpoints that fall strictly inside it and covers
/// each piece with a Simpson rule of spacing at most `h`. Piece endpoints are
/// sampled one ulp inward so jump discontinuities contribute one-sided limits.
Rule make_rule(Interval window, std::span<const double> breaks, double h);

using Integrand = std::function<double(double)>;

double integrate(const Rule& rule, const Integrand& g);

struct CheckedIntegral {
  double value;   // on the doubled window at spacing h
  double coarse;  // on the doubled window at spacing 2h
  double base;    // on the original window at spacing h
};

/// Integrates over `window` and over the window widened to twice its width
/// about its centre (clipped to `support`), both at spacing h. Throws
/// NonIntegrableError when the two disagree by more than
/// rel_tol * max(|value|, abs_floor).
CheckedIntegral integrate_tail_checked(const Integrand& g, Interval window, Interval support,
                                       std::span<const double> breaks, double h,
                                       double rel_tol = 1e-6, double abs_floor = 0.0);

/// Smallest interval containing both.
Interval hull(Interval a, Interval b);

}  // namespace renyi::quad
