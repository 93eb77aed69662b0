#include "renyi/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "renyi/errors.hpp"

namespace renyi::quad {

namespace {

// Appends Simpson (or Simpson + 3/8) weights for `n` intervals of width h
// starting at offset `first` in `w`.
void add_weights(std::vector<double>& w, std::size_t first, std::size_t n, double h) {
  if (n == 1) {
    w[first] += 0.5 * h;
    w[first + 1] += 0.5 * h;
    return;
  }
  std::size_t simpson_n = (n % 2 == 0) ? n : n - 3;
  for (std::size_t k = 0; k + 2 <= simpson_n; k += 2) {
    w[first + k] += h / 3.0;
    w[first + k + 1] += 4.0 * h / 3.0;
    w[first + k + 2] += h / 3.0;
  }
  if (simpson_n != n) {
    const std::size_t s = first + simpson_n;
    w[s] += 3.0 * h / 8.0;
    w[s + 1] += 9.0 * h / 8.0;
    w[s + 2] += 9.0 * h / 8.0;
    w[s + 3] += 3.0 * h / 8.0;
  }
}

}  // namespace

double simpson(std::span<const double> ys, double h) {
  if (ys.size() < 2) return 0.0;
  std::vector<double> w(ys.size(), 0.0);
  add_weights(w, 0, ys.size() - 1, h);
  double s = 0.0;
  for (std::size_t k = 0; k < ys.size(); ++k) s += w[k] * ys[k];
  return s;
}

Rule make_rule(Interval window, std::span<const double> breaks, double h) {
  Rule rule;
  if (!(window.hi > window.lo) || !(h > 0.0)) return rule;

  std::vector<double> cuts{window.lo};
  for (double b : breaks) {
    if (b > window.lo && b < window.hi) cuts.push_back(b);
  }
  std::sort(cuts.begin() + 1, cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cuts.push_back(window.hi);

  for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
    const double a = cuts[s];
    const double b = cuts[s + 1];
    const double len = b - a;
    const double ratio = len / h;
    // Snap to the nearest integer when the spacing tiles the piece exactly.
    std::size_t n = std::abs(ratio - std::round(ratio)) < 1e-6 ? static_cast<std::size_t>(std::round(ratio))
                                                                : static_cast<std::size_t>(std::ceil(ratio));
    n = std::max<std::size_t>(n, 2);
    const double step = len / static_cast<double>(n);
    const std::size_t first = rule.x.size();
    rule.x.resize(first + n + 1);
    rule.w.resize(first + n + 1, 0.0);
    for (std::size_t k = 0; k <= n; ++k) rule.x[first + k] = a + step * static_cast<double>(k);
    rule.x[first] = std::nextafter(a, b);
    rule.x[first + n] = std::nextafter(b, a);
    add_weights(rule.w, first, n, step);
  }
  return rule;
}

double integrate(const Rule& rule, const Integrand& g) {
  double s = 0.0;
  for (std::size_t k = 0; k < rule.x.size(); ++k) {
    if (rule.w[k] == 0.0) continue;
    s += rule.w[k] * g(rule.x[k]);
  }
  return s;
}

Interval hull(Interval a, Interval b) { return Interval{std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }

CheckedIntegral integrate_tail_checked(const Integrand& g, Interval window, Interval support,
                                       std::span<const double> breaks, double h, double rel_tol,
                                       double abs_floor) {
  const double c = window.centre();
  const double half = window.width();
  Interval wide{std::max(support.lo, c - half), std::min(support.hi, c + half)};
  // Windows already pinned to the support on both sides cannot grow.
  wide = hull(wide, window);

  CheckedIntegral out{};
  out.base = integrate(make_rule(window, breaks, h), g);
  out.value = integrate(make_rule(wide, breaks, h), g);
  out.coarse = integrate(make_rule(wide, breaks, 2.0 * h), g);

  const bool finite = std::isfinite(out.base) && std::isfinite(out.value);
  const double scale = std::max({std::abs(out.value), abs_floor, std::numeric_limits<double>::min()});
  if (!finite || std::abs(out.value - out.base) > rel_tol * scale) {
    std::ostringstream msg;
    msg << "integral does not settle under window doubling: " << out.base << " on [" << window.lo << ", "
        << window.hi << "] vs " << out.value << " on [" << wide.lo << ", " << wide.hi << "]";
    throw NonIntegrableError(msg.str());
  }
  return out;
}

}  // namespace renyi::quad
