#include "renyi/optimizer.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "renyi/errors.hpp"

namespace renyi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTie = 1e-13;

void require_m(int m) {
  if (m < 2 || m > 4) throw DomainError("simplex searches support m in {2, 3, 4}");
}

// Visits every composition of `total` into m parts in lexicographic order.
void scan(int m, int total, std::vector<int>& counts, int pos, int left, const std::function<void()>& visit) {
  if (pos == m - 1) {
    counts[pos] = left;
    visit();
    return;
  }
  for (int k = 0; k <= left; ++k) {
    counts[pos] = k;
    scan(m, total, counts, pos + 1, left - k, visit);
  }
}

double golden_section(const std::function<double(double)>& g, double a, double b, int iterations, double& best_t) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double gc = g(c), gd = g(d);
  for (int i = 0; i < iterations; ++i) {
    if (gc <= gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - inv_phi * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + inv_phi * (b - a);
      gd = g(d);
    }
  }
  if (gc <= gd) {
    best_t = c;
    return gc;
  }
  best_t = d;
  return gd;
}

}  // namespace

std::string to_string(SearchMethod method) { return method == SearchMethod::GridScan ? "GridScan" : "LocalRefine"; }

SimplexSearchResult minimize_on_simplex(const SimplexObjective& objective, int m, const SimplexSearchOptions& opts) {
  if (m < 2) throw DomainError("simplex dimension must be at least 2");
  if (opts.resolution < 2) throw DomainError("resolution must be at least 2");
  const int N = opts.resolution;
  const double step = 1.0 / N;

  std::vector<int> counts(static_cast<std::size_t>(m));
  std::vector<double> point(static_cast<std::size_t>(m));
  std::vector<double> best(static_cast<std::size_t>(m));
  double best_value = kInf;
  scan(m, N, counts, 0, N, [&]() {
    for (int i = 0; i < m; ++i) point[static_cast<std::size_t>(i)] = counts[static_cast<std::size_t>(i)] * step;
    const double v = objective(point);
    const bool better = std::isinf(best_value) ? v < best_value : v < best_value - kTie * std::max(1.0, std::abs(best_value));
    if (better) {
      best_value = v;
      best = point;
    }
  });
  if (!std::isfinite(best_value)) throw DomainError("objective is not finite anywhere on the lattice");

  std::vector<double> x = best;
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (opts.snap_to_face && x[i] < step) {
      x[i] = 0.0;
    } else {
      free.push_back(i);
    }
  }
  const double mass = std::accumulate(x.begin(), x.end(), 0.0);
  for (double& v : x) v /= mass;

  double value = objective(x);
  bool improved = false;
  for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
    const double start = value;
    for (std::size_t a = 0; a < free.size(); ++a) {
      for (std::size_t b = a + 1; b < free.size(); ++b) {
        const std::size_t i = free[a], j = free[b];
        const double s = x[i] + x[j];
        std::vector<double> trial = x;
        auto g = [&](double t) {
          trial[i] = t;
          trial[j] = s - t;
          return objective(trial);
        };
        double t_best = x[i];
        const double v = golden_section(g, 0.0, s, opts.golden_iterations, t_best);
        if (v < value) {
          x[i] = t_best;
          x[j] = s - t_best;
          value = objective(x);
          improved = true;
        }
      }
    }
    if (!(value < start - 1e-16 * std::max(1.0, std::abs(start)))) break;
  }

  const double total = std::accumulate(x.begin(), x.end(), 0.0);
  for (double& v : x) v /= total;
  WeightVector w(x);
  return SimplexSearchResult{w, objective(w.values()), improved ? SearchMethod::LocalRefine : SearchMethod::GridScan,
                             step};
}

SimplexSearchResult minimize_gap(const Exponent& r, int m) {
  require_m(m);
  auto A = [&](std::span<const double> l) {
    return simplex_gap(r, WeightVector(std::vector<double>(l.begin(), l.end())));
  };
  return minimize_on_simplex(A, m);
}

SimplexSearchResult minimize_gap_over_entropy(const Exponent& r, int m) {
  require_m(m);
  auto ratio = [&](std::span<const double> l) {
    const WeightVector w(std::vector<double>(l.begin(), l.end()));
    const double H = discrete_entropy(w);
    if (!(H > 1e-300)) return kInf;  // vertices
    return simplex_gap(r, w) / H;
  };
  SimplexSearchOptions opts;
  opts.snap_to_face = true;
  return minimize_on_simplex(ratio, m, opts);
}

SimplexSearchResult minimize_mixed(const Exponent& r, int m, double alpha) {
  require_m(m);
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in (0, 1]");
  auto mixed = [&](std::span<const double> l) {
    const WeightVector w(std::vector<double>(l.begin(), l.end()));
    return alpha * simplex_gap(r, w) - (1.0 - alpha) * discrete_entropy(w);
  };
  return minimize_on_simplex(mixed, m);
}

}  // namespace renyi
