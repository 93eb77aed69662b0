#include "renyi/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "renyi/errors.hpp"
#include "renyi/quadrature.hpp"

namespace renyi {

namespace {

struct Masses {
  long first;  // masses[k] sits at offset + (first + k) h
  double offset;
  std::vector<double> masses;
};

// Mass of [a, b], taken from whichever tail keeps the difference small.
double interval_mass(const Density1D& d, double a, double b, double median) {
  if (a >= median) return std::max(0.0, d.sf(a) - d.sf(b));
  return std::max(0.0, d.cdf(b) - d.cdf(a));
}

// Nodes sit at offset + k h with offset in [0, h). A finite support end is
// placed on a cell boundary so a jump there is not split between two cells.
double lattice_offset(const Density1D& d, double h) {
  const Interval s = d.support();
  double edge = 0.5 * h;
  if (std::isfinite(s.lo)) {
    edge = s.lo;
  } else if (std::isfinite(s.hi)) {
    edge = s.hi;
  }
  const double node = edge + 0.5 * h;
  return node - std::floor(node / h) * h;
}

Masses cell_masses(const Density1D& d, Interval window, double h) {
  const double offset = lattice_offset(d, h);
  const long lo = static_cast<long>(std::floor((window.lo - offset) / h + 0.5));
  const long hi = static_cast<long>(std::ceil((window.hi - offset) / h - 0.5));
  const double median = d.quantile(0.5);
  Masses out{lo, offset, {}};
  out.masses.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (long k = lo; k <= hi; ++k) {
    const double a = offset + (static_cast<double>(k) - 0.5) * h;
    const double b = offset + (static_cast<double>(k) + 0.5) * h;
    out.masses.push_back(interval_mass(d, a, b, median));
  }
  // Drop empty cells at both ends.
  std::size_t s = 0, e = out.masses.size();
  while (s < e && out.masses[s] == 0.0) ++s;
  while (e > s && out.masses[e - 1] == 0.0) --e;
  if (s == e) throw GridCoverageError("a part has no mass on the lattice");
  out.masses = std::vector<double>(out.masses.begin() + static_cast<long>(s), out.masses.begin() + static_cast<long>(e));
  out.first += static_cast<long>(s);
  return out;
}

Interval part_window(const Density1D& d, double min_order) {
  Interval w = d.default_window();
  if (min_order < 1.0) w = quad::hull(w, escort_window(d, min_order));
  return w;
}

}  // namespace

std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty()) return {};
  const std::vector<double>& x = a.size() >= b.size() ? a : b;
  const std::vector<double>& y = a.size() >= b.size() ? b : a;
  std::vector<double> out(x.size() + y.size() - 1, 0.0);
  for (std::size_t j = 0; j < y.size(); ++j) {
    const double yj = y[j];
    if (yj == 0.0) continue;
    double* o = out.data() + j;
    const double* xs = x.data();
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) o[i] += yj * xs[i];
  }
  return out;
}

SumDensity scaled_sum_density(const SumSpec& spec, const ConvolutionOptions& opts) {
  if (spec.parts.size() < 2) throw DomainError("a sum needs at least two parts");
  if (opts.grid_n < 16) throw DomainError("grid_n is too small");

  std::vector<Density1D> scaled;
  std::vector<Interval> windows;
  double widest = 0.0;
  for (const SumPart& part : spec.parts) {
    if (part.coefficient == 0.0 || !std::isfinite(part.coefficient)) {
      throw DomainError("sum coefficients must be nonzero and finite");
    }
    scaled.push_back(part.coefficient == 1.0 ? part.density : scale(part.density, part.coefficient));
    windows.push_back(part_window(scaled.back(), opts.min_order));
    widest = std::max(widest, windows.back().width());
  }
  const double h = widest / static_cast<double>(opts.grid_n);

  double captured = 1.0;
  Masses acc;
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    Masses m = cell_masses(scaled[i], windows[i], h);
    captured *= std::accumulate(m.masses.begin(), m.masses.end(), 0.0);
    if (i == 0) {
      acc = std::move(m);
    } else {
      acc.masses = convolve(acc.masses, m.masses);
      acc.first += m.first;
      acc.offset += m.offset;
    }
  }

  const double defect = 1.0 - captured;
  if (std::abs(defect) >= opts.max_mass_defect) {
    throw GridCoverageError("sum lattice captures mass " + std::to_string(captured) +
                            "; renormalisation would exceed the allowed correction");
  }

  // Pad with one empty cell on each side so the density closes at zero.
  std::vector<double> fs;
  fs.reserve(acc.masses.size() + 2);
  fs.push_back(0.0);
  for (double m : acc.masses) fs.push_back(m / h);
  fs.push_back(0.0);
  const double x0 = acc.offset + static_cast<double>(acc.first - 1) * h;
  const double x1 = acc.offset + static_cast<double>(acc.first + static_cast<long>(acc.masses.size())) * h;
  return SumDensity{Density1D::grid(x0, x1, std::move(fs)), defect};
}

}  // namespace renyi
