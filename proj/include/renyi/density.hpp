#pragma once

// One-dimensional probability densities: four analytic families and a
// tabulated kind on a uniform grid (piecewise-linear between nodes).

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace renyi {

struct Interval {
  double lo;
  double hi;

  double width() const noexcept { return hi - lo; }
  double centre() const noexcept { return 0.5 * (lo + hi); }
};

/// Tabulated density: node k sits at x0 + k*dx and carries value fs[k].
/// The values are normalised so the trapezoidal mass is exactly 1.
class GridData {
 public:
  GridData(double x0, double dx, std::vector<double> fs);

  double x0() const noexcept { return x0_; }
  double dx() const noexcept { return dx_; }
  double x_end() const noexcept { return x0_ + dx_ * static_cast<double>(fs_.size() - 1); }
  double node(std::size_t k) const noexcept { return x0_ + dx_ * static_cast<double>(k); }
  std::span<const double> values() const noexcept { return fs_; }
  std::size_t size() const noexcept { return fs_.size(); }

  double pdf(double x) const;
  double cdf(double x) const;
  double sf(double x) const;
  double quantile(double u) const;
  double quantile_upper(double s) const;

  /// True when a run of zero values separates two regions of positive mass.
  bool has_interior_gap() const;

 private:
  double x0_;
  double dx_;
  std::vector<double> fs_;
  std::vector<double> left_mass_;   // mass of [x0, x_k]
  std::vector<double> right_mass_;  // mass of [x_k, x_end], summed from the right for tail accuracy
};

class Density1D {
 public:
  enum class Family { Normal, Uniform, Exponential, Laplace, Grid };

  struct Normal {
    double sigma2;
  };
  struct Uniform {
    double a;
    double b;
  };
  /// rate * exp(-rate x) on [0, inf); `reflected` mirrors it onto (-inf, 0].
  struct Exponential {
    double rate;
    bool reflected;
  };
  struct Laplace {
    double scale;
  };
  using Grid = std::shared_ptr<const GridData>;
  using Kind = std::variant<Normal, Uniform, Exponential, Laplace, Grid>;

  static Density1D normal(double sigma2);
  static Density1D uniform(double a, double b);
  static Density1D exponential(double rate, bool reflected = false);
  static Density1D laplace(double scale);
  /// Nodes spread evenly over [xs_min, xs_max]; `fs` is rescaled to unit mass.
  static Density1D grid(double xs_min, double xs_max, std::vector<double> fs);

  Family family() const noexcept { return static_cast<Family>(kind_.index()); }
  const Kind& kind() const noexcept { return kind_; }
  bool is_analytic() const noexcept { return family() != Family::Grid; }
  const GridData& grid_data() const;

  double pdf(double x) const;
  /// log f(x); -infinity outside the support.
  double log_pdf(double x) const;
  double cdf(double x) const;
  double sf(double x) const;
  /// Throws DomainError unless 0 < u < 1.
  double quantile(double u) const;
  /// The point with sf(x) = s, accurate in the upper tail. 0 < s < 1.
  double quantile_upper(double s) const;

  Interval support() const;
  /// Finite support ends and interior kinks (Laplace at 0).
  std::vector<double> breakpoints() const;
  /// Quantile range [1e-9, 1 - 1e-9] padded by 10% of its width on each side,
  /// clipped to the support. Grid densities return their support.
  Interval default_window() const;

  double mean() const;
  double variance() const;

  /// Canonical text form, e.g. "normal(sigma2=1)". Used in report digests.
  std::string describe() const;

 private:
  explicit Density1D(Kind kind) : kind_(std::move(kind)) {}

  Kind kind_;
};

/// f(x) for the density; 0 outside the support.
inline double evaluate(const Density1D& d, double x) { return d.pdf(x); }

/// f^p / int f^p. Analytic families map to their own family; grids are
/// raised pointwise and renormalised. Throws NonIntegrableError when the
/// power integral does not settle under window doubling.
Density1D escort(const Density1D& d, double p);

/// Default window of the escort of order p, without normalising it. Grid
/// densities return their support.
Interval escort_window(const Density1D& d, double p);

/// Density of aX. Throws DomainError for a = 0.
Density1D scale(const Density1D& d, double a);

/// Analytic families are log-concave. Grids pass when every second difference
/// of log f over consecutive positive nodes is at most 1e-8 and the positive
/// nodes form one contiguous run.
bool is_log_concave(const Density1D& d);

/// Tabulates `d` at `n + 1` nodes over its default window.
Density1D tabulate(const Density1D& d, std::size_t n = 16384);

/// A density of independent coordinates; entropies add across them.
struct ProductDensity {
  std::vector<Density1D> coords;

  std::size_t dimension() const noexcept { return coords.size(); }
};

}  // namespace renyi
