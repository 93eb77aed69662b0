#include "renyi/density.hpp"

#include <algorithm>
#include <boost/math/special_functions/erf.hpp>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <limits>
#include <numbers>

#include "renyi/errors.hpp"
#include "renyi/quadrature.hpp"

namespace renyi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTailLevel = 1e-9;
constexpr double kWindowPad = 0.1;
// Smallest value that still carries full relative precision in log-concavity scans.
constexpr double kScanFloor = 1e-290;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void require_probability(double u) {
  if (!(u > 0.0 && u < 1.0)) throw DomainError("probability must lie in (0, 1), got " + fmt(u));
}

double normal_cdf(double x, double sigma2) { return 0.5 * std::erfc(-x / std::sqrt(2.0 * sigma2)); }
double normal_sf(double x, double sigma2) { return 0.5 * std::erfc(x / std::sqrt(2.0 * sigma2)); }

// Unreflected exponential helpers.
double exp_cdf(double y, double rate) { return y <= 0.0 ? 0.0 : -std::expm1(-rate * y); }
double exp_sf(double y, double rate) { return y <= 0.0 ? 1.0 : std::exp(-rate * y); }

std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t h = 1469598103934665603ULL) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

Density1D closed_form_escort(const Density1D& d, double p) {
  return std::visit(overloaded{
                        [&](const Density1D::Normal& k) { return Density1D::normal(k.sigma2 / p); },
                        [&](const Density1D::Uniform& k) { return Density1D::uniform(k.a, k.b); },
                        [&](const Density1D::Exponential& k) { return Density1D::exponential(k.rate * p, k.reflected); },
                        [&](const Density1D::Laplace& k) { return Density1D::laplace(k.scale / p); },
                        [&](const Density1D::Grid&) -> Density1D { throw Error("closed-form escort of a grid"); },
                    },
                    d.kind());
}

}  // namespace

// ---------------------------------------------------------------------------
// GridData

GridData::GridData(double x0, double dx, std::vector<double> fs) : x0_(x0), dx_(dx), fs_(std::move(fs)) {
  if (fs_.size() < 2) throw DomainError("grid density needs at least two nodes");
  if (!(dx_ > 0.0) || !std::isfinite(dx_) || !std::isfinite(x0_)) {
    throw DomainError("grid spacing must be positive and finite");
  }
  double mass = 0.0;
  for (std::size_t k = 0; k < fs_.size(); ++k) {
    if (!(fs_[k] >= 0.0) || !std::isfinite(fs_[k])) throw DomainError("grid values must be finite and nonnegative");
    if (k + 1 < fs_.size()) mass += 0.5 * dx_ * (fs_[k] + fs_[k + 1]);
  }
  if (!(mass > 0.0)) throw DomainError("grid density has zero mass");
  for (double& f : fs_) f /= mass;

  const std::size_t n = fs_.size();
  left_mass_.assign(n, 0.0);
  right_mass_.assign(n, 0.0);
  for (std::size_t k = 1; k < n; ++k) left_mass_[k] = left_mass_[k - 1] + 0.5 * dx_ * (fs_[k - 1] + fs_[k]);
  for (std::size_t k = n - 1; k-- > 0;) right_mass_[k] = right_mass_[k + 1] + 0.5 * dx_ * (fs_[k] + fs_[k + 1]);
}

double GridData::pdf(double x) const {
  if (!(x >= x0_ && x <= x_end())) return 0.0;
  const double t = (x - x0_) / dx_;
  const std::size_t k = std::min(static_cast<std::size_t>(t), fs_.size() - 2);
  const double frac = std::clamp(t - static_cast<double>(k), 0.0, 1.0);
  return fs_[k] + frac * (fs_[k + 1] - fs_[k]);
}

double GridData::cdf(double x) const {
  if (x <= x0_) return 0.0;
  if (x >= x_end()) return 1.0;
  const std::size_t k = std::min(static_cast<std::size_t>((x - x0_) / dx_), fs_.size() - 2);
  const double tau = std::clamp(x - node(k), 0.0, dx_);
  const double v = left_mass_[k] + fs_[k] * tau + (fs_[k + 1] - fs_[k]) * tau * tau / (2.0 * dx_);
  return std::clamp(v, 0.0, 1.0);
}

double GridData::sf(double x) const {
  if (x <= x0_) return 1.0;
  if (x >= x_end()) return 0.0;
  const std::size_t k = std::min(static_cast<std::size_t>((x - x0_) / dx_), fs_.size() - 2);
  const double tau = std::clamp(x - node(k), 0.0, dx_);
  const double v = right_mass_[k + 1] + fs_[k] * (dx_ - tau) + (fs_[k + 1] - fs_[k]) * (dx_ * dx_ - tau * tau) / (2.0 * dx_);
  return std::clamp(v, 0.0, 1.0);
}

namespace {

// Solves a t^2 + b t = c for the root in [0, dx] with the cancellation-free form.
double cell_root(double f0, double f1, double dx, double c) {
  const double a = (f1 - f0) / (2.0 * dx);
  const double b = f0;
  const double disc = std::max(0.0, b * b + 4.0 * a * c);
  const double denom = b + std::sqrt(disc);
  if (!(denom > 0.0)) return 0.0;
  return std::clamp(2.0 * c / denom, 0.0, dx);
}

}  // namespace

double GridData::quantile(double u) const {
  require_probability(u);
  auto it = std::upper_bound(left_mass_.begin(), left_mass_.end(), u);
  std::size_t k = it == left_mass_.begin() ? 0 : static_cast<std::size_t>(it - left_mass_.begin()) - 1;
  k = std::min(k, fs_.size() - 2);
  return node(k) + cell_root(fs_[k], fs_[k + 1], dx_, u - left_mass_[k]);
}

double GridData::quantile_upper(double s) const {
  require_probability(s);
  // right_mass_ is nonincreasing; j is the first node whose right mass is <= s.
  auto it = std::partition_point(right_mass_.begin(), right_mass_.end(), [s](double m) { return m > s; });
  std::size_t j = static_cast<std::size_t>(it - right_mass_.begin());
  std::size_t k = j == 0 ? 0 : j - 1;
  k = std::min(k, fs_.size() - 2);
  const double cell = 0.5 * dx_ * (fs_[k] + fs_[k + 1]);
  const double inside = s - right_mass_[k + 1];  // mass needed within [x, x_{k+1}]
  return node(k) + cell_root(fs_[k], fs_[k + 1], dx_, std::max(0.0, cell - inside));
}

bool GridData::has_interior_gap() const {
  std::size_t first = fs_.size(), last = 0;
  for (std::size_t k = 0; k < fs_.size(); ++k) {
    if (fs_[k] > 0.0) {
      first = std::min(first, k);
      last = k;
    }
  }
  for (std::size_t k = first; k < last; ++k) {
    if (fs_[k] == 0.0) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Density1D

Density1D Density1D::normal(double sigma2) {
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) throw DomainError("normal variance must be positive");
  return Density1D(Normal{sigma2});
}

Density1D Density1D::uniform(double a, double b) {
  if (!(b > a) || !std::isfinite(a) || !std::isfinite(b)) throw DomainError("uniform needs a < b");
  return Density1D(Uniform{a, b});
}

Density1D Density1D::exponential(double rate, bool reflected) {
  if (!(rate > 0.0) || !std::isfinite(rate)) throw DomainError("exponential rate must be positive");
  return Density1D(Exponential{rate, reflected});
}

Density1D Density1D::laplace(double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) throw DomainError("laplace scale must be positive");
  return Density1D(Laplace{scale});
}

Density1D Density1D::grid(double xs_min, double xs_max, std::vector<double> fs) {
  if (fs.size() < 2) throw DomainError("grid density needs at least two nodes");
  if (!(xs_max > xs_min)) throw DomainError("grid needs xs_min < xs_max");
  const double dx = (xs_max - xs_min) / static_cast<double>(fs.size() - 1);
  return Density1D(std::make_shared<const GridData>(xs_min, dx, std::move(fs)));
}

const GridData& Density1D::grid_data() const {
  if (family() != Family::Grid) throw Error("density is not a grid");
  return *std::get<Grid>(kind_);
}

double Density1D::pdf(double x) const {
  return std::visit(overloaded{
                        [x](const Normal& k) {
                          return std::exp(-x * x / (2.0 * k.sigma2)) / std::sqrt(2.0 * std::numbers::pi * k.sigma2);
                        },
                        [x](const Uniform& k) { return (x >= k.a && x <= k.b) ? 1.0 / (k.b - k.a) : 0.0; },
                        [x](const Exponential& k) {
                          const double y = k.reflected ? -x : x;
                          return y >= 0.0 ? k.rate * std::exp(-k.rate * y) : 0.0;
                        },
                        [x](const Laplace& k) { return std::exp(-std::abs(x) / k.scale) / (2.0 * k.scale); },
                        [x](const Grid& g) { return g->pdf(x); },
                    },
                    kind_);
}

double Density1D::log_pdf(double x) const {
  return std::visit(overloaded{
                        [x](const Normal& k) {
                          return -x * x / (2.0 * k.sigma2) - 0.5 * std::log(2.0 * std::numbers::pi * k.sigma2);
                        },
                        [x](const Uniform& k) { return (x >= k.a && x <= k.b) ? -std::log(k.b - k.a) : -kInf; },
                        [x](const Exponential& k) {
                          const double y = k.reflected ? -x : x;
                          return y >= 0.0 ? std::log(k.rate) - k.rate * y : -kInf;
                        },
                        [x](const Laplace& k) { return -std::abs(x) / k.scale - std::log(2.0 * k.scale); },
                        [x](const Grid& g) {
                          const double f = g->pdf(x);
                          return f > 0.0 ? std::log(f) : -kInf;
                        },
                    },
                    kind_);
}

double Density1D::cdf(double x) const {
  return std::visit(overloaded{
                        [x](const Normal& k) { return normal_cdf(x, k.sigma2); },
                        [x](const Uniform& k) { return std::clamp((x - k.a) / (k.b - k.a), 0.0, 1.0); },
                        [x](const Exponential& k) { return k.reflected ? exp_sf(-x, k.rate) : exp_cdf(x, k.rate); },
                        [x](const Laplace& k) {
                          return x < 0.0 ? 0.5 * std::exp(x / k.scale) : 1.0 - 0.5 * std::exp(-x / k.scale);
                        },
                        [x](const Grid& g) { return g->cdf(x); },
                    },
                    kind_);
}

double Density1D::sf(double x) const {
  return std::visit(overloaded{
                        [x](const Normal& k) { return normal_sf(x, k.sigma2); },
                        [x](const Uniform& k) { return std::clamp((k.b - x) / (k.b - k.a), 0.0, 1.0); },
                        [x](const Exponential& k) { return k.reflected ? exp_cdf(-x, k.rate) : exp_sf(x, k.rate); },
                        [x](const Laplace& k) {
                          return x > 0.0 ? 0.5 * std::exp(-x / k.scale) : 1.0 - 0.5 * std::exp(x / k.scale);
                        },
                        [x](const Grid& g) { return g->sf(x); },
                    },
                    kind_);
}

double Density1D::quantile(double u) const {
  require_probability(u);
  return std::visit(overloaded{
                        [u](const Normal& k) {
                          return -std::sqrt(2.0 * k.sigma2) * boost::math::erfc_inv(2.0 * u);
                        },
                        [u](const Uniform& k) { return k.a + (k.b - k.a) * u; },
                        [u](const Exponential& k) {
                          return k.reflected ? std::log(u) / k.rate : -std::log1p(-u) / k.rate;
                        },
                        [u](const Laplace& k) {
                          return u < 0.5 ? k.scale * std::log(2.0 * u) : -k.scale * std::log(2.0 * (1.0 - u));
                        },
                        [u](const Grid& g) { return g->quantile(u); },
                    },
                    kind_);
}

double Density1D::quantile_upper(double s) const {
  require_probability(s);
  return std::visit(overloaded{
                        [s](const Normal& k) { return std::sqrt(2.0 * k.sigma2) * boost::math::erfc_inv(2.0 * s); },
                        [s](const Uniform& k) { return k.b - (k.b - k.a) * s; },
                        [s](const Exponential& k) {
                          return k.reflected ? std::log1p(-s) / k.rate : -std::log(s) / k.rate;
                        },
                        [s](const Laplace& k) {
                          return s < 0.5 ? -k.scale * std::log(2.0 * s) : k.scale * std::log(2.0 * (1.0 - s));
                        },
                        [s](const Grid& g) { return g->quantile_upper(s); },
                    },
                    kind_);
}

Interval Density1D::support() const {
  return std::visit(overloaded{
                        [](const Normal&) { return Interval{-kInf, kInf}; },
                        [](const Uniform& k) { return Interval{k.a, k.b}; },
                        [](const Exponential& k) { return k.reflected ? Interval{-kInf, 0.0} : Interval{0.0, kInf}; },
                        [](const Laplace&) { return Interval{-kInf, kInf}; },
                        [](const Grid& g) { return Interval{g->x0(), g->x_end()}; },
                    },
                    kind_);
}

std::vector<double> Density1D::breakpoints() const {
  switch (family()) {
    case Family::Normal: return {};
    case Family::Laplace: return {0.0};
    default: {
      const Interval s = support();
      std::vector<double> out;
      if (std::isfinite(s.lo)) out.push_back(s.lo);
      if (std::isfinite(s.hi)) out.push_back(s.hi);
      return out;
    }
  }
}

Interval Density1D::default_window() const {
  const Interval s = support();
  if (family() == Family::Grid) return s;
  const double lo = quantile(kTailLevel);
  const double hi = quantile_upper(kTailLevel);
  const double pad = kWindowPad * (hi - lo);
  return Interval{std::max(s.lo, lo - pad), std::min(s.hi, hi + pad)};
}

double Density1D::mean() const {
  return std::visit(overloaded{
                        [](const Normal&) { return 0.0; },
                        [](const Uniform& k) { return 0.5 * (k.a + k.b); },
                        [](const Exponential& k) { return (k.reflected ? -1.0 : 1.0) / k.rate; },
                        [](const Laplace&) { return 0.0; },
                        [](const Grid& g) {
                          // Exact first moment of the piecewise-linear interpolant.
                          const auto f = g->values();
                          const double h = g->dx();
                          double m = 0.0;
                          for (std::size_t k = 0; k + 1 < f.size(); ++k) {
                            m += h * (g->node(k) * 0.5 * (f[k] + f[k + 1]) + h * (f[k] + 2.0 * f[k + 1]) / 6.0);
                          }
                          return m;
                        },
                    },
                    kind_);
}

double Density1D::variance() const {
  return std::visit(overloaded{
                        [](const Normal& k) { return k.sigma2; },
                        [](const Uniform& k) { return (k.b - k.a) * (k.b - k.a) / 12.0; },
                        [](const Exponential& k) { return 1.0 / (k.rate * k.rate); },
                        [](const Laplace& k) { return 2.0 * k.scale * k.scale; },
                        [this](const Grid& g) {
                          const auto f = g->values();
                          const double h = g->dx();
                          const double c = mean();
                          double v = 0.0;
                          for (std::size_t k = 0; k + 1 < f.size(); ++k) {
                            const double xk = g->node(k) - c;
                            v += xk * xk * h * 0.5 * (f[k] + f[k + 1]) + 2.0 * xk * h * h * (f[k] + 2.0 * f[k + 1]) / 6.0 +
                                 h * h * h * (f[k] + 3.0 * f[k + 1]) / 12.0;
                          }
                          return v;
                        },
                    },
                    kind_);
}

std::string Density1D::describe() const {
  return std::visit(overloaded{
                        [](const Normal& k) { return "normal(sigma2=" + fmt(k.sigma2) + ")"; },
                        [](const Uniform& k) { return "uniform(a=" + fmt(k.a) + ",b=" + fmt(k.b) + ")"; },
                        [](const Exponential& k) {
                          return std::string(k.reflected ? "reflected_exponential" : "exponential") + "(rate=" + fmt(k.rate) + ")";
                        },
                        [](const Laplace& k) { return "laplace(scale=" + fmt(k.scale) + ")"; },
                        [](const Grid& g) {
                          const auto v = g->values();
                          char hash[20];
                          std::snprintf(hash, sizeof hash, "%016llx",
                                        static_cast<unsigned long long>(fnv1a(v.data(), v.size() * sizeof(double))));
                          return "grid(xs_min=" + fmt(g->x0()) + ",xs_max=" + fmt(g->x_end()) +
                                 ",n=" + std::to_string(v.size()) + ",hash=" + hash + ")";
                        },
                    },
                    kind_);
}

// ---------------------------------------------------------------------------
// Free operations

Density1D escort(const Density1D& d, double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("escort exponent must be positive");
  if (p == 1.0) return d;
  if (d.is_analytic()) {
    const Density1D shape = closed_form_escort(d, p);
    // The closed form presumes int f^p < inf; confirm it numerically.
    const Interval window = shape.default_window();
    const auto breaks = d.breakpoints();
    quad::integrate_tail_checked([&](double x) { return std::exp(p * d.log_pdf(x)); }, window, d.support(), breaks,
                                 window.width() / 16384.0);
    return shape;
  }
  const GridData& g = d.grid_data();
  std::vector<double> fs(g.values().begin(), g.values().end());
  for (double& f : fs) f = std::pow(f, p);
  return Density1D::grid(g.x0(), g.x_end(), std::move(fs));
}

Interval escort_window(const Density1D& d, double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("escort exponent must be positive");
  if (!d.is_analytic() || p == 1.0) return d.default_window();
  return closed_form_escort(d, p).default_window();
}

Density1D scale(const Density1D& d, double a) {
  if (a == 0.0 || !std::isfinite(a)) throw DomainError("scale factor must be nonzero and finite");
  const double s = std::abs(a);
  return std::visit(overloaded{
                        [&](const Density1D::Normal& k) { return Density1D::normal(k.sigma2 * a * a); },
                        [&](const Density1D::Uniform& k) {
                          return Density1D::uniform(std::min(a * k.a, a * k.b), std::max(a * k.a, a * k.b));
                        },
                        [&](const Density1D::Exponential& k) {
                          return Density1D::exponential(k.rate / s, k.reflected != (a < 0.0));
                        },
                        [&](const Density1D::Laplace& k) { return Density1D::laplace(k.scale * s); },
                        [&](const Density1D::Grid& g) {
                          std::vector<double> fs(g->values().begin(), g->values().end());
                          if (a < 0.0) std::reverse(fs.begin(), fs.end());
                          const double lo = a > 0.0 ? a * g->x0() : a * g->x_end();
                          const double hi = a > 0.0 ? a * g->x_end() : a * g->x0();
                          return Density1D::grid(lo, hi, std::move(fs));
                        },
                    },
                    d.kind());
}

bool is_log_concave(const Density1D& d) {
  if (d.is_analytic()) return true;
  const GridData& g = d.grid_data();
  const auto f = g.values();
  std::size_t first = f.size(), last = 0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k] >= kScanFloor) {
      first = std::min(first, k);
      last = k;
    }
  }
  if (first == f.size()) return false;
  for (std::size_t k = first; k <= last; ++k) {
    if (f[k] < kScanFloor) return false;
  }
  for (std::size_t k = first + 1; k < last; ++k) {
    const double second = std::log(f[k + 1]) - 2.0 * std::log(f[k]) + std::log(f[k - 1]);
    if (second > 1e-8) return false;
  }
  return true;
}

Density1D tabulate(const Density1D& d, std::size_t n) {
  if (n < 2) throw DomainError("tabulation needs at least two intervals");
  const Interval w = d.default_window();
  std::vector<double> fs(n + 1);
  const double h = w.width() / static_cast<double>(n);
  for (std::size_t k = 0; k <= n; ++k) fs[k] = d.pdf(w.lo + h * static_cast<double>(k));
  return Density1D::grid(w.lo, w.hi, std::move(fs));
}

}  // namespace renyi
