#include "renyi/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "renyi/errors.hpp"
#include "renyi/quadrature.hpp"

namespace renyi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

std::vector<double> TransportMap1D::slopes() const {
  const std::size_t n = x.size();
  std::vector<double> d(n);
  if (n < 2) return d;
  d[0] = (t[1] - t[0]) / (x[1] - x[0]);
  d[n - 1] = (t[n - 1] - t[n - 2]) / (x[n - 1] - x[n - 2]);
  for (std::size_t k = 1; k + 1 < n; ++k) d[k] = (t[k + 1] - t[k - 1]) / (x[k + 1] - x[k - 1]);
  return d;
}

bool TransportMap1D::strictly_increasing() const {
  for (std::size_t k = 1; k < t.size(); ++k) {
    if (!(t[k] > t[k - 1])) return false;
  }
  return true;
}

TransportMap1D monotone_transport(const Density1D& target, double sigma2, const TransportOptions& opts) {
  if (!(sigma2 > 0.0)) throw DomainError("source variance must be positive");
  if (opts.knots < 3) throw DomainError("transport needs at least three knots");
  if (target.family() == Density1D::Family::Grid && target.grid_data().has_interior_gap()) {
    throw NonDiffeomorphicTargetError("target has a zero-density gap inside its support");
  }
  const Density1D source = Density1D::normal(sigma2);
  const double half = opts.span_sigmas * std::sqrt(sigma2);
  const double step = 2.0 * half / static_cast<double>(opts.knots - 1);

  TransportMap1D map{sigma2, target, {}, {}};
  map.x.resize(opts.knots);
  map.t.resize(opts.knots);
  for (std::size_t k = 0; k < opts.knots; ++k) {
    const double xs = -half + step * static_cast<double>(k);
    map.x[k] = xs;
    // Work from the nearer tail so extreme knots keep their precision.
    map.t[k] = xs <= 0.0 ? target.quantile(source.cdf(xs)) : target.quantile_upper(source.sf(xs));
  }
  return map;
}

EpiReport pushforward_check(const TransportMap1D& map) {
  const std::string inputs = "pushforward;source_sigma2=" + format_number(map.source_sigma2) + ";" +
                             map.target.describe() + ";knots=" + std::to_string(map.x.size());
  const bool monotone = map.strictly_increasing();
  double dist = kInf;
  if (monotone) {
    const Density1D source = Density1D::normal(map.source_sigma2);
    const Interval w = map.target.default_window();
    const std::size_t n = 4096;
    dist = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      const double y = w.lo + w.width() * static_cast<double>(i) / static_cast<double>(n);
      double push;
      if (y <= map.t.front()) {
        push = source.cdf(map.x.front()) * (y < map.t.front() ? 0.0 : 1.0);
      } else if (y >= map.t.back()) {
        push = y > map.t.back() ? 1.0 : source.cdf(map.x.back());
      } else {
        const auto it = std::upper_bound(map.t.begin(), map.t.end(), y);
        const std::size_t k = static_cast<std::size_t>(it - map.t.begin()) - 1;
        const double frac = (y - map.t[k]) / (map.t[k + 1] - map.t[k]);
        const double xs = map.x[k] + frac * (map.x[k + 1] - map.x[k]);
        push = source.cdf(xs);
      }
      dist = std::max(dist, std::abs(push - map.target.cdf(y)));
    }
  }
  EpiReport rep = make_report(CheckKind::Pushforward, 1e-3, dist, 0.0, inputs);
  rep.pass = monotone && dist < 1e-3;
  if (!monotone) rep.notes.push_back("monotonicity violation: knots are not strictly increasing");
  return rep;
}

RotationPair normal_rotation_check(double lambda, double sigma2) {
  if (!(lambda > 0.0 && lambda < 1.0)) throw DomainError("lambda must lie in (0, 1)");
  if (!(sigma2 > 0.0)) throw DomainError("variance must be positive");
  const double a = std::sqrt(lambda);
  const double b = std::sqrt(1.0 - lambda);
  const Mat2 R{{{a, b}, {-b, a}}};
  const Mat2 Rinv{{{a, -b}, {b, a}}};  // X* = sqrt(l) X~ - sqrt(1-l) Y~

  auto mul = [](const Mat2& A, const Mat2& B) {
    Mat2 C{};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) C[i][j] = A[i][0] * B[0][j] + A[i][1] * B[1][j];
    return C;
  };
  auto transpose = [](const Mat2& A) { return Mat2{{{A[0][0], A[1][0]}, {A[0][1], A[1][1]}}}; };
  auto max_diff = [](const Mat2& A, const Mat2& B) {
    double m = 0.0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m = std::max(m, std::abs(A[i][j] - B[i][j]));
    return m;
  };
  const Mat2 I{{{1.0, 0.0}, {0.0, 1.0}}};

  RotationPair out{};
  out.lambda = lambda;
  out.covariance_before = Mat2{{{sigma2, 0.0}, {0.0, sigma2}}};
  out.covariance_after = mul(mul(R, out.covariance_before), transpose(R));
  out.covariance_error = max_diff(out.covariance_after, out.covariance_before);
  out.orthogonality_error = max_diff(mul(R, transpose(R)), I);
  out.inverse_error = max_diff(mul(Rinv, R), I);
  const double eps = 1e-14;
  out.pass = out.covariance_error <= eps * sigma2 * 4.0 && out.orthogonality_error <= eps && out.inverse_error <= eps;
  return out;
}

InvarianceGap invariance_gap(const Density1D& f, const Density1D& phi, double p, double sigma2,
                             const NumericsConfig& cfg, const TransportOptions& opts) {
  if (!(p > 0.0) || p == 1.0) throw DomainError("invariance needs p > 0, p != 1");
  const double pc = p / (p - 1.0);
  const double inv_pc = 1.0 / pc;

  // phi^{1/p'}, with 0^{negative} = +inf.
  auto phi_power = [&](double v) {
    if (v > 0.0) return std::pow(v, inv_pc);
    return inv_pc > 0.0 ? 0.0 : kInf;
  };

  // Original side: int f phi^{1/p'} / ||f||_p.
  IntegrationPlan plan = plan_for(f, p, cfg);
  plan.window = quad::hull(plan.window, f.default_window());
  for (double b : phi.breakpoints()) plan.breaks.push_back(b);
  auto original_integrand = [&](double x) {
    const double fx = f.pdf(x);
    if (fx == 0.0) return 0.0;
    return fx * phi_power(phi.pdf(x));
  };
  const double original_mean = integrate_planned(plan, original_integrand).value;
  const double norm_f = std::exp(log_power_integral(f, p, cfg) / p);

  // Transformed side. With f*_p = Normal(sigma2/p), the ratio reduces to
  // int (f*_p)^{1/p} (phi*)^{1/p'} over the source line.
  const Density1D fp = escort(f, p);
  const TransportMap1D T = monotone_transport(fp, sigma2 / p, opts);
  const std::vector<double> dT = T.slopes();
  const Density1D src_escort = Density1D::normal(sigma2 / p);
  std::vector<double> ys(T.x.size());
  for (std::size_t k = 0; k < T.x.size(); ++k) {
    const double phistar = phi.pdf(T.t[k]) * std::abs(dT[k]);
    const double w = std::exp(src_escort.log_pdf(T.x[k]) / p);
    ys[k] = (w == 0.0) ? 0.0 : w * phi_power(phistar);
  }
  const double transformed = quad::simpson(ys, T.spacing());

  InvarianceGap out{};
  out.transformed = transformed;
  out.original = original_mean / norm_f;
  out.gap = std::abs(out.transformed - out.original) / std::abs(out.original);
  return out;
}

}  // namespace renyi
