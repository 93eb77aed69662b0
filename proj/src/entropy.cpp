#include "renyi/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "renyi/errors.hpp"

namespace renyi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_order(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("order must be positive and finite, got " + format_number(p));
}

// f(x)^p, with 0 outside the support.
double power_of(const Density1D& d, double x, double p) {
  const double lf = d.log_pdf(x);
  return lf == -kInf ? 0.0 : std::exp(p * lf);
}

EntropyValue shannon_with_bridge(const Density1D& d, double p, const NumericsConfig& cfg) {
  const IntegrationPlan plan = plan_for(d, 1.0, cfg);
  auto flogf = [&](double x) {
    const double lf = d.log_pdf(x);
    return lf == -kInf ? 0.0 : std::exp(lf) * lf;
  };
  const PlannedIntegral mu = integrate_planned(plan, flogf, 1e-12);
  const double h = -mu.value;
  // Variance of log f(X) gives the slope of p -> h_p at p = 1.
  auto spread = [&](double x) {
    const double lf = d.log_pdf(x);
    if (lf == -kInf) return 0.0;
    const double c = lf - mu.value;
    return std::exp(lf) * c * c;
  };
  const double var = (p == 1.0) ? 0.0 : integrate_planned(plan, spread, 1e-12).value;

  EntropyValue out;
  out.order = p;
  out.nats = h - 0.5 * (p - 1.0) * var;
  out.richardson_delta = std::abs(mu.value - mu.coarse);
  out.resolution_warning = out.richardson_delta > cfg.richardson_tol;
  return out;
}

std::string order_text(double p) { return format_number(p); }

}  // namespace

IntegrationPlan plan_for(const Density1D& d, double p, const NumericsConfig& cfg) {
  require_order(p);
  IntegrationPlan plan;
  plan.support = d.support();
  if (d.is_analytic()) {
    plan.window = escort_window(d, p);
    plan.breaks = d.breakpoints();
    plan.h = plan.window.width() / static_cast<double>(std::max<std::size_t>(cfg.grid_n, 2));
    plan.analytic = true;
  } else {
    const GridData& g = d.grid_data();
    plan.window = plan.support;
    plan.h = g.dx();
    plan.analytic = false;
  }
  return plan;
}

PlannedIntegral integrate_planned(const IntegrationPlan& plan, const quad::Integrand& g, double abs_floor) {
  if (plan.analytic) {
    const quad::CheckedIntegral c =
        quad::integrate_tail_checked(g, plan.window, plan.support, plan.breaks, plan.h, 1e-6, abs_floor);
    return PlannedIntegral{c.value, c.coarse};
  }
  const double fine = quad::integrate(quad::make_rule(plan.window, plan.breaks, plan.h), g);
  const double coarse = quad::integrate(quad::make_rule(plan.window, plan.breaks, 2.0 * plan.h), g);
  if (!std::isfinite(fine)) throw NonIntegrableError("integral over the grid is not finite");
  return PlannedIntegral{fine, coarse};
}

double log_power_integral(const Density1D& d, double p, const NumericsConfig& cfg) {
  require_order(p);
  if (p == 1.0) return 0.0;
  const IntegrationPlan plan = plan_for(d, p, cfg);
  const PlannedIntegral I = integrate_planned(plan, [&](double x) { return power_of(d, x, p); });
  if (!(I.value > 0.0)) throw NonIntegrableError("power integral vanished");
  return std::log(I.value);
}

EntropyValue renyi_entropy(const Density1D& d, double p, const NumericsConfig& cfg) {
  require_order(p);
  if (std::abs(p - 1.0) < kShannonBridge) return shannon_with_bridge(d, p, cfg);

  const IntegrationPlan plan = plan_for(d, p, cfg);
  const PlannedIntegral I = integrate_planned(plan, [&](double x) { return power_of(d, x, p); });
  if (!(I.value > 0.0) || !(I.coarse > 0.0)) throw NonIntegrableError("power integral vanished");

  EntropyValue out;
  out.order = p;
  out.nats = std::log(I.value) / (1.0 - p);
  out.richardson_delta = std::abs(out.nats - std::log(I.coarse) / (1.0 - p));
  out.resolution_warning = out.richardson_delta > cfg.richardson_tol;
  return out;
}

EntropyValue renyi_entropy(const ProductDensity& d, double p, const NumericsConfig& cfg) {
  if (d.coords.empty()) throw DomainError("product density has no coordinates");
  EntropyValue out;
  out.order = p;
  out.dimension = static_cast<int>(d.dimension());
  for (const Density1D& c : d.coords) {
    const EntropyValue h = renyi_entropy(c, p, cfg);
    out.nats += h.nats;
    out.richardson_delta += h.richardson_delta;
    out.resolution_warning = out.resolution_warning || h.resolution_warning;
  }
  return out;
}

EntropyValue shannon_entropy(const Density1D& d, const NumericsConfig& cfg) { return shannon_with_bridge(d, 1.0, cfg); }

EntropyValue normal_entropy_closed_form(double sigma2, int n, double p) {
  if (!(sigma2 > 0.0)) throw DomainError("variance must be positive");
  if (n < 1) throw DomainError("dimension must be at least 1");
  require_order(p);
  const double half_n = 0.5 * n;
  EntropyValue out;
  out.order = p;
  out.dimension = n;
  // p' log(p) / p = log(p) / (p - 1), which tends to 1 as p -> 1.
  const double shape = (p == 1.0) ? 1.0 : std::log(p) / (p - 1.0);
  out.nats = half_n * std::log(2.0 * std::numbers::pi * sigma2) + half_n * shape;
  return out;
}

double entropy_power(const EntropyValue& h) { return std::exp(2.0 * h.nats / h.dimension); }

double entropy_power(const Density1D& d, double r, int n, const NumericsConfig& cfg) {
  EntropyValue h = renyi_entropy(d, r, cfg);
  h.dimension = n;
  return entropy_power(h);
}

double kl_divergence(const Density1D& f, const Density1D& g, const NumericsConfig& cfg) {
  const Interval gs = g.support();
  double outside = 0.0;
  if (std::isfinite(gs.lo)) outside += f.cdf(gs.lo);
  if (std::isfinite(gs.hi)) outside += f.sf(gs.hi);
  if (outside > 1e-9) return kInf;

  IntegrationPlan plan = plan_for(f, 1.0, cfg);
  for (double b : g.breakpoints()) plan.breaks.push_back(b);
  auto integrand = [&](double x) {
    const double lf = f.log_pdf(x);
    if (lf == -kInf) return 0.0;
    const double lg = g.log_pdf(x);
    if (lg == -kInf) return 0.0;
    return std::exp(lf) * (lf - lg);
  };
  const double d = integrate_planned(plan, integrand, 1e-12).value;
  return std::max(d, 0.0);
}

DerivativeIdentity derivative_identity_gap(const Density1D& d, double p, double step, const NumericsConfig& cfg) {
  require_order(p);
  if (p == 1.0) throw DomainError("the derivative identity needs p != 1");
  if (!(step > 0.0) || !(p - step > 0.0)) throw DomainError("finite-difference step must keep p - step > 0");
  const double hi = renyi_entropy(d, p + step, cfg).nats;
  const double lo = renyi_entropy(d, p - step, cfg).nats;
  DerivativeIdentity out{};
  out.finite_difference = (hi - lo) / (2.0 * step);
  const double div = kl_divergence(escort(d, p), d, cfg);
  out.divergence_form = -div / ((1.0 - p) * (1.0 - p));
  out.gap = std::abs(out.finite_difference - out.divergence_form);
  return out;
}

EpiReport monotonicity_check(const Density1D& d, double p, double q, const NumericsConfig& cfg) {
  if (!(p < q)) throw DomainError("monotonicity check needs p < q");
  const double hp = renyi_entropy(d, p, cfg).nats;
  const double hq = renyi_entropy(d, q, cfg).nats;
  return make_report(CheckKind::Monotonicity, hp, hq, 1e-8,
                     "monotonicity;" + d.describe() + ";p=" + order_text(p) + ";q=" + order_text(q));
}

Varentropy varentropy(const Density1D& d, double p, const NumericsConfig& cfg) {
  require_order(p);
  const Density1D e = escort(d, p);
  const IntegrationPlan plan = plan_for(d, p, cfg);
  auto weighted_log = [&](double x) {
    const double lf = d.log_pdf(x);
    return lf == -kInf ? 0.0 : e.pdf(x) * lf;
  };
  const double mu = integrate_planned(plan, weighted_log, 1e-12).value;
  auto spread = [&](double x) {
    const double lf = d.log_pdf(x);
    if (lf == -kInf) return 0.0;
    const double c = lf - mu;
    return e.pdf(x) * c * c;
  };
  Varentropy out{};
  out.value = std::max(0.0, integrate_planned(plan, spread, 1e-12).value);
  out.bound = 1.0 / (p * p);
  out.log_concave = is_log_concave(d);
  out.within_bound = out.value <= out.bound + 1e-8;
  return out;
}

Varentropy varentropy(const ProductDensity& d, double p, const NumericsConfig& cfg) {
  if (d.coords.empty()) throw DomainError("product density has no coordinates");
  Varentropy out{0.0, 0.0, true, false};
  for (const Density1D& c : d.coords) {
    const Varentropy v = varentropy(c, p, cfg);
    out.value += v.value;
    out.log_concave = out.log_concave && v.log_concave;
  }
  out.bound = static_cast<double>(d.dimension()) / (p * p);
  out.within_bound = out.value <= out.bound + 1e-8;
  return out;
}

ConcavityScan concavity_scan(const Density1D& d, std::span<const double> orders, double tol, const NumericsConfig& cfg) {
  if (!is_log_concave(d)) throw PreconditionError("concavity scan is only asserted for log-concave densities");
  if (orders.size() < 3) throw DomainError("concavity scan needs at least three orders");
  ConcavityScan out;
  out.orders.assign(orders.begin(), orders.end());
  for (std::size_t i = 1; i < orders.size(); ++i) {
    if (!(orders[i] > orders[i - 1])) throw DomainError("orders must be strictly increasing");
  }
  for (double p : orders) out.values.push_back(std::log(p) + log_power_integral(d, p, cfg));

  out.worst_second_difference = -kInf;
  for (std::size_t i = 1; i + 1 < orders.size(); ++i) {
    const double a = orders[i - 1], b = orders[i], c = orders[i + 1];
    const double chord = ((c - b) * out.values[i - 1] + (b - a) * out.values[i + 1]) / (c - a);
    // 2 (chord - g) equals g[i-1] - 2 g[i] + g[i+1] on a uniform grid.
    out.worst_second_difference = std::max(out.worst_second_difference, 2.0 * (chord - out.values[i]));
  }
  out.concave = out.worst_second_difference <= tol;
  return out;
}

EpiReport shifted_monotonicity_check(const Density1D& d, double p, double q, const NumericsConfig& cfg) {
  if (!(p < q)) throw DomainError("shifted monotonicity check needs p < q");
  if (p == 1.0 || q == 1.0) throw DomainError("shifted monotonicity check needs p, q != 1");
  if (!is_log_concave(d)) throw PreconditionError("shifted monotonicity is only asserted for log-concave densities");
  const double lhs = renyi_entropy(d, q, cfg).nats + std::log(q) / (1.0 - q);
  const double rhs = renyi_entropy(d, p, cfg).nats + std::log(p) / (1.0 - p);
  return make_report(CheckKind::ShiftedMonotonicity, lhs, rhs, 1e-8,
                     "shifted_monotonicity;" + d.describe() + ";p=" + order_text(p) + ";q=" + order_text(q));
}

}  // namespace renyi
