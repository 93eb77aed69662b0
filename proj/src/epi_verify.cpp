#include "renyi/epi_verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "renyi/errors.hpp"
#include "renyi/quadrature.hpp"

namespace renyi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Sums share one lattice for every order >= kWindowOrder.
constexpr double kWindowOrder = 0.5;
constexpr std::size_t kCacheLimit = 256;

std::mutex cache_mutex;
std::map<std::string, double> entropy_cache;
std::map<std::string, Density1D> sum_cache;

std::string fmt(double x) { return format_number(x); }

std::string join_parts(std::span<const Density1D> parts) {
  std::string s;
  for (const Density1D& d : parts) {
    if (!s.empty()) s += ",";
    s += d.describe();
  }
  return s;
}

std::string triple_text(const ExponentTriple& t) {
  return "p=" + fmt(t.p.value()) + ";q=" + fmt(t.q.value()) + ";r=" + fmt(t.r.value()) + ";lambda=" + fmt(t.lambda);
}

double log_r_over_r(const Exponent& e) { return std::log(e.value()) / e.value(); }

Density1D sum_density_cached(std::span<const Density1D> parts, std::span<const double> coefficients,
                             double window_order, const NumericsConfig& cfg) {
  // Canonical part order keeps results independent of how the caller listed them.
  std::vector<std::size_t> idx(parts.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::string> keys(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) keys[i] = parts[i].describe() + "*" + fmt(coefficients[i]);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

  std::string key = "grid_n=" + std::to_string(cfg.grid_n) + ";order=" + fmt(window_order);
  SumSpec spec;
  for (std::size_t i : idx) {
    key += ";" + keys[i];
    spec.parts.push_back(SumPart{parts[i], coefficients[i]});
  }
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = sum_cache.find(key);
    if (it != sum_cache.end()) return it->second;
  }
  ConvolutionOptions opts;
  opts.grid_n = cfg.grid_n;
  opts.min_order = window_order;
  Density1D d = scaled_sum_density(spec, opts).density;
  std::lock_guard<std::mutex> lock(cache_mutex);
  if (sum_cache.size() >= kCacheLimit) sum_cache.clear();
  sum_cache.emplace(key, d);
  return d;
}

double entropy_of(const Density1D& d, double p, const NumericsConfig& cfg) {
  if (!d.is_analytic()) return renyi_entropy(d, p, cfg).nats;
  const std::string key = d.describe() + ";p=" + fmt(p) + ";grid_n=" + std::to_string(cfg.grid_n);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = entropy_cache.find(key);
    if (it != entropy_cache.end()) return it->second;
  }
  const double h = renyi_entropy(d, p, cfg).nats;
  std::lock_guard<std::mutex> lock(cache_mutex);
  if (entropy_cache.size() >= 16 * kCacheLimit) entropy_cache.clear();
  entropy_cache.emplace(key, h);
  return h;
}

// Mass of f outside the support of g.
double mass_outside(const Density1D& f, const Density1D& g) {
  const Interval s = g.support();
  double m = 0.0;
  if (std::isfinite(s.lo)) m += f.cdf(s.lo);
  if (std::isfinite(s.hi)) m += f.sf(s.hi);
  return m;
}

}  // namespace

double sum_entropy(std::span<const Density1D> parts, std::span<const double> coefficients, double r,
                   const NumericsConfig& cfg) {
  if (parts.size() != coefficients.size()) throw DomainError("one coefficient per part is required");
  const double window_order = std::min(r, kWindowOrder);
  return renyi_entropy(sum_density_cached(parts, coefficients, window_order, cfg), r, cfg).nats;
}

EpiReport info_inequality_gap(const Density1D& f, const Density1D& phi, double p, const VerifyConfig& cfg) {
  if (!(p > 0.0) || p == 1.0) throw DomainError("information inequality needs p > 0, p != 1");
  const double pc = p / (p - 1.0);
  const double inv_pc = 1.0 / pc;
  const std::string inputs = "info;" + f.describe() + ";" + phi.describe() + ";p=" + fmt(p);

  const double hp = entropy_of(f, p, cfg.numerics);
  double lhs;
  if (pc < 0.0 && mass_outside(f, phi) > 0.0) {
    lhs = kInf;  // E[phi^{1/p'}] diverges where phi vanishes
  } else {
    IntegrationPlan plan = plan_for(f, p, cfg.numerics);
    plan.window = quad::hull(plan.window, f.default_window());
    for (double b : phi.breakpoints()) plan.breaks.push_back(b);
    auto integrand = [&](double x) {
      const double lf = f.log_pdf(x);
      if (lf == -kInf) return 0.0;
      const double lphi = phi.log_pdf(x);
      if (lphi == -kInf) return inv_pc > 0.0 ? 0.0 : kInf;
      return std::exp(lf + inv_pc * lphi);
    };
    const double e = integrate_planned(plan, integrand).value;
    lhs = e > 0.0 ? -pc * std::log(e) : kInf;
  }
  EpiReport rep = make_report(CheckKind::InfoIneq, lhs, hp, cfg.info_tol, inputs);
  rep.r = p;
  return rep;
}

EpiReport dct_gap(const Density1D& fx, const Density1D& fy, const ExponentTriple& triple, const VerifyConfig& cfg) {
  const double lam = triple.lambda;
  const Density1D parts[] = {fx, fy};
  const double coefs[] = {std::sqrt(lam), std::sqrt(1.0 - lam)};
  const double hs = sum_entropy(parts, coefs, triple.r.value(), cfg.numerics);
  const double lhs = hs - lam * entropy_of(fx, triple.p.value(), cfg.numerics) -
                     (1.0 - lam) * entropy_of(fy, triple.q.value(), cfg.numerics);
  const double rhs = 0.5 * triple.r.conjugate() *
                     (log_r_over_r(triple.r) - log_r_over_r(triple.p) - log_r_over_r(triple.q));
  EpiReport rep = make_report(CheckKind::DCT, lhs, rhs, cfg.entropy_tol,
                              "dct;" + fx.describe() + ";" + fy.describe() + ";" + triple_text(triple));
  rep.r = triple.r.value();
  rep.m = 2;
  return rep;
}

EpiReport dct_gap(const ProductDensity& fx, const ProductDensity& fy, const ExponentTriple& triple,
                  const VerifyConfig& cfg) {
  if (fx.dimension() != fy.dimension() || fx.dimension() == 0) {
    throw DomainError("product densities must share a positive dimension");
  }
  const double lam = triple.lambda;
  const double coefs[] = {std::sqrt(lam), std::sqrt(1.0 - lam)};
  double lhs = 0.0;
  std::string inputs = "dct_product;" + triple_text(triple);
  for (std::size_t j = 0; j < fx.dimension(); ++j) {
    const Density1D parts[] = {fx.coords[j], fy.coords[j]};
    lhs += sum_entropy(parts, coefs, triple.r.value(), cfg.numerics) -
           lam * entropy_of(fx.coords[j], triple.p.value(), cfg.numerics) -
           (1.0 - lam) * entropy_of(fy.coords[j], triple.q.value(), cfg.numerics);
    inputs += ";" + fx.coords[j].describe() + "|" + fy.coords[j].describe();
  }
  const double n = static_cast<double>(fx.dimension());
  const double rhs = 0.5 * n * triple.r.conjugate() *
                     (log_r_over_r(triple.r) - log_r_over_r(triple.p) - log_r_over_r(triple.q));
  EpiReport rep = make_report(CheckKind::DCT, lhs, rhs, cfg.entropy_tol * n, inputs);
  rep.r = triple.r.value();
  rep.m = 2;
  return rep;
}

EpiReport dct_gap_m(std::span<const Density1D> parts, const Exponent& r, std::span<const Exponent> orders,
                    const VerifyConfig& cfg) {
  if (parts.size() != orders.size() || parts.size() < 2) {
    throw DomainError("dct_gap_m needs one order per part and at least two parts");
  }
  const WeightVector w = weights_from_orders(r, orders);
  std::vector<double> coefs;
  for (double l : w.values()) {
    if (!(l > 0.0)) throw DomainError("weights must be positive");
    coefs.push_back(std::sqrt(l));
  }
  double lhs = sum_entropy(parts, coefs, r.value(), cfg.numerics);
  double shift = log_r_over_r(r);
  std::string inputs = "dct_m;r=" + fmt(r.value());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    lhs -= w[i] * entropy_of(parts[i], orders[i].value(), cfg.numerics);
    shift -= log_r_over_r(orders[i]);
    inputs += ";" + parts[i].describe() + "@" + fmt(orders[i].value());
  }
  const double rhs = 0.5 * r.conjugate() * shift;
  EpiReport rep = make_report(CheckKind::DCT_m, lhs, rhs, cfg.entropy_tol, inputs);
  rep.r = r.value();
  rep.m = static_cast<int>(parts.size());
  return rep;
}

double charact_rhs(double c, double alpha, const WeightVector& w, int n) {
  if (!(c > 0.0)) throw DomainError("c must be positive");
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
  return 0.5 * n * (std::log(c) / alpha + (1.0 / alpha - 1.0) * discrete_entropy(w));
}

EpiReport epi_form_check(std::span<const Density1D> parts, const Exponent& r, double c, double alpha,
                         CheckKind form, const VerifyConfig& cfg) {
  if (parts.size() < 2) throw DomainError("an EPI check needs at least two parts");
  if (!(c > 0.0) || !(alpha > 0.0)) throw DomainError("c and alpha must be positive");
  if (form != CheckKind::CForm && form != CheckKind::AlphaForm && form != CheckKind::GeneralForm) {
    throw DomainError("epi_form_check handles the c, alpha and general forms only");
  }
  if (!r.above_one()) {
    for (const Density1D& d : parts) {
      if (!is_log_concave(d)) {
        throw PreconditionError("r < 1 constants hold for log-concave densities only; " + d.describe() + " is not");
      }
    }
  }
  const std::vector<double> ones(parts.size(), 1.0);
  const double lhs = std::exp(2.0 * alpha * sum_entropy(parts, ones, r.value(), cfg.numerics));
  double total = 0.0;
  for (const Density1D& d : parts) total += std::exp(2.0 * alpha * entropy_of(d, r.value(), cfg.numerics));
  const double rhs = c * total;
  EpiReport rep = make_report(form, lhs, rhs, cfg.power_rel_tol * rhs,
                              to_string(form) + ";" + join_parts(parts) + ";r=" + fmt(r.value()) + ";c=" + fmt(c) +
                                  ";alpha=" + fmt(alpha));
  rep.r = r.value();
  rep.m = static_cast<int>(parts.size());
  rep.alpha = alpha;
  rep.c = c;
  return rep;
}

EpiReport equivalence_probe(std::span<const Density1D> parts, const Exponent& r, double c, double alpha,
                                   std::optional<WeightVector> weights, const VerifyConfig& cfg) {
  if (parts.size() < 2) throw DomainError("the probe needs at least two parts");
  const std::size_t m = parts.size();
  std::vector<double> h(m), powers(m);
  for (std::size_t i = 0; i < m; ++i) {
    h[i] = entropy_of(parts[i], r.value(), cfg.numerics);
    powers[i] = std::exp(2.0 * alpha * h[i]);
  }
  const double total = std::accumulate(powers.begin(), powers.end(), 0.0);
  if (!weights) {
    std::vector<double> l(m);
    for (std::size_t i = 0; i < m; ++i) l[i] = powers[i] / total;
    const double s = std::accumulate(l.begin(), l.end(), 0.0);
    for (double& v : l) v /= s;
    weights = WeightVector(std::move(l));
  }
  if (weights->size() != m) throw DomainError("one weight per part is required");

  const std::vector<double> ones(m, 1.0);
  const double h_sum = sum_entropy(parts, ones, r.value(), cfg.numerics);

  // Entropy form for Y_i = X_i / sqrt(lambda_i), whose weighted sum is sum X_i.
  double lhs = h_sum;
  for (std::size_t i = 0; i < m; ++i) {
    const double l = (*weights)[i];
    if (!(l > 0.0)) throw DomainError("weights must be positive");
    lhs -= l * (h[i] - 0.5 * std::log(l));
  }
  const double rhs = charact_rhs(c, alpha, *weights, 1);

  const double power_lhs = std::exp(2.0 * alpha * h_sum);
  const double power_rhs = c * total;
  const double power_gap = (power_lhs - power_rhs) / power_rhs;

  std::string inputs = "equivalence;" + join_parts(parts) + ";r=" + fmt(r.value()) + ";c=" + fmt(c) + ";alpha=" + fmt(alpha);
  for (double l : weights->values()) inputs += ";w=" + fmt(l);
  EpiReport rep = make_report(CheckKind::Equivalence, lhs, rhs, 0.0, inputs);
  rep.aux_gap = power_gap;
  rep.pass = !(rep.gap >= 0.0) || power_gap >= -1e-6;
  rep.r = r.value();
  rep.m = static_cast<int>(m);
  rep.alpha = alpha;
  rep.c = c;
  return rep;
}

}  // namespace renyi
