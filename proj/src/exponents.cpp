#include "renyi/exponents.hpp"

#include <cmath>
#include <numeric>

#include "renyi/errors.hpp"

namespace renyi {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

void require_above_one(const Exponent& r, const char* what) {
  if (!r.above_one()) {
    throw DomainError(std::string(what) + " requires r > 1, got r = " + std::to_string(r.value()));
  }
}

void require_below_one(const Exponent& r, const char* what) {
  if (r.above_one()) {
    throw DomainError(std::string(what) + " requires 0 < r < 1, got r = " + std::to_string(r.value()));
  }
}

void require_m(int m) {
  if (m < 2) throw DomainError("number of variables must be at least 2");
}

void require_open_unit(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("alpha must lie in (0, 1), got " + std::to_string(alpha));
  }
}

// x log x with the 0 log 0 = 0 convention.
double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// log c_RS = r' log(r)/r + (m r' - 1) log(1 - 1/(m r')), the value of the
// simplex gap at the uniform point. For r < 1 the same expression with r'
// replaced by |r'| on the outside gives the log-concave constant.
double log_uniform_gap(const Exponent& r, int m) {
  const double rc = r.conjugate();
  const double mr = m * rc;
  const double scale = std::abs(rc);
  // |r'| ( m (1 - 1/(m r')) log(1 - 1/(m r')) - (1 - 1/r') log(1 - 1/r') ), with 1 - 1/r' = 1/r.
  return scale * ((mr - 1.0) / rc * std::log1p(-1.0 / mr) + std::log(r.value()) / r.value());
}

}  // namespace

double conjugate(double p) {
  if (!(p > 0.0) || p == 1.0 || !std::isfinite(p)) {
    throw DomainError("exponent must satisfy p > 0 and p != 1, got " + std::to_string(p));
  }
  return p / (p - 1.0);
}

Exponent::Exponent(double p) : p_(p), conj_(renyi::conjugate(p)) {}

Exponent Exponent::from_conjugate(double p_prime) {
  if (p_prime == 1.0) {
    throw UnsupportedInfiniteOrderError("conjugate exponent 1 corresponds to an infinite order");
  }
  if (!std::isfinite(p_prime) || !(p_prime > 1.0 || p_prime < 0.0)) {
    throw DomainError("conjugate exponent must be > 1 or < 0, got " + std::to_string(p_prime));
  }
  return Exponent(p_prime / (p_prime - 1.0), p_prime);
}

ExponentTriple make_triple(const Exponent& p, const Exponent& q) {
  const double pc = p.conjugate();
  const double qc = q.conjugate();
  if ((pc > 0.0) != (qc > 0.0)) {
    throw IncompatibleExponentsError("conjugates of p and q have different signs");
  }
  const double inv = 1.0 / pc + 1.0 / qc;
  if (std::abs(inv - 1.0) < 1e-12) {
    throw UnsupportedInfiniteOrderError("1/p' + 1/q' = 1 gives r' = 1 (infinite r)");
  }
  const double rc = 1.0 / inv;
  if (rc > 0.0 && rc < 1.0) {
    throw IncompatibleExponentsError("1/p' + 1/q' > 1: no finite order r > 1 satisfies the relation");
  }
  const Exponent r = Exponent::from_conjugate(rc);
  return ExponentTriple{p, q, r, rc / pc};
}

ExponentTriple triple_for(const Exponent& r, double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw DomainError("lambda must lie in (0, 1)");
  }
  const double rc = r.conjugate();
  const Exponent p = Exponent::from_conjugate(rc / lambda);
  const Exponent q = Exponent::from_conjugate(rc / (1.0 - lambda));
  return ExponentTriple{p, q, r, lambda};
}

WeightVector::WeightVector(std::vector<double> lambdas) : lambdas_(std::move(lambdas)) {
  if (lambdas_.empty()) throw DomainError("weight vector must not be empty");
  double sum = 0.0;
  for (double l : lambdas_) {
    if (!(l >= 0.0) || !std::isfinite(l)) throw DomainError("weights must be finite and nonnegative");
    if (l == 0.0) boundary_ = true;
    sum += l;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw DomainError("weights must sum to 1, got " + std::to_string(sum));
  }
}

WeightVector WeightVector::uniform(std::size_t m) {
  return WeightVector(std::vector<double>(m, 1.0 / static_cast<double>(m)));
}

WeightVector weights_from_orders(const Exponent& r, std::span<const Exponent> orders) {
  if (orders.empty()) throw DomainError("at least one order is required");
  const double rc = r.conjugate();
  double inv_sum = 0.0;
  std::vector<double> lambdas;
  lambdas.reserve(orders.size());
  for (const Exponent& o : orders) {
    if ((o.conjugate() > 0.0) != (rc > 0.0)) {
      throw IncompatibleExponentsError("all conjugates must share the sign of r'");
    }
    inv_sum += 1.0 / o.conjugate();
    lambdas.push_back(rc / o.conjugate());
  }
  if (std::abs(inv_sum - 1.0 / rc) > 1e-9) {
    throw InconsistentOrdersError("sum of 1/r'_i = " + std::to_string(inv_sum) +
                                  " differs from 1/r' = " + std::to_string(1.0 / rc));
  }
  // Absorb rounding so the vector lands exactly on the simplex.
  const double total = std::accumulate(lambdas.begin(), lambdas.end(), 0.0);
  for (double& l : lambdas) l /= total;
  return WeightVector(std::move(lambdas));
}

double discrete_entropy(const WeightVector& w) {
  double h = 0.0;
  for (double l : w.values()) h -= xlogx(l);
  return h;
}

double simplex_gap(const Exponent& r, const WeightVector& w) {
  const double rc = r.conjugate();
  auto g = [rc](double x) {
    const double y = 1.0 - x / rc;
    return y * std::log(y);
  };
  double s = 0.0;
  for (double l : w.values()) s += g(l);
  return std::abs(rc) * (s - g(1.0));
}

double ram_sason_constant(const Exponent& r, int m) {
  require_above_one(r, "Ram-Sason constant");
  require_m(m);
  return std::exp(log_uniform_gap(r, m));
}

double bobkov_chistyakov_constant(const Exponent& r) {
  require_above_one(r, "Bobkov-Chistyakov constant");
  return std::exp(r.conjugate() * std::log(r.value()) / r.value() - 1.0);
}

double li_exponent(const Exponent& r) {
  require_above_one(r, "Li exponent");
  const double rc = r.conjugate();
  const double bits = (rc * std::log(r.value()) / r.value() + (2.0 * rc - 1.0) * std::log1p(-1.0 / (2.0 * rc))) / kLn2;
  return 1.0 / (1.0 + bits);
}

double li_exponent_two_variable(const Exponent& r) {
  require_above_one(r, "Li exponent");
  const double x = r.value();
  const double denom = ((x + 1.0) * std::log(x + 1.0) - x * std::log(x)) / kLn2 - 2.0;
  return (x - 1.0) / denom;
}

double bobkov_marsiglietti_exponent(const Exponent& r) {
  require_above_one(r, "Bobkov-Marsiglietti exponent");
  return (r.value() + 1.0) / 2.0;
}

double general_constant(const Exponent& r, int m, double alpha) {
  require_above_one(r, "general constant");
  require_m(m);
  require_open_unit(alpha);
  return std::exp(alpha * (std::log(static_cast<double>(m)) + log_uniform_gap(r, m)) - std::log(static_cast<double>(m)));
}

double logconcave_constant(const Exponent& r, int m) {
  require_below_one(r, "log-concave constant");
  require_m(m);
  return std::exp(log_uniform_gap(r, m));
}

double logconcave_exponent(const Exponent& r) {
  require_below_one(r, "log-concave exponent");
  const double a = std::abs(r.conjugate());
  const double bits = (a * std::log(r.value()) / r.value() + (2.0 * a + 1.0) * std::log1p(1.0 / (2.0 * a))) / kLn2;
  return 1.0 / (1.0 + bits);
}

double logconcave_exponent_two_variable(const Exponent& r) {
  require_below_one(r, "log-concave exponent");
  const double x = r.value();
  const double denom = ((x + 1.0) * std::log(x + 1.0) - x * std::log(x)) / kLn2 - 2.0 * x;
  return (1.0 - x) / denom;
}

double logconcave_general_constant(const Exponent& r, int m, double alpha) {
  require_below_one(r, "log-concave general constant");
  require_m(m);
  require_open_unit(alpha);
  return std::exp(alpha * (std::log(static_cast<double>(m)) + log_uniform_gap(r, m)) - std::log(static_cast<double>(m)));
}

std::string to_string(ConstantKind kind) {
  switch (kind) {
    case ConstantKind::RamSasonC: return "RamSasonC";
    case ConstantKind::BobkovChistyakovC: return "BobkovChistyakovC";
    case ConstantKind::LiAlpha: return "LiAlpha";
    case ConstantKind::BobkovMarsigliettiAlpha: return "BobkovMarsigliettiAlpha";
    case ConstantKind::GeneralC: return "GeneralC";
    case ConstantKind::LogConcaveC: return "LogConcaveC";
    case ConstantKind::LogConcaveAlpha: return "LogConcaveAlpha";
    case ConstantKind::LogConcaveGeneralC: return "LogConcaveGeneralC";
  }
  return "unknown";
}

EpiConstant make_constant(ConstantKind kind, const Exponent& r, int m, std::optional<double> alpha) {
  auto need_alpha = [&]() {
    if (!alpha) throw DomainError(to_string(kind) + " needs an alpha input");
    return *alpha;
  };
  double value = 0.0;
  switch (kind) {
    case ConstantKind::RamSasonC: value = ram_sason_constant(r, m); break;
    case ConstantKind::BobkovChistyakovC: value = bobkov_chistyakov_constant(r); break;
    case ConstantKind::LiAlpha: value = li_exponent(r); break;
    case ConstantKind::BobkovMarsigliettiAlpha: value = bobkov_marsiglietti_exponent(r); break;
    case ConstantKind::GeneralC: value = general_constant(r, m, need_alpha()); break;
    case ConstantKind::LogConcaveC: value = logconcave_constant(r, m); break;
    case ConstantKind::LogConcaveAlpha: value = logconcave_exponent(r); break;
    case ConstantKind::LogConcaveGeneralC: value = logconcave_general_constant(r, m, need_alpha()); break;
  }
  return EpiConstant{kind, r, m, value, alpha};
}

EpiConstant logconcave_constants(ConstantKind kind, const Exponent& r, int m, std::optional<double> alpha) {
  switch (kind) {
    case ConstantKind::LogConcaveC:
    case ConstantKind::LogConcaveAlpha:
    case ConstantKind::LogConcaveGeneralC:
      return make_constant(kind, r, m, alpha);
    default:
      throw DomainError(to_string(kind) + " is not a log-concave constant");
  }
}

}  // namespace renyi
