#pragma once

// Exponent arithmetic, weight vectors on the probability simplex, and the
// closed-form constants c and exponents alpha of the Renyi entropy power
// inequalities. Everything here is in nats.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace renyi {

/// p / (p - 1). Throws DomainError unless p > 0 and p != 1.
double conjugate(double p);

/// An order p > 0, p != 1, paired with its conjugate p'.
class Exponent {
 public:
  explicit Exponent(double p);

  /// The exponent whose conjugate is `p_prime`. Requires p_prime > 1 or p_prime < 0.
  static Exponent from_conjugate(double p_prime);

  double value() const noexcept { return p_; }
  double conjugate() const noexcept { return conj_; }
  bool above_one() const noexcept { return p_ > 1.0; }

 private:
  Exponent(double p, double conj) : p_(p), conj_(conj) {}

  double p_;
  double conj_;
};

/// Orders (p, q, r) with 1/p' + 1/q' = 1/r', all conjugates of one sign,
/// and lambda = r'/p' = 1 - r'/q'.
struct ExponentTriple {
  Exponent p;
  Exponent q;
  Exponent r;
  double lambda;
};

ExponentTriple make_triple(const Exponent& p, const Exponent& q);

/// The triple with prescribed r and lambda: p' = r'/lambda, q' = r'/(1 - lambda).
ExponentTriple triple_for(const Exponent& r, double lambda);

/// A point of the probability simplex. Zero entries are allowed and mark the
/// vector as a boundary point; entropy terms use 0 log 0 = 0 there.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> lambdas);

  static WeightVector uniform(std::size_t m);

  std::span<const double> values() const noexcept { return lambdas_; }
  std::size_t size() const noexcept { return lambdas_.size(); }
  double operator[](std::size_t i) const { return lambdas_[i]; }
  bool on_boundary() const noexcept { return boundary_; }

 private:
  std::vector<double> lambdas_;
  bool boundary_ = false;
};

/// lambda_i = r'/r'_i. Throws InconsistentOrdersError unless sum 1/r'_i = 1/r'
/// (within 1e-9) and IncompatibleExponentsError on sign mismatch.
WeightVector weights_from_orders(const Exponent& r, std::span<const Exponent> orders);

/// Discrete Shannon entropy of the weights, in nats.
double discrete_entropy(const WeightVector& w);

/// |r'| ( sum_i g(lambda_i) - g(1) ) with g(x) = (1 - x/r') log(1 - x/r').
/// Convex on the simplex, zero at the vertices, negative inside.
double simplex_gap(const Exponent& r, const WeightVector& w);

// Constants for orders r > 1. Each throws DomainError when r <= 1 or m < 2.

double ram_sason_constant(const Exponent& r, int m);
double bobkov_chistyakov_constant(const Exponent& r);
double li_exponent(const Exponent& r);
/// The two-variable expression (r-1) / ((r+1) log2(r+1) - r log2 r - 2).
double li_exponent_two_variable(const Exponent& r);
double bobkov_marsiglietti_exponent(const Exponent& r);
/// (m c_RS)^alpha / m for 0 < alpha < 1.
double general_constant(const Exponent& r, int m, double alpha);

// Constants for 0 < r < 1, valid for log-concave densities. Each throws
// DomainError when r >= 1.

double logconcave_constant(const Exponent& r, int m);
double logconcave_exponent(const Exponent& r);
/// The two-variable expression (1-r) / ((r+1) log2(r+1) - r log2 r - 2r).
double logconcave_exponent_two_variable(const Exponent& r);
double logconcave_general_constant(const Exponent& r, int m, double alpha);

enum class ConstantKind {
  RamSasonC,
  BobkovChistyakovC,
  LiAlpha,
  BobkovMarsigliettiAlpha,
  GeneralC,
  LogConcaveC,
  LogConcaveAlpha,
  LogConcaveGeneralC,
};

std::string to_string(ConstantKind kind);

struct EpiConstant {
  ConstantKind kind;
  Exponent r;
  int m;
  double value;
  std::optional<double> alpha_input;
};

/// Evaluates the constant of the requested kind. GeneralC and
/// LogConcaveGeneralC need `alpha`.
EpiConstant make_constant(ConstantKind kind, const Exponent& r, int m,
                          std::optional<double> alpha = std::nullopt);

/// The r < 1 branch of make_constant; rejects the r > 1 kinds.
EpiConstant logconcave_constants(ConstantKind kind, const Exponent& r, int m,
                                 std::optional<double> alpha = std::nullopt);

}  // namespace renyi
