#include <array>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles/oracle_values.hpp"
#include "renyi/entropy.hpp"
#include "renyi/errors.hpp"

using namespace renyi;

namespace {

const double kLog2 = std::log(2.0);

}  // namespace

TEST(Entropy, NormalAgainstOracle) {
  struct Case {
    double s2, p, expected;
  };
  const std::array cases{
      Case{0.25, 0.5, oracle::h_normal_s0p25_p0p5}, Case{0.25, 10.0, oracle::h_normal_s0p25_p10},
      Case{1.0, 2.0, oracle::h_normal_s1_p2},       Case{1.0, 3.0, oracle::h_normal_s1_p3},
      Case{4.0, 0.5, oracle::h_normal_s4_p0p5},     Case{4.0, 10.0, oracle::h_normal_s4_p10},
  };
  for (const Case& c : cases) {
    const EntropyValue h = renyi_entropy(Density1D::normal(c.s2), c.p);
    EXPECT_NEAR(h.nats, c.expected, 1e-10) << c.s2 << " " << c.p;
    EXPECT_FALSE(h.resolution_warning);
    EXPECT_NEAR(normal_entropy_closed_form(c.s2, 1, c.p).nats, c.expected, 1e-13);
  }
}

TEST(Entropy, SecondOrderNormalIsHalfLogFourPi) {
  EXPECT_NEAR(renyi_entropy(Density1D::normal(1.0), 2.0).nats, 0.5 * std::log(4.0 * std::numbers::pi), 1e-12);
  EXPECT_NEAR(oracle::h2_normal1, 0.5 * std::log(4.0 * std::numbers::pi), 1e-15);
}

TEST(Entropy, ExponentialLaplaceOracles) {
  EXPECT_NEAR(renyi_entropy(Density1D::exponential(1.0), 0.5).nats, oracle::h_exp_p0p5, 1e-9);
  EXPECT_NEAR(renyi_entropy(Density1D::exponential(1.0), 3.0).nats, oracle::h_exp_p3, 1e-9);
  EXPECT_NEAR(renyi_entropy(Density1D::laplace(1.0), 0.5).nats, oracle::h_laplace_p0p5, 1e-9);
  EXPECT_NEAR(renyi_entropy(Density1D::laplace(1.0), 2.0).nats, oracle::h_laplace_p2, 1e-9);
}

TEST(Entropy, UniformIndependentOfOrder) {
  for (double p : {0.1, 0.5, 0.9999, 1.0, 2.0, 5.0, 10.0}) {
    EXPECT_NEAR(renyi_entropy(Density1D::uniform(0.0, 2.0), p).nats, kLog2, 1e-10) << p;
  }
}

TEST(Entropy, ShannonBridgeIsContinuous) {
  const Density1D d = Density1D::normal(1.0);
  const double h1 = shannon_entropy(d).nats;
  EXPECT_NEAR(h1, 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e), 1e-12);
  for (double p : {1.0 - 2e-4, 1.0 - 5e-5, 1.0 + 5e-5, 1.0 + 2e-4}) {
    EXPECT_NEAR(renyi_entropy(d, p).nats, normal_entropy_closed_form(1.0, 1, p).nats, 1e-9) << p;
  }
}

TEST(Entropy, ProductAddsCoordinates) {
  const ProductDensity d{{Density1D::normal(1.0), Density1D::normal(1.0), Density1D::normal(1.0)}};
  const EntropyValue h = renyi_entropy(d, 2.0);
  EXPECT_EQ(h.dimension, 3);
  EXPECT_NEAR(h.nats, normal_entropy_closed_form(1.0, 3, 2.0).nats, 1e-11);
  EXPECT_NEAR(entropy_power(h), entropy_power(renyi_entropy(Density1D::normal(1.0), 2.0)), 1e-11);
}

TEST(Entropy, EntropyPowerOfNormalScalesWithVariance) {
  const double n1 = entropy_power(Density1D::normal(1.0), 2.0);
  const double n4 = entropy_power(Density1D::normal(4.0), 2.0);
  EXPECT_NEAR(n4 / n1, 4.0, 1e-10);
}

TEST(Entropy, GridDensityConverges) {
  const Density1D g = tabulate(Density1D::normal(1.0), 16384);
  EXPECT_NEAR(renyi_entropy(g, 2.0).nats, oracle::h2_normal1, 1e-6);
}

TEST(Entropy, Errors) {
  EXPECT_THROW(renyi_entropy(Density1D::normal(1.0), 0.0), DomainError);
  EXPECT_THROW(renyi_entropy(Density1D::normal(1.0), -1.0), DomainError);
  EXPECT_THROW(normal_entropy_closed_form(0.0, 1, 2.0), DomainError);
}

TEST(Divergence, KlNormalPair) {
  EXPECT_NEAR(kl_divergence(Density1D::normal(0.5), Density1D::normal(1.0)), oracle::kl_normal_half_vs_one, 1e-10);
  EXPECT_NEAR(oracle::kl_normal_half_vs_one, 0.5 * (0.5 - 1.0 + std::log(2.0)), 1e-15);
  EXPECT_EQ(kl_divergence(Density1D::exponential(1.0), Density1D::uniform(0.0, 1.0)),
            std::numeric_limits<double>::infinity());
}

TEST(Divergence, DerivativeIdentity) {
  struct Case {
    Density1D d;
    double p, kl;
  };
  const std::array cases{
      Case{Density1D::normal(1.0), 2.0, oracle::kl_escort_normal_p2},
      Case{Density1D::exponential(1.0), 0.5, oracle::kl_escort_exp_p0p5},
      Case{Density1D::laplace(1.0), 3.0, oracle::kl_escort_laplace_p3},
  };
  for (const Case& c : cases) {
    const DerivativeIdentity id = derivative_identity_gap(c.d, c.p);
    EXPECT_LT(id.gap, 1e-6) << c.d.describe();
    EXPECT_NEAR(id.divergence_form, -c.kl / ((1 - c.p) * (1 - c.p)), 1e-9) << c.d.describe();
  }
  EXPECT_THROW(derivative_identity_gap(Density1D::normal(1.0), 1.0), DomainError);
}

TEST(Monotonicity, NormalAndGamma) {
  EXPECT_TRUE(monotonicity_check(Density1D::normal(1.0), 0.5, 2.0).pass);
  EXPECT_THROW(monotonicity_check(Density1D::normal(1.0), 2.0, 0.5), DomainError);
}

TEST(Varentropy, Values) {
  const Varentropy n = varentropy(Density1D::normal(1.0), 2.0);
  EXPECT_NEAR(n.value, 1.0 / 8.0, 1e-9);
  EXPECT_TRUE(n.within_bound);
  const Varentropy e = varentropy(Density1D::exponential(1.0), 0.5);
  EXPECT_NEAR(e.value, 4.0, 1e-8);
  const Varentropy g = varentropy(tabulate(Density1D::uniform(0.0, 1.0), 1024), 2.0);
  EXPECT_NEAR(g.value, 0.0, 1e-12);
  const ProductDensity prod{{Density1D::normal(1.0), Density1D::laplace(1.0)}};
  const Varentropy pv = varentropy(prod, 1.0);
  EXPECT_NEAR(pv.value, 0.5 + 1.0, 1e-8);
  EXPECT_EQ(pv.bound, 2.0);
}

TEST(ConcavityScan, LogConcaveSuite) {
  const std::vector<double> orders{0.3, 0.5, 0.8, 1.0, 1.5, 2.0, 3.0};
  for (const Density1D& d : {Density1D::normal(1.0), Density1D::exponential(1.0), Density1D::laplace(2.0)}) {
    const ConcavityScan s = concavity_scan(d, orders);
    EXPECT_TRUE(s.concave) << d.describe() << " " << s.worst_second_difference;
  }
}

TEST(ConcavityScan, RejectsNonLogConcave) {
  std::vector<double> fs;
  for (int k = 0; k <= 400; ++k) {
    const double x = -8.0 + 16.0 * k / 400.0;
    fs.push_back(std::exp(-0.5 * (x - 3) * (x - 3)) + std::exp(-0.5 * (x + 3) * (x + 3)));
  }
  const std::vector<double> orders{0.5, 1.0, 2.0};
  const Density1D mix = Density1D::grid(-8.0, 8.0, fs);
  EXPECT_THROW(concavity_scan(mix, orders), PreconditionError);
  EXPECT_THROW(shifted_monotonicity_check(mix, 0.5, 2.0), PreconditionError);
}

TEST(ShiftedMonotonicity, Laplace) {
  const EpiReport r = shifted_monotonicity_check(Density1D::laplace(1.0), 0.5, 2.0);
  EXPECT_TRUE(r.pass);
  // Laplace attains equality in the shifted form.
  EXPECT_NEAR(r.gap, 0.0, 1e-9);
}
