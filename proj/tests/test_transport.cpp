#include <cmath>

#include <gtest/gtest.h>

#include "oracles/oracle_values.hpp"
#include "renyi/errors.hpp"
#include "renyi/transport.hpp"

using namespace renyi;

namespace {

double interpolate(const TransportMap1D& m, double x) {
  const double pos = (x - m.x.front()) / m.spacing();
  const auto k = static_cast<std::size_t>(pos);
  const double w = pos - static_cast<double>(k);
  return (1.0 - w) * m.t[k] + w * m.t[k + 1];
}

}  // namespace

TEST(Transport, NormalToNormalIsAffine) {
  const TransportMap1D m = monotone_transport(Density1D::normal(16.0), 1.0);
  ASSERT_TRUE(m.strictly_increasing());
  for (double s : m.slopes()) EXPECT_NEAR(s, 4.0, 1e-8);
  const TransportMap1D half = monotone_transport(Density1D::normal(4.0), 1.0);
  for (double s : half.slopes()) ASSERT_NEAR(s, 2.0, 1e-8);
  EXPECT_NEAR(half.t[half.t.size() / 2], 0.0, 1e-12);
}

TEST(Transport, ExponentialTargetKnots) {
  const TransportMap1D m = monotone_transport(Density1D::exponential(1.0), 1.0);
  EXPECT_NEAR(interpolate(m, 0.0), oracle::transport_exp_at_0, 1e-9);
  EXPECT_NEAR(interpolate(m, 1.0), oracle::transport_exp_at_1, 1e-6);
  EXPECT_NEAR(interpolate(m, -1.0), oracle::transport_exp_at_m1, 1e-6);
  EXPECT_NEAR(interpolate(m, 2.0), oracle::transport_exp_at_2, 1e-6);
}

TEST(Transport, PushforwardMatchesTargets) {
  for (const Density1D& target : {Density1D::exponential(1.0), Density1D::uniform(0.0, 1.0), Density1D::laplace(1.0),
                                  Density1D::normal(4.0)}) {
    const EpiReport r = pushforward_check(monotone_transport(target, 1.0));
    EXPECT_TRUE(r.pass) << target.describe();
    EXPECT_LT(r.rhs, 1e-6) << target.describe();
  }
}

TEST(Transport, PushforwardDetectsBrokenMap) {
  TransportMap1D m = monotone_transport(Density1D::exponential(1.0), 1.0);
  std::swap(m.t[100], m.t[8000]);
  const EpiReport r = pushforward_check(m);
  EXPECT_FALSE(r.pass);
}

TEST(Transport, GappedGridTargetRejected) {
  const Density1D g = Density1D::grid(0.0, 4.0, {0.0, 1.0, 0.0, 1.0, 0.0});
  EXPECT_THROW(monotone_transport(g, 1.0), NonDiffeomorphicTargetError);
}

TEST(Rotation, PreservesIsotropicCovariance) {
  for (double l : {0.01, 0.1, 0.25, 0.5, 0.9, 0.99}) {
    const RotationPair r = normal_rotation_check(l, 2.0);
    EXPECT_TRUE(r.pass) << l;
    EXPECT_LT(r.covariance_error, 1e-14);
  }
  EXPECT_THROW(normal_rotation_check(1.5, 1.0), DomainError);
  EXPECT_THROW(normal_rotation_check(0.0, 1.0), DomainError);
}

TEST(Invariance, SmallGapAcrossOrders) {
  for (double p : {0.5, 2.0}) {
    const InvarianceGap g = invariance_gap(Density1D::exponential(1.0), Density1D::laplace(2.0), p, 1.0);
    EXPECT_LT(g.gap, 1e-5) << p;
  }
}
