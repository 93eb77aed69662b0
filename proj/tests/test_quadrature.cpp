#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "renyi/errors.hpp"
#include "renyi/quadrature.hpp"

using namespace renyi;

TEST(Simpson, ExactForCubics) {
  std::vector<double> ys;
  const double h = 0.25;
  for (int k = 0; k <= 8; ++k) {
    const double x = k * h;
    ys.push_back(x * x * x - x + 1.0);
  }
  EXPECT_NEAR(quad::simpson(ys, h), 4.0 - 2.0 + 2.0, 1e-14);
  ys.pop_back();  // odd interval count closes with a 3/8 panel
  const double b = 7 * h;
  EXPECT_NEAR(quad::simpson(ys, h), b * b * b * b / 4 - b * b / 2 + b, 1e-13);
}

TEST(Rule, SplitsAtBreakpoints) {
  const std::vector<double> breaks{0.0};
  const quad::Rule rule = quad::make_rule({-1.0, 1.0}, breaks, 0.01);
  const double v = quad::integrate(rule, [](double x) { return x < 0 ? 1.0 : 3.0; });
  EXPECT_NEAR(v, 4.0, 1e-13);
}

TEST(TailCheck, IntegrableTail) {
  const quad::CheckedIntegral c = quad::integrate_tail_checked(
      [](double x) { return std::exp(-0.5 * x * x); }, {-10.0, 10.0},
      {-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()}, {}, 1e-3);
  EXPECT_NEAR(c.value, std::sqrt(2.0 * std::numbers::pi), 1e-12);
  EXPECT_NEAR(c.coarse, c.value, 1e-10);
}

TEST(TailCheck, HeavyTailRejected) {
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_THROW(quad::integrate_tail_checked([](double x) { return 1.0 / (1.0 + std::abs(x)); }, {-10.0, 10.0},
                                            {-inf, inf}, {}, 1e-2),
               NonIntegrableError);
}

TEST(Hull, Basic) {
  const Interval h = quad::hull({0.0, 1.0}, {-2.0, 0.5});
  EXPECT_EQ(h.lo, -2.0);
  EXPECT_EQ(h.hi, 1.0);
}
