#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles/values.hpp"
#include "test_util.hpp"
#include "umbra/gamma.hpp"

using testutil::near_rel;

TEST(Gamma, MatchesOracle) {
  for (const auto& r : oracle::gamma) EXPECT_TRUE(near_rel(umbra::gamma(r.args[0]), r.value, 1e-13)) << r.args[0];
}

TEST(Gamma, ReciprocalMatchesOracle) {
  for (const auto& r : oracle::rgamma) EXPECT_TRUE(near_rel(umbra::rgamma(r.args[0]), r.value, 1e-13)) << r.args[0];
}

TEST(Gamma, KnownValues) {
  EXPECT_EQ(umbra::gamma(1.0), 1.0);
  EXPECT_TRUE(near_rel(umbra::gamma(0.5), 1.7724538509055160, 1e-15));
  EXPECT_TRUE(near_rel(umbra::gamma(4.5), 11.6317283965674489, 1e-15));
  EXPECT_TRUE(near_rel(umbra::rgamma(1.5), 1.1283791670955126, 1e-15));
  EXPECT_EQ(umbra::rgamma(2.0), 1.0);
}

TEST(Gamma, PolesAndOverflow) {
  EXPECT_THROW(umbra::gamma(0.0), umbra::domain_error);
  EXPECT_THROW(umbra::gamma(-3.0), umbra::domain_error);
  EXPECT_THROW(umbra::gamma(200.0), umbra::overflow_error);
  for (double x : {0.0, -1.0, -3.0, -50.0}) EXPECT_EQ(umbra::rgamma(x), 0.0) << x;
  EXPECT_TRUE(std::isfinite(umbra::rgamma(-150.5)));
  EXPECT_EQ(umbra::rgamma(-1e6), 0.0);
}

TEST(Gamma, GammaValueCompanion) {
  const auto p = umbra::GammaValue::at(-2.0);
  EXPECT_TRUE(p.is_pole);
  EXPECT_EQ(p.reciprocal, 0.0);
  const auto q = umbra::GammaValue::at(2.5);
  EXPECT_FALSE(q.is_pole);
  EXPECT_TRUE(near_rel(q.value * q.reciprocal, 1.0, 1e-15));
}

TEST(GammaProperty, ReciprocalTimesGammaIsOne) {
  for (double x = 0.05; x <= 50.0; x += 0.173) EXPECT_TRUE(near_rel(umbra::rgamma(x) * umbra::gamma(x), 1.0, 1e-13)) << x;
  for (double x = -9.9; x < 0.0; x += 0.37)
    if (std::fabs(x - std::round(x)) > 1e-3) {
      EXPECT_TRUE(near_rel(umbra::rgamma(x) * umbra::gamma(x), 1.0, 1e-13)) << x;
    }
}

TEST(GammaProperty, Duplication) {
  for (double x = 0.05; x <= 20.0; x += 0.11) {
    const double lhs = umbra::gamma(2 * x);
    const double rhs = umbra::gamma(x) * umbra::gamma(x + 0.5) * std::pow(2.0, 2 * x - 1) / std::sqrt(std::numbers::pi);
    EXPECT_TRUE(near_rel(lhs, rhs, 1e-12)) << x;
  }
}

TEST(Hermite2, Examples) {
  EXPECT_EQ(umbra::hermite2(0, 3.7, -2.0), 1.0);
  EXPECT_EQ(umbra::hermite2(3, 2.0, 1.0), 20.0);
  EXPECT_EQ(umbra::hermite2(2, 2.0, -1.0), 2.0);
  for (const auto& r : oracle::hermite2)
    EXPECT_TRUE(near_rel(umbra::hermite2(static_cast<int>(r.args[0]), r.args[1], r.args[2]), r.value, 1e-13));
  EXPECT_THROW(umbra::hermite2(201, 1.0, 1.0), umbra::domain_error);
  EXPECT_THROW(umbra::hermite2(-1, 1.0, 1.0), umbra::domain_error);
}

TEST(Hermite2, CoefficientTable) {
  for (int n : {0, 1, 7, 12}) {
    const umbra::Hermite2Coeffs c(n);
    ASSERT_EQ(c.coeffs.size(), static_cast<std::size_t>(n / 2 + 1));
    for (int k = 0; k <= n / 2; ++k) {
      const double want = std::tgamma(n + 1.0) / (std::tgamma(k + 1.0) * std::tgamma(n - 2.0 * k + 1.0));
      EXPECT_TRUE(near_rel(c.coeffs[static_cast<std::size_t>(k)], want, 1e-14));
    }
  }
}

TEST(Hermite2Property, ClassicalHermite) {
  for (double x = -5.0; x <= 5.0; x += 0.625) {
    double h[31];
    h[0] = 1.0;
    h[1] = 2.0 * x;
    for (int n = 1; n < 30; ++n) h[n + 1] = 2.0 * x * h[n] - 2.0 * n * h[n - 1];
    for (int n = 0; n <= 30; ++n) {
      const double got = umbra::hermite2(n, 2.0 * x, -1.0);
      EXPECT_LE(std::fabs(got - h[n]), 1e-10 * std::max(1.0, std::fabs(h[n]))) << n << " " << x;
    }
  }
}

TEST(Hermite2Property, Recurrence) {
  for (double y : {-1.3, 0.4, 2.2})
    for (double z : {-0.8, 0.5, 1.5})
      for (int n = 1; n < 30; ++n) {
        const double lhs = umbra::hermite2(n + 1, y, z);
        const double rhs = y * umbra::hermite2(n, y, z) + 2.0 * z * n * umbra::hermite2(n - 1, y, z);
        EXPECT_LE(std::fabs(lhs - rhs), 1e-11 * std::max(1.0, std::fabs(lhs))) << n << " " << y << " " << z;
      }
}
