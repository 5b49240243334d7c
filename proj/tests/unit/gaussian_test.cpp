#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "tmsv/error.hpp"
#include "tmsv/gaussian.hpp"

using namespace tmsv;

TEST(BathParams, RejectsNegativeRates) {
  EXPECT_THROW(BathParams(-0.1, 1.0), std::invalid_argument);
  EXPECT_THROW(BathParams(1.0, -1e-9), std::invalid_argument);
  EXPECT_THROW(BathParams(NAN, 1.0), std::invalid_argument);
  EXPECT_NO_THROW(BathParams(0.0, 0.0));
}

TEST(BathParams, ThermalSpecialization) {
  const auto bath = BathParams::thermal(2.0, 1.0);
  EXPECT_DOUBLE_EQ(bath.gain(), 1.0);
  EXPECT_DOUBLE_EQ(bath.loss(), 2.0);
}

TEST(SqueezeInit, LambdaIsTanhR) {
  const auto s = SqueezeInit::from_r(0.7);
  EXPECT_NEAR(s.lambda(), std::tanh(0.7), 1e-15);
  const auto t = SqueezeInit::from_lambda(0.2);
  EXPECT_NEAR(std::tanh(t.r()), 0.2, 1e-15);
  EXPECT_THROW(SqueezeInit::from_lambda(1.0), std::invalid_argument);
  EXPECT_THROW(SqueezeInit::from_lambda(-0.1), std::invalid_argument);
  EXPECT_THROW(SqueezeInit::from_r(-1.0), std::invalid_argument);
}

TEST(GrowthFactors, Examples) {
  auto g = growth_factors(BathParams(1.5, 0.5), 0.0);
  EXPECT_EQ(g.eta, 1.0);
  EXPECT_EQ(g.gbar, 0.0);

  g = growth_factors(BathParams(1.0, 1.0), 0.25);
  EXPECT_EQ(g.eta, 1.0);
  EXPECT_NEAR(g.gbar, 1.0, 1e-15);

  g = growth_factors(BathParams(0.0, 1.0), 0.5);
  EXPECT_NEAR(g.eta, std::exp(-1.0), 1e-15);
  EXPECT_NEAR(g.gbar, 1.0 - std::exp(-1.0), 1e-15);

  EXPECT_THROW(growth_factors(BathParams(0.0, 1.0), -1.0), std::invalid_argument);
}

TEST(TmsvCoeffs, Examples) {
  const auto vac = tmsv_coeffs(SqueezeInit::from_r(0.0));
  EXPECT_DOUBLE_EQ(vac.a, 0.5);
  EXPECT_EQ(vac.b, 0.0);
  EXPECT_EQ(vac.c, 0.0);
  EXPECT_EQ(vac.d, 0.0);
  EXPECT_NEAR(vac.xi, 1.0 / std::numbers::pi, 1e-15);

  const double lam = 0.2;
  const auto k = tmsv_coeffs(SqueezeInit::from_lambda(lam));
  EXPECT_NEAR(k.a, 0.5 * (1 + lam * lam) / (1 - lam * lam), 1e-14);
  EXPECT_NEAR(k.b, 2 * lam / (1 - lam * lam), 1e-14);
  EXPECT_NEAR(4 * k.a * k.a - k.b * k.b, 1.0, 1e-13);
  EXPECT_NEAR(k.xi, 1.0 / std::numbers::pi, 1e-14);
}

TEST(SecondMoments, Examples) {
  const auto k = tmsv_coeffs(SqueezeInit::from_lambda(0.2));
  auto mom = second_moments(k, BathParams(0.7, 0.3), 0.0);
  EXPECT_NEAR(mom.xx, k.a, 1e-14);
  EXPECT_NEAR(mom.xy, k.b / 2, 1e-14);

  const auto frozen = second_moments(k, BathParams(0, 0), 3.0);
  EXPECT_NEAR(frozen.xx, mom.xx, 1e-15);
  EXPECT_NEAR(frozen.xy, mom.xy, 1e-15);

  const auto late = second_moments(k, BathParams(0, 1), 40.0);
  EXPECT_NEAR(late.xx, 0.5, 1e-12);
  EXPECT_NEAR(late.xy, 0.0, 1e-12);
}

TEST(EvolveCoefficients, IdentityAtZero) {
  const auto k = tmsv_coeffs(SqueezeInit::from_lambda(0.2));
  const auto e = evolve_coefficients(k, BathParams(1.5, 0.5), 0.0);
  EXPECT_NEAR(e.a, k.a, 1e-15);
  EXPECT_NEAR(e.b, k.b, 1e-15);
  EXPECT_NEAR(e.c, k.c, 1e-15);
  EXPECT_NEAR(e.d, k.d, 1e-15);
  EXPECT_NEAR(e.xi, k.xi, 1e-15);
}

TEST(EvolveCoefficients, MatchesOdeAtExample) {
  const auto k = tmsv_coeffs(SqueezeInit::from_lambda(0.2));
  const BathParams bath(1.5, 0.5);
  const auto e = evolve_coefficients(k, bath, 0.1);
  const auto o = oracle::rk4_coefficients(k, bath, 0.1, 2000);
  EXPECT_NEAR(e.a, o.a, 1e-8);
  EXPECT_NEAR(e.b, o.b, 1e-8);
  EXPECT_NEAR(e.c, o.c, 1e-8);
  EXPECT_NEAR(e.d, o.d, 1e-8);
}

TEST(EvolveCoefficients, ThermalLimit) {
  const auto k = tmsv_coeffs(SqueezeInit::from_lambda(0.2));
  const auto bath = BathParams::thermal(1.0, 1.0);
  const auto e = evolve_coefficients(k, bath, 60.0);
  EXPECT_NEAR(e.b, 0.0, 1e-12);
  EXPECT_NEAR(e.d, 0.0, 1e-12);
  const auto mom = moments_of(e);
  // n_th = 1 thermal state: <x^2> = n_th + 1/2.
  EXPECT_NEAR(mom.xx, 1.5, 1e-10);
  EXPECT_NEAR(mom.xy, 0.0, 1e-12);
}

TEST(EvolveCoefficients, XiConsistency) {
  const auto k = tmsv_coeffs(SqueezeInit::from_lambda(0.5));
  for (double t : {0.0, 0.1, 0.5, 2.0}) {
    const auto e = evolve_coefficients(k, BathParams(1.2, 0.4), t);
    EXPECT_NEAR(e.xi, normalization(e.a, e.b, e.c, e.d), 1e-12);
  }
}

TEST(EvolveCoefficients, RandomOdeAgreement) {
  std::mt19937_64 rng(20241015);
  std::uniform_real_distribution<double> rate(0.0, 2.0);
  std::uniform_real_distribution<double> lam(0.05, 0.8);
  std::uniform_real_distribution<double> time(0.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const BathParams bath(rate(rng), rate(rng));
    const auto init = tmsv_coeffs(SqueezeInit::from_lambda(lam(rng)));
    const double t = time(rng);
    const auto e = evolve_coefficients(init, bath, t);
    const auto o = oracle::rk4_coefficients(init, bath, t, 4000);
    EXPECT_NEAR(e.a, o.a, tol::kOdeAgreement) << trial;
    EXPECT_NEAR(e.b, o.b, tol::kOdeAgreement) << trial;
    EXPECT_NEAR(e.c, o.c, tol::kOdeAgreement) << trial;
    EXPECT_NEAR(e.d, o.d, tol::kOdeAgreement) << trial;
  }
}

TEST(EvolveCoefficients, ProductInvariantAlongTrajectory) {
  for (double lam : {0.1, 0.5, 0.9}) {
    const auto init = tmsv_coeffs(SqueezeInit::from_lambda(lam));
    for (const BathParams& bath : {BathParams(0, 1), BathParams(1.5, 0.5), BathParams(1, 1)}) {
      for (int i = 0; i <= 50; ++i) {
        const auto ab = alpha_beta(evolve_coefficients(init, bath, 0.04 * i));
        EXPECT_NEAR(ab.alpha1 * ab.beta1, 1.0 / 16, tol::kProductInvariant);
        EXPECT_NEAR(ab.alpha2 * ab.beta2, 1.0 / 16, tol::kProductInvariant);
      }
    }
  }
}

TEST(EvolveCoefficients, GainEqualsLossContinuity) {
  const auto init = tmsv_coeffs(SqueezeInit::from_lambda(0.4));
  const double eps = 1e-6;
  for (double t : {0.1, 0.7}) {
    const auto mid = evolve_coefficients(init, BathParams(1.0, 1.0), t);
    for (double sign : {-1.0, 1.0}) {
      const auto side = evolve_coefficients(init, BathParams(1.0 + sign * eps, 1.0), t);
      EXPECT_NEAR(side.a, mid.a, 1e-4);
      EXPECT_NEAR(side.b, mid.b, 1e-4);
      EXPECT_NEAR(side.c, mid.c, 1e-4);
      EXPECT_NEAR(side.d, mid.d, 1e-4);
    }
  }
}

TEST(CoefficientOde, FixedPoints) {
  GaussianCoeffs vac = tmsv_coeffs(SqueezeInit::from_r(0.0));
  const auto r = coefficient_ode_rhs(vac, BathParams(0, 1));
  EXPECT_NEAR(r.da, 0, 1e-15);
  EXPECT_NEAR(r.db, 0, 1e-15);
  EXPECT_NEAR(r.dc, 0, 1e-15);
  EXPECT_NEAR(r.dd, 0, 1e-15);

  const auto k = tmsv_coeffs(SqueezeInit::from_lambda(0.2));
  const auto z = coefficient_ode_rhs(k, BathParams(0, 0));
  EXPECT_EQ(z.da, 0.0);
  EXPECT_EQ(z.db, 0.0);
  EXPECT_EQ(z.dc, 0.0);
  EXPECT_EQ(z.dd, 0.0);
}

TEST(CoefficientOde, MatchesFiniteDifferenceOfClosedForm) {
  const auto k = tmsv_coeffs(SqueezeInit::from_lambda(0.2));
  const BathParams bath(0, 1);
  const double h = 1e-5;
  // Forward samples at t0 + h and t0 - h around an interior point.
  const double t0 = 2e-5;
  const auto base = evolve_coefficients(k, bath, t0);
  const auto p = evolve_coefficients(k, bath, t0 + h);
  const auto m = evolve_coefficients(k, bath, t0 - h);
  const auto r = coefficient_ode_rhs(base, bath);
  EXPECT_NEAR(r.da, (p.a - m.a) / (2 * h), 1e-6);
  EXPECT_NEAR(r.db, (p.b - m.b) / (2 * h), 1e-6);
  EXPECT_NEAR(r.dc, (p.c - m.c) / (2 * h), 1e-6);
  EXPECT_NEAR(r.dd, (p.d - m.d) / (2 * h), 1e-6);
}

TEST(AlphaBeta, Examples) {
  const auto ab = alpha_beta(tmsv_coeffs(SqueezeInit::from_lambda(0.2)));
  EXPECT_NEAR(ab.alpha1, 1.0 / 6.0, 1e-14);
  EXPECT_NEAR(ab.beta1, 0.375, 1e-14);
  EXPECT_NEAR(ab.alpha2, 0.375, 1e-14);
  EXPECT_NEAR(ab.beta2, 1.0 / 6.0, 1e-14);

  const auto v = alpha_beta(tmsv_coeffs(SqueezeInit::from_r(0)));
  EXPECT_DOUBLE_EQ(v.alpha1, 0.25);
  EXPECT_DOUBLE_EQ(v.beta1, 0.25);
  EXPECT_DOUBLE_EQ(v.alpha2, 0.25);
  EXPECT_DOUBLE_EQ(v.beta2, 0.25);
}

TEST(AlphaBeta, RejectsNonPhysical) {
  GaussianCoeffs bad{0.1, 1.0, 0.0, 0.0, 0.0};
  EXPECT_THROW(alpha_beta(bad), NonPhysicalState);
  EXPECT_THROW(GaussianCoeffs::from_exponents(0.1, 1.0, 0.0, 0.0), NonPhysicalState);
}

TEST(CriticalTime, ClosedForms) {
  const auto s = SqueezeInit::from_lambda(0.2);
  const auto a = critical_time(BathParams(1.5, 0.5), s);
  ASSERT_TRUE(a.has_value());
  EXPECT_NEAR(*a, 0.5 * std::log(1.125), 1e-15);
  const auto b = critical_time(BathParams(1.0, 1.0), s);
  ASSERT_TRUE(b.has_value());
  EXPECT_NEAR(*b, 0.2 / 2.4, 1e-15);
  EXPECT_FALSE(critical_time(BathParams(0.0, 1.0), s).has_value());
  const auto z = critical_time(BathParams(1.0, 1.0), SqueezeInit::from_lambda(0.0));
  ASSERT_TRUE(z.has_value());
  EXPECT_EQ(*z, 0.0);
}

TEST(CriticalTime, AgreesWithBisection) {
  for (const BathParams& bath : {BathParams(1.5, 0.5), BathParams(1, 1), BathParams(0.2, 2.0), BathParams(5, 0.1)}) {
    const auto init = SqueezeInit::from_lambda(0.3);
    const auto k = tmsv_coeffs(init);
    const auto tc = critical_time(bath, init);
    ASSERT_TRUE(tc.has_value());
    const double root = oracle::bisect(
        [&](double t) {
          const auto e = evolve_coefficients(k, bath, t);
          return e.b - e.c;
        },
        0.0, 4 * *tc, 1e-13);
    EXPECT_NEAR(root, *tc, 1e-10);
  }
}

TEST(CriticalTime, StronglyAmplifyingStaysFinite) {
  for (double lam : {1e-3, 0.01, 0.05}) {
    const auto tc = critical_time(BathParams(50.0, 0.01), SqueezeInit::from_lambda(lam));
    ASSERT_TRUE(tc.has_value());
    EXPECT_GT(*tc, 0.0);
    EXPECT_TRUE(std::isfinite(*tc));
  }
}

TEST(CriticalTime, SignOfBMinusC) {
  const auto init = SqueezeInit::from_lambda(0.2);
  const BathParams bath(1.5, 0.5);
  const double tc = *critical_time(bath, init);
  const auto k = tmsv_coeffs(init);
  for (double f : {0.1, 0.5, 0.99}) {
    const auto e = evolve_coefficients(k, bath, f * tc);
    EXPECT_GT(e.b, e.c);
  }
  const auto at = evolve_coefficients(k, bath, tc);
  EXPECT_NEAR(at.b, at.c, 1e-12);
  for (double f : {1.01, 1.5, 3.0}) {
    const auto e = evolve_coefficients(k, bath, f * tc);
    EXPECT_LT(e.b, e.c);
  }
}
