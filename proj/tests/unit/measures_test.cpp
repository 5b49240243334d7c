#include <gtest/gtest.h>

#include <cmath>

#include "tmsv/fock.hpp"
#include "tmsv/gaussian.hpp"
#include "tmsv/measures.hpp"
#include "tmsv/spectral.hpp"

using namespace tmsv;

TEST(Negativity, InitialValue) {
  for (double lam : {0.2, 0.5, 0.8}) {
    EXPECT_NEAR(negativity(tmsv_coeffs(SqueezeInit::from_lambda(lam))), lam / (1 - lam), 1e-12);
  }
  EXPECT_EQ(negativity(tmsv_coeffs(SqueezeInit::from_r(0))), 0.0);
}

TEST(Negativity, ZeroFromCriticalTime) {
  const BathParams bath(1.5, 0.5);
  const auto init = SqueezeInit::from_lambda(0.2);
  const auto k0 = tmsv_coeffs(init);
  const double tc = *critical_time(bath, init);
  EXPECT_NEAR(negativity(evolve_coefficients(k0, bath, tc)), 0.0, 1e-10);
  for (double f : {1.1, 2.0, 10.0}) {
    EXPECT_EQ(negativity(evolve_coefficients(k0, bath, f * tc)), 0.0);
    for (int s = 0; s <= 10; ++s) EXPECT_EQ(sub_negativity(evolve_coefficients(k0, bath, f * tc), s), 0.0);
  }
}

TEST(Negativity, MonotoneUnderPureLoss) {
  const BathParams bath(0, 1);
  const auto k0 = tmsv_coeffs(SqueezeInit::from_lambda(0.5));
  double prev = negativity(k0);
  for (int i = 1; i < 200; ++i) {
    const double n = negativity(evolve_coefficients(k0, bath, 3.0 * i / 199));
    EXPECT_LE(n, prev + 1e-12);
    EXPECT_GT(n, 0.0);
    prev = n;
  }
}

TEST(SubNegativity, Examples) {
  const auto k = tmsv_coeffs(SqueezeInit::from_lambda(0.2));
  EXPECT_EQ(sub_negativity(k, 0), 0.0);
  EXPECT_NEAR(sub_negativity(k, 1), 0.192, 1e-15);
  EXPECT_NEAR(sub_negativity(k, 2), 0.0384, 1e-15);
}

TEST(SubNegativity, EqualsOddEigenvalueSum) {
  const auto k = evolve_coefficients(tmsv_coeffs(SqueezeInit::from_lambda(0.4)), BathParams(0.8, 0.6), 0.05);
  for (int s = 0; s <= 12; ++s) {
    const auto spectrum = block_spectrum(k, s).eigenvalues;
    double sum = 0;
    for (int n = 1; n <= s; n += 2) sum += std::abs(spectrum[static_cast<std::size_t>(n)]);
    EXPECT_NEAR(sub_negativity(k, s), sum, 1e-14);
  }
}

TEST(SubNegativity, PartialSumsConverge) {
  const auto k = evolve_coefficients(tmsv_coeffs(SqueezeInit::from_lambda(0.2)), BathParams(0.2, 1), 0.1);
  double partial = 0;
  for (int s = 0; s <= 30; ++s) {
    partial += sub_negativity(k, s);
    EXPECT_LE(partial, negativity(k) + 1e-15);
  }
  EXPECT_NEAR(partial, negativity(k), 1e-12);
}

TEST(NumericalNegativity, InitialAndThermal) {
  const auto pt = partial_transpose(tmsv_fock_state(SqueezeInit::from_lambda(0.2), 30));
  EXPECT_NEAR(numerical_negativity(pt, 30), 0.25, 1e-9);
  EXPECT_EQ(numerical_negativity(thermal_fock_state(1.0, 10, true), 10), 0.0);
  EXPECT_THROW(numerical_negativity(tmsv_fock_state(SqueezeInit::from_lambda(0.2), 10), 5), std::invalid_argument);
}

TEST(NumericalNegativity, TracksClosedFormUnderLoss) {
  const BathParams bath(0, 1);
  const auto init = SqueezeInit::from_lambda(0.2);
  const int nmax = 25;
  auto pt = partial_transpose(tmsv_fock_state(init, nmax));
  const double dt = max_stable_step(bath, nmax);
  double t = 0;
  for (int i = 1; i <= 10; ++i) {
    const double next = 0.2 * i;
    pt = integrate(std::move(pt), bath, next - t, dt);
    t = next;
    EXPECT_NEAR(numerical_negativity(pt, nmax), negativity(evolve_coefficients(tmsv_coeffs(init), bath, t)), 1e-6);
  }
}

TEST(NegativityReport, Fields) {
  const auto k = tmsv_coeffs(SqueezeInit::from_lambda(0.2));
  const auto rep = negativity_report(k, 0.0, 4);
  EXPECT_EQ(rep.t, 0.0);
  EXPECT_NEAR(rep.total, 0.25, 1e-14);
  ASSERT_EQ(rep.per_block.size(), 5u);
  for (int s = 0; s <= 4; ++s) EXPECT_EQ(rep.per_block[static_cast<std::size_t>(s)].s, s);
  EXPECT_FALSE(rep.numeric_total.has_value());
}
