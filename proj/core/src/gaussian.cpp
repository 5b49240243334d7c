#include "tmsv/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "tmsv/error.hpp"

namespace tmsv {

namespace {

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw std::invalid_argument("time must be finite and non-negative, got " + std::to_string(t));
  }
}

}  // namespace

BathParams::BathParams(double gain, double loss) : gain_(gain), loss_(loss) {
  if (!std::isfinite(gain) || !std::isfinite(loss) || gain < 0.0 || loss < 0.0) {
    throw std::invalid_argument("bath rates must be finite and non-negative");
  }
}

BathParams BathParams::thermal(double gamma, double n_thermal) {
  if (!(gamma >= 0.0) || !(n_thermal >= 0.0)) {
    throw std::invalid_argument("thermal bath needs gamma >= 0 and n_thermal >= 0");
  }
  return BathParams(0.5 * gamma * n_thermal, 0.5 * gamma * (n_thermal + 1.0));
}

SqueezeInit SqueezeInit::from_r(double r) {
  if (!std::isfinite(r) || r < 0.0) {
    throw std::invalid_argument("squeezing parameter r must be finite and >= 0");
  }
  const double lambda = std::tanh(r);
  if (lambda >= 1.0) {
    throw std::invalid_argument("squeezing parameter r too large: tanh(r) rounds to 1");
  }
  return SqueezeInit(r, lambda);
}

SqueezeInit SqueezeInit::from_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda < 1.0)) {
    throw std::invalid_argument("lambda must lie in [0, 1)");
  }
  return SqueezeInit(std::atanh(lambda), lambda);
}

double normalization(double a, double b, double c, double d) {
  const double p = 2.0 * a - c;
  const double q = b + d;
  return std::sqrt((p - q) * (p + q)) / std::numbers::pi;
}

GaussianCoeffs GaussianCoeffs::from_exponents(double a, double b, double c, double d) {
  const double p = 2.0 * a - c;
  const double q = b + d;
  if (!(p > 0.0) || !(p * p > q * q)) {
    throw NonPhysicalState("Gaussian is not normalizable: (2a-c)^2 must exceed (b+d)^2 with 2a-c > 0");
  }
  return GaussianCoeffs{a, b, c, d, normalization(a, b, c, d)};
}

GrowthFactors growth_factors(const BathParams& bath, double t) {
  require_time(t);
  const double diff = bath.gain() - bath.loss();
  const double sum = bath.gain() + bath.loss();
  if (diff == 0.0) {
    return {1.0, 2.0 * sum * t};
  }
  const double em1 = std::expm1(2.0 * diff * t);
  return {1.0 + em1, sum / diff * em1};
}

GaussianCoeffs tmsv_coeffs(const SqueezeInit& init) {
  const double two_r = 2.0 * init.r();
  return GaussianCoeffs::from_exponents(0.5 * std::cosh(two_r), std::sinh(two_r), 0.0, 0.0);
}

SecondMoments moments_of(const GaussianCoeffs& coeffs) {
  const double p = 2.0 * coeffs.a - coeffs.c;
  const double q = coeffs.b + coeffs.d;
  const double det = (p - q) * (p + q);
  if (!(p > 0.0) || !(det > 0.0)) {
    throw NonPhysicalState("coefficients do not describe a normalizable state");
  }
  return {p / (2.0 * det), q / (2.0 * det)};
}

SecondMoments second_moments(const GaussianCoeffs& init, const BathParams& bath, double t) {
  const GrowthFactors g = growth_factors(bath, t);
  const SecondMoments m0 = moments_of(init);
  if (!(m0.xx > 0.0) || !(m0.xx * m0.xx > m0.xy * m0.xy)) {
    throw NonPhysicalState("initial second moments violate <x^2>^2 > <xy>^2");
  }
  return {m0.xx * g.eta + 0.5 * g.gbar, m0.xy * g.eta};
}

GaussianCoeffs evolve_coefficients(const GaussianCoeffs& init, const BathParams& bath, double t) {
  const GrowthFactors g = growth_factors(bath, t);
  const SecondMoments m = second_moments(init, bath, t);

  const double den = 2.0 * (m.xx - m.xy) * (m.xx + m.xy);
  if (!(den > 0.0)) {
    throw NonPhysicalState("evolved second moments are degenerate");
  }
  // 2a - c and b + d follow from the moments; 2a + c and b - d grow with eta.
  const double two_a_minus_c = m.xx / den;
  const double b_plus_d = m.xy / den;
  const double two_a_plus_c = (2.0 * init.a + init.c) * g.eta + g.gbar;
  const double b_minus_d = (init.b - init.d) * g.eta;

  return GaussianCoeffs::from_exponents(0.25 * (two_a_plus_c + two_a_minus_c),
                                        0.5 * (b_minus_d + b_plus_d),
                                        0.5 * (two_a_plus_c - two_a_minus_c),
                                        0.5 * (b_plus_d - b_minus_d));
}

CoefficientRates coefficient_ode_rhs(const GaussianCoeffs& k, const BathParams& bath) {
  const double diff = bath.gain() - bath.loss();
  const double sum = bath.gain() + bath.loss();
  const double p = 2.0 * k.a - k.c;
  const double q = k.b + k.d;
  const double pq2 = p * p + q * q;
  return {
      diff * k.c + 0.5 * sum * (1.0 - pq2),
      -2.0 * diff * k.d - 2.0 * sum * p * q,
      4.0 * diff * k.a + sum * (1.0 + pq2),
      -2.0 * diff * k.b - 2.0 * sum * p * q,
  };
}

AlphaBeta alpha_beta(const GaussianCoeffs& k) {
  const AlphaBeta ab{
      0.25 * (2.0 * k.a - k.b + k.c + k.d),
      0.25 * (2.0 * k.a + k.b - k.c + k.d),
      0.25 * (2.0 * k.a + k.b + k.c - k.d),
      0.25 * (2.0 * k.a - k.b - k.c - k.d),
  };
  if (!(ab.alpha1 > 0.0 && ab.beta1 > 0.0 && ab.alpha2 > 0.0 && ab.beta2 > 0.0)) {
    throw NonPhysicalState("alpha/beta combinations must all be positive");
  }
  return ab;
}

std::optional<double> critical_time(const BathParams& bath, const SqueezeInit& init) {
  const double lambda = init.lambda();
  if (lambda == 0.0) {
    return 0.0;
  }
  const double g = bath.gain();
  const double l = bath.loss();
  if (g == 0.0) {
    return std::nullopt;
  }
  if (g == l) {
    return lambda / (1.0 + lambda) / (2.0 * g);
  }
  // log((G + L lambda) / (G (1 + lambda))) written around 1 for accuracy near G = L.
  return std::log1p(lambda * (l - g) / (g * (1.0 + lambda))) / (2.0 * (l - g));
}

}  // namespace tmsv
