#pragma once

#include <optional>

namespace tmsv {

/// Phase-insensitive bath acting identically on both modes.
///
/// The loss rate damps each mode and the gain rate amplifies it; both have
/// dimension 1/time. gain == loss == 0 is allowed and freezes the evolution.
class BathParams {
 public:
  BathParams() = default;
  BathParams(double gain, double loss);

  /// Thermal bath with amplitude decay gamma/2 and mean occupation n_thermal:
  /// gain = gamma*n/2, loss = gamma*(n+1)/2.
  static BathParams thermal(double gamma, double n_thermal);

  double gain() const { return gain_; }
  double loss() const { return loss_; }

 private:
  double gain_ = 0.0;
  double loss_ = 0.0;
};

/// Two-mode squeezing strength. r and lambda = tanh(r) are kept in lockstep.
class SqueezeInit {
 public:
  static SqueezeInit from_r(double r);
  static SqueezeInit from_lambda(double lambda);

  double r() const { return r_; }
  double lambda() const { return lambda_; }

 private:
  SqueezeInit(double r, double lambda) : r_(r), lambda_(lambda) {}
  double r_;
  double lambda_;
};

/// Exponents of the real mode-symmetric Gaussian
///   rho(x1,y1;x2,y2) = xi * exp[-a(x1^2+x2^2+y1^2+y2^2) + b(x1 y1 + x2 y2)
///                               + c(x1 x2 + y1 y2) + d(x1 y2 + x2 y1)]
/// with xi = sqrt((2a-c)^2 - (b+d)^2) / pi.
struct GaussianCoeffs {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double xi = 0.0;

  /// Builds the coefficients and derives xi. Throws NonPhysicalState when
  /// (2a-c)^2 <= (b+d)^2.
  static GaussianCoeffs from_exponents(double a, double b, double c, double d);
};

/// Normalization factor for the given exponents (without validation).
double normalization(double a, double b, double c, double d);

struct AlphaBeta {
  double alpha1 = 0.0;
  double beta1 = 0.0;
  double alpha2 = 0.0;
  double beta2 = 0.0;
};

/// <x^2> and <xy> of the (mode-symmetric) state.
struct SecondMoments {
  double xx = 0.0;
  double xy = 0.0;
};

struct GrowthFactors {
  double eta = 1.0;   // exp(2(G-L)t)
  double gbar = 0.0;  // (G+L)/(G-L) * (eta - 1), continued to 2(G+L)t at G == L
};

struct CoefficientRates {
  double da = 0.0;
  double db = 0.0;
  double dc = 0.0;
  double dd = 0.0;
};

namespace tol {
// Agreement between the closed-form coefficients and an RK4 solution of the
// coefficient ODE.
inline constexpr double kOdeAgreement = 1e-7;
// alpha1*beta1 and alpha2*beta2 stay at 1/16 along a TMSV trajectory.
inline constexpr double kProductInvariant = 1e-10;
// Stored xi versus xi recomputed from the exponents.
inline constexpr double kNormalization = 1e-12;
}  // namespace tol

GrowthFactors growth_factors(const BathParams& bath, double t);

/// Coefficients of the two-mode squeezed vacuum: a = cosh(2r)/2, b = sinh(2r).
GaussianCoeffs tmsv_coeffs(const SqueezeInit& init);

/// Second moments encoded by a set of coefficients (t = 0 moments of an
/// evolution started from `coeffs`).
SecondMoments moments_of(const GaussianCoeffs& coeffs);

SecondMoments second_moments(const GaussianCoeffs& init, const BathParams& bath, double t);

/// Closed-form evolution of the coefficients under the bath.
///
/// Valid for initial states with <a^2> = <b^2> = <a^dag b> = 0 (the TMSV
/// family); callers starting from other Gaussians own that condition.
GaussianCoeffs evolve_coefficients(const GaussianCoeffs& init, const BathParams& bath, double t);

/// Time derivatives of (a, b, c, d) under the bath. Test oracle only; the
/// production path is evolve_coefficients.
CoefficientRates coefficient_ode_rhs(const GaussianCoeffs& coeffs, const BathParams& bath);

/// The four linear combinations that diagonalize the partially transposed
/// Gaussian. Throws NonPhysicalState if any is <= 0.
AlphaBeta alpha_beta(const GaussianCoeffs& coeffs);

/// Time at which every negative PPT eigenvalue of an evolving TMSV vanishes.
/// Empty when gain == 0 (entanglement survives for all finite t); 0 when
/// lambda == 0 (never entangled).
std::optional<double> critical_time(const BathParams& bath, const SqueezeInit& init);

}  // namespace tmsv
