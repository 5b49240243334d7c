#pragma once

// Independent reference computations used only by the tests.

#include <functional>

#include "tmsv/fock.hpp"
#include "tmsv/gaussian.hpp"

namespace tmsv::oracle {

// Classical RK4 on the coefficient ODE, fixed step count.
GaussianCoeffs rk4_coefficients(const GaussianCoeffs& init, const BathParams& bath, double t,
                                int steps);

// One signed RK4 step of the coefficient ODE (h may be negative).
GaussianCoeffs rk4_coefficient_step(const GaussianCoeffs& init, const BathParams& bath, double h);

// Lindblad generator built from truncated ladder-operator matrices, acting on an
// un-transposed state. Operator products are dense matrix products on the
// (nmax+1)^2 dimensional two-mode space.
FockDensityMatrix ladder_lindblad_rhs(const FockDensityMatrix& rho, const BathParams& bath);

// Root of f on [lo, hi] by bisection; f(lo) and f(hi) must differ in sign.
double bisect(const std::function<double(double)>& f, double lo, double hi, double tol);

// Trapezoid rule on an n x n grid over [lo, hi]^2.
double trapezoid_2d(const std::function<double(double, double)>& f, double lo, double hi, int n);

// Analytic thermal state with mean occupation n_th per mode.
FockDensityMatrix thermal_reference(double n_th, int nmax);

}  // namespace tmsv::oracle
