#pragma once

#include <cstdint>

namespace nd::specfun {

// Bessel function value with first and second derivative at x.
struct BesselEval {
    int order = 0;
    double x = 0.0;
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};

enum class BesselKind { J, Y };

/// J_m(x) for integer m >= 0, x >= 0. Power series below the switchover,
/// normalized backward recurrence above it.
double bessel_j(int m, double x);

/// Y_m(x) for integer m >= 0, x > 0. Log series for small x, optimally
/// truncated Hankel expansion for large x, upward recurrence in the order.
double bessel_y(int m, double x);

/// Value plus first/second derivative via the three-term neighbor formulas.
BesselEval bessel(BesselKind kind, int m, double x);

/// k-th positive zero of J_m, residual below 1e-12.
double bessel_root(int m, int k);

/// k-th root of the radial cross product J0(ka)Y0(k) - J0(k)Y0(ka) = 0,
/// the Dirichlet radial eigenvalue condition for the annulus a < r < 1.
double annulus_radial_root(double a, int k);

}  // namespace nd::specfun
