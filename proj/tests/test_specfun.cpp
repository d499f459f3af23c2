#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "nd/error.hpp"
#include "nd/specfun.hpp"
#include "oracles.hpp"

using namespace nd::specfun;

namespace {
double rel_err(double got, long double want) {
    long double scale = std::max<long double>(std::abs(want), 1e-8L);
    return static_cast<double>(std::abs(got - want) / scale);
}
}  // namespace

TEST_CASE("J at trivial points") {
    auto e = bessel(BesselKind::J, 0, 0.0);
    CHECK(e.value == 1.0);
    CHECK(e.d1 == 0.0);
    CHECK(bessel_j(1, 0.0) == 0.0);
    CHECK(bessel_j(5, 0.0) == 0.0);
    // second derivative of J0 at 0 is -1/2
    CHECK(e.d2 == doctest::Approx(-0.5).epsilon(1e-14));
}

TEST_CASE("J and Y match the long double reference on [0, 60]") {
    // deliberately straddles the series/asymptotic switchover on both sides
    const double xs[] = {0.05, 0.3,  1.0,  2.5,  5.0,  8.0,  10.0, 11.5, 12.5,
                         14.0, 18.0, 22.0, 25.0, 31.0, 40.0, 49.5, 55.0, 60.0};
    for (int m = 0; m <= 6; ++m) {
        for (double x : xs) {
            CAPTURE(m);
            CAPTURE(x);
            CHECK(rel_err(bessel_j(m, x), oracle::besselj_ref(m, x)) < 1e-10);
            CHECK(rel_err(bessel_y(m, x), oracle::bessely_ref(m, x)) < 1e-10);
        }
    }
}

TEST_CASE("derivatives match reference neighbor formulas") {
    const double xs[] = {0.7, 3.3, 9.0, 15.0, 33.0};
    for (int m = 0; m <= 3; ++m) {
        for (double x : xs) {
            auto ej = bessel(BesselKind::J, m, x);
            long double jm1 = (m >= 1) ? oracle::besselj_ref(m - 1, x) : -oracle::besselj_ref(1, x);
            long double jp1 = oracle::besselj_ref(m + 1, x);
            CHECK(rel_err(ej.d1, 0.5L * (jm1 - jp1)) < 1e-9);
            // ODE: x^2 J'' + x J' + (x^2 - m^2) J = 0
            double ode = x * x * ej.d2 + x * ej.d1 + (x * x - m * m) * ej.value;
            CHECK(std::abs(ode) < 1e-8 * (1 + x * x));
            auto ey = bessel(BesselKind::Y, m, x);
            double odey = x * x * ey.d2 + x * ey.d1 + (x * x - m * m) * ey.value;
            CHECK(std::abs(odey) < 1e-8 * (1 + x * x));
        }
    }
}

TEST_CASE("Wronskian identity J_m Y_m' - J_m' Y_m = 2/(pi x) on [0.1, 50]") {
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> ux(0.1, 50.0);
    std::uniform_int_distribution<int> um(0, 5);
    for (int trial = 0; trial < 400; ++trial) {
        int m = um(rng);
        double x = ux(rng);
        auto ej = bessel(BesselKind::J, m, x);
        auto ey = bessel(BesselKind::Y, m, x);
        double w = ej.value * ey.d1 - ej.d1 * ey.value;
        double expect = 2.0 / (M_PI * x);
        CAPTURE(m);
        CAPTURE(x);
        CHECK(std::abs(w - expect) < 1e-10 * std::abs(expect));
    }
}

TEST_CASE("three-term recurrence J_{m-1} + J_{m+1} = (2m/x) J_m") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ux(0.2, 55.0);
    std::uniform_int_distribution<int> um(1, 6);
    for (int trial = 0; trial < 300; ++trial) {
        int m = um(rng);
        double x = ux(rng);
        double lhs = bessel_j(m - 1, x) + bessel_j(m + 1, x);
        double rhs = (2.0 * m / x) * bessel_j(m, x);
        double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-8});
        CHECK(std::abs(lhs - rhs) < 1e-10 * scale);
    }
}

TEST_CASE("bessel_root against series bisection oracle") {
    // expected values computed by oracle::besselj_zero_ref (long double power
    // series + bisection) and frozen here
    CHECK(bessel_root(0, 1) == doctest::Approx(2.404825557695773).epsilon(1e-13));
    CHECK(bessel_root(1, 1) == doctest::Approx(3.831705970207512).epsilon(1e-13));
    CHECK(bessel_root(0, 2) == doctest::Approx(5.520078110286311).epsilon(1e-13));
    // and live against the oracle for a wider slice
    for (int m = 0; m <= 4; ++m) {
        for (int k = 1; k <= 3; ++k) {
            long double want = oracle::besselj_zero_ref(m, k);
            REQUIRE(want > 0.0L);
            double got = bessel_root(m, k);
            CHECK(rel_err(got, want) < 1e-12);
            CHECK(std::abs(bessel_j(m, got)) < 1e-12);
        }
    }
}

TEST_CASE("root interlacing j_{m,k} < j_{m+1,k} < j_{m,k+1}") {
    for (int m = 0; m <= 4; ++m) {
        for (int k = 1; k <= 4; ++k) {
            double a = bessel_root(m, k);
            double b = bessel_root(m + 1, k);
            double c = bessel_root(m, k + 1);
            CHECK(a < b);
            CHECK(b < c);
        }
    }
}

TEST_CASE("annulus radial roots") {
    // cross product vanishes and roots increase in k
    for (double a : {0.25, 0.5}) {
        double prev = 0.0;
        for (int k = 1; k <= 3; ++k) {
            double kap = annulus_radial_root(a, k);
            CHECK(kap > prev);
            prev = kap;
            double resid = bessel_j(0, kap * a) * bessel_y(0, kap) -
                           bessel_j(0, kap) * bessel_y(0, kap * a);
            CHECK(std::abs(resid) < 1e-12);
        }
    }
    CHECK(annulus_radial_root(0.5, 1) > 6.0);
    CHECK(annulus_radial_root(0.5, 1) < 7.0);
    CHECK(annulus_radial_root(0.25, 1) > 4.0);
    CHECK(annulus_radial_root(0.25, 1) < 5.0);
}

TEST_CASE("thin annulus limit kappa_1 (1-a) -> pi") {
    double d1 = std::abs(annulus_radial_root(0.9, 1) * 0.1 - M_PI);
    double d2 = std::abs(annulus_radial_root(0.99, 1) * 0.01 - M_PI);
    CHECK(d2 < d1);
    CHECK(d2 < 0.01 * M_PI);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(bessel_y(0, 0.0), nd::Error);
    CHECK_THROWS_AS(bessel_y(0, -1.0), nd::Error);
    CHECK_THROWS_AS(bessel_j(0, -0.5), nd::Error);
    CHECK_THROWS_AS(annulus_radial_root(1.5, 1), nd::Error);
}
