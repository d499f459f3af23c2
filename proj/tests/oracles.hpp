#pragma once

// Test-side reference implementations, independent of the library code paths.
// Everything here runs in long double with direct series / asymptotics and is
// used to compute expected values that the tests freeze or assert against.

#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

inline constexpr long double kPiL = 3.141592653589793238462643383279503L;
inline constexpr long double kGammaL = 0.577215664901532860606512090082402L;

// J_m(x) by direct power series in long double; good to ~1e-12 for x <= 22.
inline long double besselj_series(int m, long double x) {
    long double q = 0.25L * x * x;
    long double term = 1.0L;
    for (int i = 1; i <= m; ++i) term *= 0.5L * x / i;
    long double sum = term;
    for (int k = 1; k < 400; ++k) {
        term *= -q / (static_cast<long double>(k) * (m + k));
        sum += term;
        if (std::abs(term) < 1e-24L * (std::abs(sum) + 1e-300L)) break;
    }
    return sum;
}

// Y0/Y1 by the logarithmic series in long double, x <= 22.
inline void bessely01_series(long double x, long double& y0, long double& y1) {
    long double q = 0.25L * x * x;
    long double lg = std::log(0.5L * x) + kGammaL;
    long double j0 = besselj_series(0, x), j1 = besselj_series(1, x);
    long double sum0 = 0.0L, hk = 0.0L, term = 1.0L;
    for (int k = 1; k < 400; ++k) {
        hk += 1.0L / k;
        term *= q / (static_cast<long double>(k) * k);
        long double c = (k % 2 == 1 ? 1.0L : -1.0L) * hk * term;
        sum0 += c;
        if (std::abs(c) < 1e-24L * (std::abs(sum0) + 1e-300L)) break;
    }
    y0 = (2.0L / kPiL) * (lg * j0 + sum0);
    long double sum1 = 0.0L, ha = 0.0L, hb = 1.0L;
    term = 1.0L;
    for (int k = 0; k < 400; ++k) {
        if (k > 0) {
            term *= q / (static_cast<long double>(k) * (k + 1));
            ha += 1.0L / k;
            hb += 1.0L / (k + 1);
        }
        long double c = ((k % 2 == 0) ? 1.0L : -1.0L) * (ha + hb) * term;
        sum1 += c;
        if (std::abs(c) < 1e-24L * (std::abs(sum1) + 1e-300L) && k > 2) break;
    }
    y1 = (2.0L / kPiL) * lg * j1 - 2.0L / (kPiL * x) - (x / (2.0L * kPiL)) * sum1;
}

// Hankel expansion at optimal truncation, long double, for x > 22.
inline void besseljy_asym(int m, long double x, long double& jv, long double& yv) {
    long double mu = 4.0L * m * m;
    long double p = 1.0L, q = 0.0L, term = 1.0L, prev = 1e300L;
    for (int k = 1; k < 80; ++k) {
        long double num = mu - (2.0L * k - 1.0L) * (2.0L * k - 1.0L);
        term *= num / (k * 8.0L * x);
        long double mag = std::abs(term);
        if (mag > prev) break;
        prev = mag;
        if (k % 2 == 1)
            q += (((k - 1) / 2) % 2 == 0 ? 1.0L : -1.0L) * term;
        else
            p += ((k / 2) % 2 == 0 ? 1.0L : -1.0L) * term;
        if (mag < 1e-26L) break;
    }
    long double chi = x - (0.5L * m + 0.25L) * kPiL;
    long double amp = std::sqrt(2.0L / (kPiL * x));
    jv = amp * (p * std::cos(chi) - q * std::sin(chi));
    yv = amp * (p * std::sin(chi) + q * std::cos(chi));
}

inline long double besselj_ref(int m, long double x) {
    if (x == 0.0L) return m == 0 ? 1.0L : 0.0L;
    if (x <= 22.0L) return besselj_series(m, x);
    long double j, y;
    besseljy_asym(m, x, j, y);
    return j;
}

inline long double bessely_ref(int m, long double x) {
    long double y0, y1;
    if (x <= 22.0L) {
        bessely01_series(x, y0, y1);
    } else {
        long double j;
        besseljy_asym(0, x, j, y0);
        besseljy_asym(1, x, j, y1);
    }
    if (m == 0) return y0;
    if (m == 1) return y1;
    long double a = y0, b = y1;
    for (int k = 1; k < m; ++k) {
        long double c = (2.0L * k / x) * b - a;
        a = b;
        b = c;
    }
    return b;
}

// Bisection of a long double function with a verified sign change.
inline long double bisect(const std::function<long double(long double)>& f, long double lo,
                          long double hi, int iters = 120) {
    long double flo = f(lo);
    for (int i = 0; i < iters; ++i) {
        long double mid = 0.5L * (lo + hi);
        long double fm = f(mid);
        if (flo * fm <= 0.0L)
            hi = mid;
        else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5L * (lo + hi);
}

// k-th positive zero of J_m via series bisection (valid while the root < 22).
inline long double besselj_zero_ref(int m, int k) {
    long double step = 0.05L;
    long double x = 0.05L, fx = besselj_series(m, x);
    int crossings = 0;
    while (x < 21.0L) {
        long double xn = x + step, fn = besselj_series(m, xn);
        if (fx * fn < 0.0L) {
            ++crossings;
            if (crossings == k)
                return bisect([m](long double t) { return besselj_series(m, t); }, x, xn);
        }
        x = xn;
        fx = fn;
    }
    return -1.0L;
}

}  // namespace oracle
