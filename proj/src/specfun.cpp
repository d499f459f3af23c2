#include "nd/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "nd/error.hpp"

namespace nd::specfun {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008;
constexpr double kPi = 3.14159265358979323846264338328;

// Below this the power/log series are used, above it backward recurrence (J)
// and the Hankel expansion (Y). Chosen so both sides stay under 1e-11
// relative error; see the Wronskian property test.
constexpr double kSeriesCut = 12.0;

double j_series(int m, double x) {
    // sum_k (-1)^k (x/2)^{m+2k} / (k! (m+k)!)
    double q = 0.25 * x * x;
    double term = 1.0;
    for (int i = 1; i <= m; ++i) term *= 0.5 * x / i;
    double sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= -q / (static_cast<double>(k) * (m + k));
        sum += term;
        if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-300)) break;
    }
    return sum;
}

// J_0..J_mmax by normalized backward recurrence (Miller's algorithm).
std::vector<double> j_backward(int m_max, double x) {
    int start = static_cast<int>(x + 1.2 * std::cbrt(x) * 12.0) + m_max + 20;
    std::vector<double> j(start + 2, 0.0);
    j[start + 1] = 0.0;
    j[start] = 1e-300;
    for (int k = start; k >= 1; --k) {
        j[k - 1] = (2.0 * k / x) * j[k] - j[k + 1];
        if (std::abs(j[k - 1]) > 1e250) {
            for (int i = k - 1; i <= start + 1; ++i) j[i] *= 1e-250;
        }
    }
    // normalization: J0 + 2 J2 + 2 J4 + ... = 1
    double norm = j[0];
    for (int k = 2; k <= start; k += 2) norm += 2.0 * j[k];
    j.resize(m_max + 1);
    for (double& v : j) v /= norm;
    return j;
}

// Y0 and Y1 through the logarithmic series; x below the switchover.
void y01_series(double x, double& y0, double& y1) {
    double q = 0.25 * x * x;
    double lg = std::log(0.5 * x) + kEulerGamma;
    double j0 = j_series(0, x), j1 = j_series(1, x);

    // Y0 = (2/pi)[ lg*J0 + sum_{k>=1} (-1)^{k+1} H_k q^k/(k!)^2 ]
    double sum0 = 0.0, hk = 0.0, term = 1.0;
    for (int k = 1; k < 200; ++k) {
        hk += 1.0 / k;
        term *= q / (static_cast<double>(k) * k);
        double c = (k % 2 == 1 ? 1.0 : -1.0) * hk * term;
        sum0 += c;
        if (std::abs(c) < 1e-18 * (std::abs(sum0) + 1e-300)) break;
    }
    y0 = (2.0 / kPi) * (lg * j0 + sum0);

    // Y1 = (2/pi)(lg*J1) - 2/(pi x) - (x/(2 pi)) sum_k (-1)^k (H_k + H_{k+1}) q^k/(k!(k+1)!)
    double sum1 = 0.0;
    double ha = 0.0, hb = 1.0;  // H_0, H_1
    term = 1.0;                 // q^k/(k!(k+1)!) at k=0
    for (int k = 0; k < 200; ++k) {
        if (k > 0) {
            term *= q / (static_cast<double>(k) * (k + 1));
            ha += 1.0 / k;
            hb += 1.0 / (k + 1);
        }
        double c = ((k % 2 == 0) ? 1.0 : -1.0) * (ha + hb) * term;
        sum1 += c;
        if (std::abs(c) < 1e-18 * (std::abs(sum1) + 1e-300) && k > 2) break;
    }
    y1 = (2.0 / kPi) * lg * j1 - 2.0 / (kPi * x) - (x / (2.0 * kPi)) * sum1;
}

// Hankel asymptotic expansion with optimal truncation; valid for x above the
// switchover where the smallest term is < 1e-12.
void jy_asymptotic(int m, double x, double& jv, double& yv) {
    double mu = 4.0 * m * m;
    double p = 1.0, q = 0.0;
    double term = 1.0;
    double prev = 1e300;
    for (int k = 1; k < 60; ++k) {
        double num = mu - (2.0 * k - 1.0) * (2.0 * k - 1.0);
        term *= num / (k * 8.0 * x);
        double mag = std::abs(term);
        if (mag > prev) break;  // optimal truncation
        prev = mag;
        if (k % 2 == 1) {
            q += (((k - 1) / 2) % 2 == 0 ? 1.0 : -1.0) * term;
        } else {
            p += ((k / 2) % 2 == 0 ? 1.0 : -1.0) * term;
        }
        if (mag < 1e-19) break;
    }
    double chi = x - (0.5 * m + 0.25) * kPi;
    double amp = std::sqrt(2.0 / (kPi * x));
    double c = std::cos(chi), s = std::sin(chi);
    jv = amp * (p * c - q * s);
    yv = amp * (p * s + q * c);
}

// Signed J for any integer order via J_{-m} = (-1)^m J_m.
double j_signed(int m, double x) {
    int am = std::abs(m);
    double v = bessel_j(am, x);
    return (m < 0 && am % 2 == 1) ? -v : v;
}

double y_signed(int m, double x) {
    int am = std::abs(m);
    double v = bessel_y(am, x);
    return (m < 0 && am % 2 == 1) ? -v : v;
}

}  // namespace

double bessel_j(int m, double x) {
    if (m < 0) throw Error(ErrorCode::Parameter, "bessel_j: order must be >= 0");
    if (x < 0) throw Error(ErrorCode::Parameter, "bessel_j: x must be >= 0");
    if (x == 0.0) return m == 0 ? 1.0 : 0.0;
    if (x < kSeriesCut) return j_series(m, x);
    return j_backward(m, x)[m];
}

double bessel_y(int m, double x) {
    if (m < 0) throw Error(ErrorCode::Parameter, "bessel_y: order must be >= 0");
    if (x <= 0) throw Error(ErrorCode::Parameter, "bessel_y: x must be > 0");
    double y0, y1;
    if (x < kSeriesCut) {
        y01_series(x, y0, y1);
    } else {
        double jv;
        jy_asymptotic(0, x, jv, y0);
        jy_asymptotic(1, x, jv, y1);
    }
    if (m == 0) return y0;
    if (m == 1) return y1;
    // upward recurrence, stable for Y
    double ym1 = y0, ym = y1;
    for (int k = 1; k < m; ++k) {
        double next = (2.0 * k / x) * ym - ym1;
        ym1 = ym;
        ym = next;
    }
    return ym;
}

BesselEval bessel(BesselKind kind, int m, double x) {
    BesselEval e;
    e.order = m;
    e.x = x;
    if (kind == BesselKind::J) {
        e.value = bessel_j(m, x);
        e.d1 = 0.5 * (j_signed(m - 1, x) - j_signed(m + 1, x));
        e.d2 = 0.25 * (j_signed(m - 2, x) - 2.0 * e.value + j_signed(m + 2, x));
    } else {
        e.value = bessel_y(m, x);
        e.d1 = 0.5 * (y_signed(m - 1, x) - y_signed(m + 1, x));
        e.d2 = 0.25 * (y_signed(m - 2, x) - 2.0 * e.value + y_signed(m + 2, x));
    }
    return e;
}

double bessel_root(int m, int k) {
    if (m < 0 || k < 1) throw Error(ErrorCode::Parameter, "bessel_root: need m >= 0, k >= 1");
    // McMahon first guess, then walk to a sign change and bisect.
    double beta = (k + 0.5 * m - 0.25) * kPi;
    double guess = beta - (4.0 * m * m - 1.0) / (8.0 * beta);
    double step = 0.5;
    double lo = std::max(guess - 1.0, 1e-3);
    // find bracket around the k-th zero: scan from below the guess
    double a = lo, fa = bessel_j(m, a);
    double b = a;
    int crossings = 0;
    // count zeros from 0 up to make sure we land on the k-th one
    a = 1e-3;
    fa = bessel_j(m, a);
    double x = a;
    double target_hi = guess + 3.0;
    while (x < target_hi + 20.0) {
        double xn = x + step;
        double fn = bessel_j(m, xn);
        if (fa == 0.0) return x;
        if (fa * fn < 0.0) {
            ++crossings;
            if (crossings == k) {
                a = x;
                b = xn;
                break;
            }
        }
        x = xn;
        fa = fn;
    }
    if (crossings < k) throw Error(ErrorCode::Search, "bessel_root: bracket not found");
    // bisection then Newton polish
    double fa2 = bessel_j(m, a);
    for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (a + b);
        double fm = bessel_j(m, mid);
        if (fa2 * fm <= 0.0) {
            b = mid;
        } else {
            a = mid;
            fa2 = fm;
        }
        if (b - a < 1e-14 * b) break;
    }
    double r = 0.5 * (a + b);
    for (int it = 0; it < 4; ++it) {
        BesselEval e = bessel(BesselKind::J, m, r);
        if (e.d1 == 0.0) break;
        r -= e.value / e.d1;
    }
    return r;
}

double annulus_radial_root(double a, int k) {
    if (!(a > 0.0 && a < 1.0)) throw Error(ErrorCode::Parameter, "annulus_radial_root: need 0 < a < 1");
    if (k < 1) throw Error(ErrorCode::Parameter, "annulus_radial_root: need k >= 1");
    auto cross = [a](double kap) {
        return bessel_j(0, kap * a) * bessel_y(0, kap) - bessel_j(0, kap) * bessel_y(0, kap * a);
    };
    // roots approach k*pi/(1-a) in the thin limit; scan with a step well below
    // the expected spacing
    double spacing = kPi / (1.0 - a);
    double step = spacing / 40.0;
    double x = std::max(0.05, 0.2 * spacing);
    double fx = cross(x);
    int crossings = 0;
    double lo = 0, hi = 0;
    double x_max = (k + 2.0) * spacing + 10.0;
    while (x < x_max) {
        double xn = x + step;
        double fn = cross(xn);
        if (fx * fn < 0.0) {
            ++crossings;
            if (crossings == k) {
                lo = x;
                hi = xn;
                break;
            }
        }
        x = xn;
        fx = fn;
    }
    if (crossings < k) throw Error(ErrorCode::Search, "annulus_radial_root: no bracket in scan window");
    double flo = cross(lo);
    for (int it = 0; it < 100; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = cross(mid);
        if (flo * fm <= 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
        if (hi - lo < 1e-14 * hi) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace nd::specfun
