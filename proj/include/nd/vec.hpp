#pragma once

#include <cmath>
#include <ostream>

namespace nd {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }

    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double cross(const Vec2& o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
    double norm2() const { return x * x + y * y; }
    double angle() const { return std::atan2(y, x); }

    Vec2 normalized() const {
        double n = norm();
        return n > 0 ? Vec2{x / n, y / n} : Vec2{0, 0};
    }
    // rotate by +90 degrees
    Vec2 perp() const { return {-y, x}; }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }
inline double dist(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

inline Vec2 rotate(const Vec2& v, double theta) {
    double c = std::cos(theta), s = std::sin(theta);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

inline std::ostream& operator<<(std::ostream& os, const Vec2& v) {
    return os << "(" << v.x << ", " << v.y << ")";
}

// Symmetric 2x2 matrix, used for Hessians.
struct SymMat2 {
    double xx = 0.0, xy = 0.0, yy = 0.0;

    SymMat2() = default;
    SymMat2(double xx_, double xy_, double yy_) : xx(xx_), xy(xy_), yy(yy_) {}

    Vec2 operator*(const Vec2& v) const { return {xx * v.x + xy * v.y, xy * v.x + yy * v.y}; }
    SymMat2 operator+(const SymMat2& o) const { return {xx + o.xx, xy + o.xy, yy + o.yy}; }
    SymMat2 operator*(double s) const { return {xx * s, xy * s, yy * s}; }
    SymMat2& operator+=(const SymMat2& o) { xx += o.xx; xy += o.xy; yy += o.yy; return *this; }

    double trace() const { return xx + yy; }
    double det() const { return xx * yy - xy * xy; }
    double frobenius() const { return std::sqrt(xx * xx + 2 * xy * xy + yy * yy); }

    // Eigenvalues sorted ascending, with unit eigenvectors.
    void eigen(double& l1, double& l2, Vec2& v1, Vec2& v2) const {
        double tr = trace(), d = det();
        double disc = std::sqrt(std::max(0.0, tr * tr / 4 - d));
        l1 = tr / 2 - disc;
        l2 = tr / 2 + disc;
        // eigenvector for l1: (H - l1 I) v = 0
        Vec2 r1{xx - l1, xy}, r2{xy, yy - l1};
        Vec2 v = r1.norm2() > r2.norm2() ? Vec2{-r1.y, r1.x} : Vec2{-r2.y, r2.x};
        if (v.norm2() < 1e-300) v = {1, 0};
        v1 = v.normalized();
        v2 = v1.perp();
    }
};

inline SymMat2 operator*(double s, const SymMat2& m) { return m * s; }

}  // namespace nd
