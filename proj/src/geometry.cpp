#include "nd/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "nd/error.hpp"

namespace nd {

namespace {
constexpr double kTwoPi = 6.28318530717958647692528676656;

double wrap_param(double t) {
    t = std::fmod(t, kTwoPi);
    return t < 0 ? t + kTwoPi : t;
}
}  // namespace

// ---------------------------------------------------------------------------
// DomainSpec

DomainSpec DomainSpec::unit_square() {
    DomainSpec s;
    s.kind_ = DomainKind::UnitSquare;
    return s;
}

DomainSpec DomainSpec::unit_disk() {
    DomainSpec s;
    s.kind_ = DomainKind::UnitDisk;
    return s;
}

DomainSpec DomainSpec::annulus(double inner_radius) {
    DomainSpec s;
    s.kind_ = DomainKind::Annulus;
    s.a_ = inner_radius;
    s.validate();
    return s;
}

DomainSpec DomainSpec::flower(int petal_count, double inner_radius) {
    DomainSpec s;
    s.kind_ = DomainKind::Flower;
    s.n_ = petal_count;
    s.a_ = inner_radius;
    s.validate();
    return s;
}

DomainSpec DomainSpec::star_body(std::vector<Harmonic> coeffs) {
    DomainSpec s;
    s.kind_ = DomainKind::StarBody;
    s.coeffs_ = std::move(coeffs);
    s.validate();
    return s;
}

namespace {
double trig_radius(const std::vector<Harmonic>& coeffs, double phi) {
    double r = 0.0;
    for (const auto& h : coeffs)
        r += h.cos_coeff * std::cos(h.index * phi) + h.sin_coeff * std::sin(h.index * phi);
    return r;
}
}  // namespace

void DomainSpec::validate() const {
    switch (kind_) {
        case DomainKind::Annulus:
            if (!(a_ > 0.0 && a_ < 1.0))
                throw Error(ErrorCode::Parameter, "annulus: inner radius must be in (0, 1)");
            break;
        case DomainKind::Flower:
            if (n_ < 1) throw Error(ErrorCode::Parameter, "flower: petal count must be >= 1");
            if (!(a_ > 0.25 && a_ < 0.5))
                throw Error(ErrorCode::Parameter, "flower: inner radius must be in (1/4, 1/2)");
            break;
        case DomainKind::StarBody: {
            if (coeffs_.empty())
                throw Error(ErrorCode::Parameter, "star body: radius coefficients required");
            for (const auto& h : coeffs_)
                if (h.index < 0)
                    throw Error(ErrorCode::Parameter, "star body: harmonic index must be >= 0");
            for (int i = 0; i < 4096; ++i) {
                double phi = kTwoPi * i / 4096;
                if (trig_radius(coeffs_, phi) <= 0.0)
                    throw Error(ErrorCode::Parameter, "star body: radius must stay positive");
            }
            break;
        }
        default:
            break;
    }
}

int DomainSpec::cyclic_symmetry_order() const {
    switch (kind_) {
        case DomainKind::UnitDisk:
        case DomainKind::Annulus:
            return 0;  // continuous
        case DomainKind::UnitSquare:
            return 4;
        case DomainKind::Flower:
            return n_;
        case DomainKind::StarBody: {
            int g = 0;
            for (const auto& h : coeffs_) {
                if (h.index == 0) continue;
                if (std::abs(h.cos_coeff) > 0 || std::abs(h.sin_coeff) > 0)
                    g = std::gcd(g, h.index);
            }
            return g == 0 ? 0 : g;
        }
    }
    return 1;
}

bool DomainSpec::has_reflection_symmetry() const {
    switch (kind_) {
        case DomainKind::StarBody:
            for (const auto& h : coeffs_)
                if (std::abs(h.sin_coeff) > 0) return false;
            return true;
        default:
            return true;
    }
}

double DomainSpec::area() const {
    switch (kind_) {
        case DomainKind::UnitSquare:
            return 1.0;
        case DomainKind::UnitDisk:
            return M_PI;
        case DomainKind::Annulus:
            return M_PI * (1.0 - a_ * a_);
        case DomainKind::Flower: {
            // 1/2 int (1 + cos(n phi)/2)^2 dphi - pi a^2 = pi (1 + 1/8 - a^2)
            return M_PI * (1.0 + 0.125 - a_ * a_);
        }
        case DomainKind::StarBody: {
            int n = 1 << 14;
            double s = 0.0;
            for (int i = 0; i < n; ++i) {
                double r = trig_radius(coeffs_, kTwoPi * i / n);
                s += 0.5 * r * r;
            }
            return s * kTwoPi / n;
        }
    }
    return 0.0;
}

void DomainSpec::bounding_box(Vec2& lo, Vec2& hi) const {
    switch (kind_) {
        case DomainKind::UnitSquare:
            lo = {0, 0};
            hi = {1, 1};
            return;
        case DomainKind::UnitDisk:
            lo = {-1, -1};
            hi = {1, 1};
            return;
        case DomainKind::Annulus:
            lo = {-1, -1};
            hi = {1, 1};
            return;
        case DomainKind::Flower:
            lo = {-1.5, -1.5};
            hi = {1.5, 1.5};
            return;
        case DomainKind::StarBody: {
            double rmax = 0.0;
            for (int i = 0; i < 4096; ++i)
                rmax = std::max(rmax, trig_radius(coeffs_, kTwoPi * i / 4096));
            lo = {-rmax, -rmax};
            hi = {rmax, rmax};
            return;
        }
    }
}

std::string DomainSpec::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case DomainKind::UnitSquare: os << "unit square"; break;
        case DomainKind::UnitDisk: os << "unit disk"; break;
        case DomainKind::Annulus: os << "annulus(a=" << a_ << ")"; break;
        case DomainKind::Flower: os << "flower(n=" << n_ << ", a=" << a_ << ")"; break;
        case DomainKind::StarBody: os << "star body (" << coeffs_.size() << " harmonics)"; break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// BoundaryCurve

std::pair<double, double> BoundaryCurve::nearest(const Vec2& p) const {
    // coarse scan then golden-section refinement of the squared distance
    const int n = 512;
    double best_t = 0, best_d = 1e300;
    for (int i = 0; i < n; ++i) {
        double t = kTwoPi * i / n;
        double d = (position(t) - p).norm2();
        if (d < best_d) {
            best_d = d;
            best_t = t;
        }
    }
    double lo = best_t - kTwoPi / n, hi = best_t + kTwoPi / n;
    const double gr = 0.6180339887498949;
    double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
    double fc = (position(c) - p).norm2(), fd = (position(d) - p).norm2();
    for (int it = 0; it < 80; ++it) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - gr * (hi - lo);
            fc = (position(c) - p).norm2();
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + gr * (hi - lo);
            fd = (position(d) - p).norm2();
        }
        if (hi - lo < 1e-14) break;
    }
    double t = wrap_param(0.5 * (lo + hi));
    return {t, (position(t) - p).norm()};
}

double BoundaryCurve::length() const {
    if (length_ < 0) {
        const int n = 1 << 14;
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += velocity(kTwoPi * (i + 0.5) / n).norm();
        length_ = s * kTwoPi / n;
    }
    return length_;
}

double BoundaryCurve::diameter() const {
    if (diameter_ < 0) {
        const int n = 256;
        std::vector<Vec2> pts(n);
        for (int i = 0; i < n; ++i) pts[i] = position(kTwoPi * i / n);
        double d = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) d = std::max(d, dist(pts[i], pts[j]));
        diameter_ = d;
    }
    return diameter_;
}

namespace {

// circle of radius R about the origin; domain_inside=false flips orientation
// (inner boundary of an annulus-type domain)
class CircleCurve final : public BoundaryCurve {
  public:
    CircleCurve(int id, double radius, bool domain_inside)
        : BoundaryCurve(id), r_(radius), sign_(domain_inside ? 1.0 : -1.0) {}

    Vec2 position(double t) const override {
        return {r_ * std::cos(sign_ * t), r_ * std::sin(sign_ * t)};
    }
    Vec2 velocity(double t) const override {
        return {-sign_ * r_ * std::sin(sign_ * t), sign_ * r_ * std::cos(sign_ * t)};
    }
    double curvature(double) const override { return sign_ / r_; }

    std::pair<double, double> nearest(const Vec2& p) const override {
        double phi = std::atan2(p.y, p.x);
        double t = wrap_param(sign_ * phi);
        return {t, std::abs(p.norm() - r_)};
    }

  private:
    double r_;
    double sign_;
};

// r(phi) trig polynomial graph, traversed counterclockwise (domain inside)
class PolarCurve final : public BoundaryCurve {
  public:
    PolarCurve(int id, std::vector<Harmonic> coeffs) : BoundaryCurve(id), coeffs_(std::move(coeffs)) {}

    double radius(double phi) const { return trig_radius(coeffs_, phi); }
    double radius_d1(double phi) const {
        double v = 0.0;
        for (const auto& h : coeffs_)
            v += h.index * (-h.cos_coeff * std::sin(h.index * phi) + h.sin_coeff * std::cos(h.index * phi));
        return v;
    }
    double radius_d2(double phi) const {
        double v = 0.0;
        for (const auto& h : coeffs_)
            v += -h.index * h.index *
                 (h.cos_coeff * std::cos(h.index * phi) + h.sin_coeff * std::sin(h.index * phi));
        return v;
    }

    Vec2 position(double t) const override {
        double r = radius(t);
        return {r * std::cos(t), r * std::sin(t)};
    }
    Vec2 velocity(double t) const override {
        double r = radius(t), rp = radius_d1(t);
        double c = std::cos(t), s = std::sin(t);
        return {rp * c - r * s, rp * s + r * c};
    }
    double curvature(double t) const override {
        double r = radius(t), rp = radius_d1(t), rpp = radius_d2(t);
        double num = r * r + 2 * rp * rp - r * rpp;
        double den = std::pow(r * r + rp * rp, 1.5);
        return num / den;
    }

  private:
    std::vector<Harmonic> coeffs_;
};

// unit square traversed counterclockwise; t in [0, 2pi), one side per quarter
class SquareCurve final : public BoundaryCurve {
  public:
    explicit SquareCurve(int id) : BoundaryCurve(id) {}

    Vec2 position(double t) const override {
        double u = wrap_param(t) / (kTwoPi / 4);  // [0,4)
        int side = std::min(3, static_cast<int>(u));
        double f = u - side;
        switch (side) {
            case 0: return {f, 0};
            case 1: return {1, f};
            case 2: return {1 - f, 1};
            default: return {0, 1 - f};
        }
    }
    Vec2 velocity(double t) const override {
        double u = wrap_param(t) / (kTwoPi / 4);
        int side = std::min(3, static_cast<int>(u));
        double speed = 4.0 / kTwoPi;
        switch (side) {
            case 0: return {speed, 0};
            case 1: return {0, speed};
            case 2: return {-speed, 0};
            default: return {0, -speed};
        }
    }
    double curvature(double t) const override {
        // corners are flagged separately; curvature is zero on open sides and
        // undefined (NaN) at corner parameters
        double u = wrap_param(t) / (kTwoPi / 4);
        double f = u - std::floor(u);
        if (f < 1e-12 || f > 1 - 1e-12) return std::numeric_limits<double>::quiet_NaN();
        return 0.0;
    }
    std::vector<double> corner_params() const override {
        return {0.0, kTwoPi / 4, kTwoPi / 2, 3 * kTwoPi / 4};
    }
    std::pair<double, double> nearest(const Vec2& p) const override {
        // nearest point on the square boundary, exact
        double best_d = 1e300;
        double best_t = 0;
        auto consider = [&](double t, const Vec2& q) {
            double d = dist(p, q);
            if (d < best_d) {
                best_d = d;
                best_t = t;
            }
        };
        double cx = std::clamp(p.x, 0.0, 1.0), cy = std::clamp(p.y, 0.0, 1.0);
        consider(cx * (kTwoPi / 4), {cx, 0.0});
        consider(kTwoPi / 4 + cy * (kTwoPi / 4), {1.0, cy});
        consider(kTwoPi / 2 + (1 - cx) * (kTwoPi / 4), {cx, 1.0});
        consider(3 * kTwoPi / 4 + (1 - cy) * (kTwoPi / 4), {0.0, cy});
        return {wrap_param(best_t), best_d};
    }
};

std::vector<Harmonic> flower_outer_coeffs(int n) {
    return {{0, 1.0, 0.0}, {n, 0.5, 0.0}};
}

void check_disjoint(const BoundaryList& comps) {
    const int n = 128;
    for (size_t i = 0; i < comps.size(); ++i) {
        for (size_t j = i + 1; j < comps.size(); ++j) {
            double dmin = 1e300;
            for (int ii = 0; ii < n; ++ii) {
                Vec2 p = comps[i]->position(kTwoPi * ii / n);
                auto [t, d] = comps[j]->nearest(p);
                dmin = std::min(dmin, d);
            }
            if (dmin <= 1e-6)
                throw Error(ErrorCode::Parameter, "boundary components intersect or touch");
        }
    }
}

}  // namespace

BoundaryList boundary(const DomainSpec& spec) {
    BoundaryList out;
    switch (spec.kind()) {
        case DomainKind::UnitSquare:
            out.push_back(std::make_shared<SquareCurve>(0));
            break;
        case DomainKind::UnitDisk:
            out.push_back(std::make_shared<CircleCurve>(0, 1.0, true));
            break;
        case DomainKind::Annulus:
            out.push_back(std::make_shared<CircleCurve>(0, 1.0, true));
            out.push_back(std::make_shared<CircleCurve>(1, spec.inner_radius(), false));
            break;
        case DomainKind::Flower:
            out.push_back(std::make_shared<PolarCurve>(0, flower_outer_coeffs(spec.petal_count())));
            out.push_back(std::make_shared<CircleCurve>(1, spec.inner_radius(), false));
            break;
        case DomainKind::StarBody:
            out.push_back(std::make_shared<PolarCurve>(0, spec.coeffs()));
            break;
    }
    if (out.size() > 1) check_disjoint(out);
    return out;
}

Membership contains(const DomainSpec& spec, const Vec2& p) {
    switch (spec.kind()) {
        case DomainKind::UnitSquare: {
            bool in = p.x > 0 && p.x < 1 && p.y > 0 && p.y < 1;
            if (in) {
                double c = std::min(std::min(p.x, 1 - p.x), std::min(p.y, 1 - p.y));
                return {true, c};
            }
            double dx = std::max({0.0, -p.x, p.x - 1});
            double dy = std::max({0.0, -p.y, p.y - 1});
            return {false, -std::hypot(dx, dy)};
        }
        case DomainKind::UnitDisk:
            return {p.norm() < 1.0, 1.0 - p.norm()};
        case DomainKind::Annulus: {
            double r = p.norm(), a = spec.inner_radius();
            double c = std::min(1.0 - r, r - a);
            return {c > 0, c};
        }
        case DomainKind::Flower: {
            double r = p.norm(), a = spec.inner_radius();
            double phi = std::atan2(p.y, p.x);
            double rout = 1.0 + 0.5 * std::cos(spec.petal_count() * phi);
            bool in = r > a && r < rout;
            PolarCurve outer(0, flower_outer_coeffs(spec.petal_count()));
            double douter = outer.nearest(p).second;
            if (in) return {true, std::min(r - a, douter)};
            if (r <= a) return {false, r - a};
            return {false, -douter};
        }
        case DomainKind::StarBody: {
            double r = p.norm();
            double phi = std::atan2(p.y, p.x);
            bool in = r < trig_radius(spec.coeffs(), phi);
            PolarCurve curve(0, spec.coeffs());
            double d = curve.nearest(p).second;
            return {in, in ? d : -d};
        }
    }
    return {};
}

double min_mean_curvature_bound(const DomainSpec& spec) {
    if (spec.has_corners())
        throw Error(ErrorCode::UnsupportedDomain,
                    "min_mean_curvature_bound: cornered domain has no smooth curvature bound");
    double kmin = 1e300;
    const int samples = 200000;
    for (const auto& comp : boundary(spec)) {
        for (int i = 0; i < samples; ++i) kmin = std::min(kmin, comp->curvature(kTwoPi * i / samples));
    }
    double theta = std::max(0.0, -kmin);
    return theta * 1.01;
}

std::vector<Ray> symmetry_rays(int n) {
    if (n < 1) throw Error(ErrorCode::Parameter, "symmetry_rays: n must be >= 1");
    std::vector<Ray> rays;
    rays.reserve(n);
    for (int k = 1; k <= n; ++k) rays.push_back({wrap_param(M_PI / n + kTwoPi * k / n)});
    return rays;
}

double distance_to_rays(const std::vector<Ray>& rays, const Vec2& p) {
    double best = 1e300;
    for (const auto& ray : rays) {
        Vec2 d = ray.direction();
        double s = std::max(0.0, p.dot(d));
        best = std::min(best, (p - s * d).norm());
    }
    return best;
}

}  // namespace nd
