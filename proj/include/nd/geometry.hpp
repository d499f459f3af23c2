#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nd/vec.hpp"

namespace nd {

enum class DomainKind { UnitSquare, UnitDisk, Annulus, Flower, StarBody };

// One term of a radius trig polynomial r(phi) = sum c_k cos(k phi) + s_k sin(k phi).
struct Harmonic {
    int index = 0;
    double cos_coeff = 0.0;
    double sin_coeff = 0.0;
};

// Parametric description of a planar analytic domain (or the unit square).
// Immutable after construction; constructors validate.
class DomainSpec {
  public:
    static DomainSpec unit_square();
    static DomainSpec unit_disk();
    static DomainSpec annulus(double inner_radius);
    static DomainSpec flower(int petal_count, double inner_radius);
    static DomainSpec star_body(std::vector<Harmonic> coeffs);

    DomainKind kind() const { return kind_; }
    int petal_count() const { return n_; }
    double inner_radius() const { return a_; }
    const std::vector<Harmonic>& coeffs() const { return coeffs_; }

    bool has_corners() const { return kind_ == DomainKind::UnitSquare; }
    // cyclic symmetry order of the boundary (0 = full rotational symmetry)
    int cyclic_symmetry_order() const;
    // symmetric under reflection across the rotation axes
    bool has_reflection_symmetry() const;

    double area() const;
    void bounding_box(Vec2& lo, Vec2& hi) const;
    std::string describe() const;

  private:
    DomainSpec() = default;
    void validate() const;

    DomainKind kind_ = DomainKind::UnitDisk;
    int n_ = 0;
    double a_ = 0.0;
    std::vector<Harmonic> coeffs_;
};

// A closed boundary component, parameterized over t in [0, 2pi), oriented with
// the domain on the left.
class BoundaryCurve {
  public:
    virtual ~BoundaryCurve() = default;

    int component_id() const { return id_; }
    virtual Vec2 position(double t) const = 0;
    virtual Vec2 velocity(double t) const = 0;  // dP/dt, never zero away from corners
    // signed curvature, positive where the boundary is convex toward the domain
    virtual double curvature(double t) const = 0;
    virtual std::vector<double> corner_params() const { return {}; }

    Vec2 unit_tangent(double t) const { return velocity(t).normalized(); }
    // outward normal = unit tangent rotated -90 deg (domain on the left)
    Vec2 outward_normal(double t) const {
        Vec2 u = unit_tangent(t);
        return {u.y, -u.x};
    }

    // closest boundary point: (parameter, distance)
    virtual std::pair<double, double> nearest(const Vec2& p) const;

    double length() const;
    double diameter() const;

  protected:
    explicit BoundaryCurve(int id) : id_(id) {}

  private:
    int id_;
    mutable double length_ = -1.0;
    mutable double diameter_ = -1.0;
};

using BoundaryList = std::vector<std::shared_ptr<const BoundaryCurve>>;

struct Membership {
    bool inside = false;
    double clearance = 0.0;  // distance to nearest boundary, negative outside
};

/// All boundary components of the spec, consistently oriented.
BoundaryList boundary(const DomainSpec& spec);

/// Membership with signed clearance. Sign decided exactly (polar comparison for
/// polar-graph variants); magnitude is the distance to the nearest component.
Membership contains(const DomainSpec& spec, const Vec2& p);

/// theta >= 0 with boundary curvature H >= -theta, padded by 1%.
/// Rejects cornered domains.
double min_mean_curvature_bound(const DomainSpec& spec);

struct Ray {
    double angle = 0.0;
    Vec2 direction() const { return {std::cos(angle), std::sin(angle)}; }
};

/// Rays L_{n,k} from the origin at angles pi/n + 2 pi k/n, k = 1..n.
std::vector<Ray> symmetry_rays(int n);

/// Distance from p to the union of rays L_n (as full rays from the origin).
double distance_to_rays(const std::vector<Ray>& rays, const Vec2& p);

}  // namespace nd
