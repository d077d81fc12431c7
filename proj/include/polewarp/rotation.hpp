#pragma once

#include <array>

#include "polewarp/vec3.hpp"

namespace polewarp {

/// Unit quaternion (w, x, y, z).
struct Quaternion {
    double w = 1.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

Quaternion operator*(const Quaternion& a, const Quaternion& b);

/// Axis and angle (radians) of a rotation; the axis is a unit vector.
struct AxisAngle {
    Vec3 axis{0.0, 0.0, 1.0};
    double angle = 0.0;
};

/// A proper rotation of 3-space backed by a unit quaternion and its matrix.
class Rotation {
public:
    /// Identity.
    Rotation();

    /// Throws DomainError unless | |q| - 1 | <= 1e-12.
    explicit Rotation(const Quaternion& q);

    static Rotation identity() { return Rotation(); }

    /// Axis is normalized; throws DomainError for a zero or non-finite axis.
    static Rotation from_axis_angle(const Vec3& axis, double angle_rad);

    /// Shortest-arc rotation taking direction `from` onto direction `to`.
    static Rotation align(const Vec3& from, const Vec3& to);

    const Quaternion& quaternion() const noexcept { return q_; }
    const std::array<std::array<double, 3>, 3>& matrix() const noexcept { return m_; }

    /// Angle in [0, pi]; the identity reports axis +z.
    AxisAngle axis_angle() const;

    Vec3 apply(const Vec3& p) const;
    Vec3 apply_inverse(const Vec3& p) const;

    /// (*this) after `first`: p -> this(first(p)).
    Rotation compose(const Rotation& first) const;

private:
    Quaternion q_;
    std::array<std::array<double, 3>, 3> m_;
};

inline Vec3 rotate(const Vec3& p, const Rotation& r) { return r.apply(p); }
inline Vec3 rotate_inverse(const Vec3& p, const Rotation& r) { return r.apply_inverse(p); }

}  // namespace polewarp
