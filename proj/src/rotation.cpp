#include "polewarp/rotation.hpp"

#include <cmath>

#include "polewarp/constants.hpp"
#include "polewarp/errors.hpp"

namespace polewarp {

namespace {

std::array<std::array<double, 3>, 3> to_matrix(const Quaternion& q) {
    const double w = q.w, x = q.x, y = q.y, z = q.z;
    return {{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
             {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
             {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}}};
}

Quaternion normalized(const Quaternion& q) {
    const double n = std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
    return {q.w / n, q.x / n, q.y / n, q.z / n};
}

}  // namespace

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Rotation::Rotation() : q_{1.0, 0.0, 0.0, 0.0}, m_(to_matrix(q_)) {}

Rotation::Rotation(const Quaternion& q) : q_(q) {
    const double n = std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
    if (!std::isfinite(n) || std::abs(n - 1.0) > 1e-12) {
        throw DomainError("rotation quaternion must have unit norm");
    }
    m_ = to_matrix(q_);
}

Rotation Rotation::from_axis_angle(const Vec3& axis, double angle_rad) {
    const double n = norm(axis);
    if (!std::isfinite(n) || n == 0.0 || !std::isfinite(angle_rad)) {
        throw DomainError("rotation axis must be finite and nonzero");
    }
    const Vec3 u = axis / n;
    const double s = std::sin(0.5 * angle_rad);
    return Rotation(normalized({std::cos(0.5 * angle_rad), u.x * s, u.y * s, u.z * s}));
}

Rotation Rotation::align(const Vec3& from, const Vec3& to) {
    const Vec3 a = polewarp::normalized(from);
    const Vec3 b = polewarp::normalized(to);
    const double c = dot(a, b);
    if (c < -1.0 + 1e-15) {
        // Antipodal: any axis orthogonal to `a` works.
        Vec3 ortho = std::abs(a.x) < 0.9 ? cross(a, Vec3{1, 0, 0}) : cross(a, Vec3{0, 1, 0});
        return from_axis_angle(ortho, kPi);
    }
    const Vec3 v = cross(a, b);
    return Rotation(normalized({1.0 + c, v.x, v.y, v.z}));
}

AxisAngle Rotation::axis_angle() const {
    Quaternion q = q_;
    if (q.w < 0.0) {
        q = {-q.w, -q.x, -q.y, -q.z};
    }
    const double s = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
    if (s == 0.0) {
        return {};
    }
    return {{q.x / s, q.y / s, q.z / s}, 2.0 * std::atan2(s, q.w)};
}

Vec3 Rotation::apply(const Vec3& p) const {
    return {m_[0][0] * p.x + m_[0][1] * p.y + m_[0][2] * p.z,
            m_[1][0] * p.x + m_[1][1] * p.y + m_[1][2] * p.z,
            m_[2][0] * p.x + m_[2][1] * p.y + m_[2][2] * p.z};
}

Vec3 Rotation::apply_inverse(const Vec3& p) const {
    return {m_[0][0] * p.x + m_[1][0] * p.y + m_[2][0] * p.z,
            m_[0][1] * p.x + m_[1][1] * p.y + m_[2][1] * p.z,
            m_[0][2] * p.x + m_[1][2] * p.y + m_[2][2] * p.z};
}

Rotation Rotation::compose(const Rotation& first) const { return Rotation(normalized(q_ * first.q_)); }

}  // namespace polewarp
