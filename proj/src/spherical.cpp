#include "polewarp/spherical.hpp"

#include <cmath>

#include "polewarp/constants.hpp"

namespace polewarp {

double wrap_azimuth(double angle) {
    if (angle > -kPi && angle <= kPi) {
        return angle;
    }
    double a = std::remainder(angle, kTwoPi);
    if (a <= -kPi) {
        a += kTwoPi;
    }
    return a;
}

double azimuth_to_positive(double angle) {
    double a = wrap_azimuth(angle);
    return a < 0.0 ? a + kTwoPi : a;
}

SphericalCoord cartesian_to_spherical(const Vec3& p) {
    const double rho = std::hypot(p.x, p.y);
    const double r = std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z);
    if (r == 0.0) {
        return {0.0, 0.0, 0.0};
    }
    // Signed zeros would otherwise select the -pi / pi branch of atan2.
    const double phi = (p.x == 0.0 && p.y == 0.0) ? 0.0 : std::atan2(p.y, p.x);
    const double theta = std::atan2(rho, p.z);
    return {theta, phi == -kPi ? kPi : phi, r};
}

Vec3 spherical_to_cartesian(const SphericalCoord& s) {
    const double st = std::sin(s.theta);
    return {s.r * st * std::cos(s.phi), s.r * st * std::sin(s.phi), s.r * std::cos(s.theta)};
}

}  // namespace polewarp
