#pragma once

#include "polewarp/vec3.hpp"

namespace polewarp {

/// Inclination/azimuth/radius triple.
///
/// theta is the inclination from +z in [0, pi], phi the azimuth in (-pi, pi]
/// measured from +x towards +y, and r >= 0. The origin is canonicalized to
/// (0, 0, 0).
struct SphericalCoord {
    double theta = 0.0;
    double phi = 0.0;
    double r = 0.0;

    friend constexpr bool operator==(const SphericalCoord&, const SphericalCoord&) = default;
};

/// A point of the 2D theta-phi chart.
struct ThetaPhi {
    double theta = 0.0;
    double phi = 0.0;

    friend constexpr bool operator==(const ThetaPhi&, const ThetaPhi&) = default;
};

/// Folds an angle onto the half-open azimuth branch (-pi, pi].
double wrap_azimuth(double angle);

/// Maps an azimuth in (-pi, pi] onto [0, 2pi).
double azimuth_to_positive(double angle);

/// theta = atan2(sqrt(x^2+y^2), z), phi = atan2(y, x), r = |p|, with atan2(0, 0) := 0.
SphericalCoord cartesian_to_spherical(const Vec3& p);

/// Inverse of cartesian_to_spherical: (r sin(theta) cos(phi), r sin(theta) sin(phi), r cos(theta)).
Vec3 spherical_to_cartesian(const SphericalCoord& s);

/// Drops the radius.
constexpr ThetaPhi project_theta_phi(const SphericalCoord& s) { return {s.theta, s.phi}; }

}  // namespace polewarp
