#include "polewarp/pole_warp.hpp"

#include <cmath>
#include <string>

#include "polewarp/errors.hpp"

namespace polewarp {

WarpSigma::WarpSigma(double sigma) : value_(sigma) {
    if (!std::isfinite(sigma) || !(sigma > 0.0)) {
        throw DomainError("warp sigma must be positive and finite, got " + std::to_string(sigma));
    }
}

bool warp_snaps_to_limit(const Vec3& p) {
    if (p.x == 0.0 && p.y == 1.0 && p.z == 0.0) {
        return true;
    }
    const double n2 = dot(p, p);
    return (1.0 - p.y) < kWarpSingularGuard && std::abs(n2 - 1.0) <= 1e-9;
}

StereoPlanePoint to_stereo_plane(const Vec3& p, WarpSigma sigma) {
    const double denom = 1.0 - p.y;
    if (denom == 0.0) {
        throw DomainError("stereographic projection undefined at y == 1");
    }
    return {sigma.value() * p.x / denom, sigma.value() * p.z / denom};
}

Vec3 warp_poles(const Vec3& p, WarpSigma sigma) {
    if (warp_snaps_to_limit(p)) {
        return {0.0, 1.0, 0.0};
    }
    if (p.y == 1.0) {
        throw DomainError("warp undefined on the off-sphere ray y == 1, (x, z) != (0, 0)");
    }
    const StereoPlanePoint s = to_stereo_plane(p, sigma);
    const double d = s.delta();
    return {s.x_sigma * d, 1.0 - d, s.z_sigma * d};
}

Vec3 unwarp_poles(const Vec3& p, WarpSigma sigma) { return warp_poles(p, sigma.inverse()); }

Vec3 warp_expanded_oracle(const Vec3& p, WarpSigma sigma) {
    const double s = sigma.value();
    const double s2 = s * s;
    const double x = p.x, y = p.y, z = p.z;
    // y^2 - 2y + 1 evaluated as (y - 1)^2.
    const double ym = (y - 1.0) * (y - 1.0);
    const double den = s2 * x * x + s2 * z * z + ym;
    if (den == 0.0) {
        throw DomainError("expanded warp denominator vanishes");
    }
    return {-2.0 * s * x * (y - 1.0) / den,
            (s2 * x * x + s2 * z * z - ym) / den,
            -2.0 * s * z * (y - 1.0) / den};
}

PolePair warped_pole_positions(WarpSigma sigma) {
    return {warp_poles({0.0, 0.0, 1.0}, sigma), warp_poles({0.0, 0.0, -1.0}, sigma)};
}

PolePair pole_preimages(WarpSigma sigma) {
    return {unwarp_poles({0.0, 0.0, 1.0}, sigma), unwarp_poles({0.0, 0.0, -1.0}, sigma)};
}

}  // namespace polewarp
