#pragma once

#include "polewarp/vec3.hpp"

namespace polewarp {

/// Dilation factor of the stereographic plane. Must be positive and finite.
///
/// sigma = 1 is the identity; sigma < 1 draws both images of the coordinate
/// poles towards (0, -1, 0). Values outside [1e-3, 1e3] are accepted but
/// lose precision to under/overflow of the stereographic scale; callers can
/// check in_validated_range() and surface a warning.
class WarpSigma {
public:
    static constexpr double kMinValidated = 1e-3;
    static constexpr double kMaxValidated = 1e3;

    /// Throws DomainError unless sigma > 0 and finite.
    explicit WarpSigma(double sigma);

    double value() const noexcept { return value_; }
    WarpSigma inverse() const { return WarpSigma(1.0 / value_); }
    bool in_validated_range() const noexcept {
        return value_ >= kMinValidated && value_ <= kMaxValidated;
    }

private:
    double value_;
};

/// Coordinates of a point in the stereographic plane of the warp, projected
/// from (0, 1, 0) and already scaled by sigma.
struct StereoPlanePoint {
    double x_sigma = 0.0;
    double z_sigma = 0.0;

    /// 2 / (1 + x_sigma^2 + z_sigma^2).
    double delta() const { return 2.0 / (1.0 + x_sigma * x_sigma + z_sigma * z_sigma); }
};

/// Points with 1 - y below this on the unit sphere snap to the (0, 1, 0) limit.
inline constexpr double kWarpSingularGuard = 1e-12;

/// True when `p` is handled by the singular-limit branch of warp_poles
/// rather than by the formula (including the exact fixed point (0, 1, 0)).
bool warp_snaps_to_limit(const Vec3& p);

/// Scaled stereographic coordinates (sigma x / (1 - y), sigma z / (1 - y)).
/// Throws DomainError when y == 1.
StereoPlanePoint to_stereo_plane(const Vec3& p, WarpSigma sigma);

/// The distorted-pole transformation: stereographic projection from (0, 1, 0),
/// scaling by sigma, inverse projection.
///
///   x^ = x_s d,  y^ = 1 - d,  z^ = z_s d,
///   x_s = sigma x / (1 - y),  z_s = sigma z / (1 - y),  d = 2 / (1 + x_s^2 + z_s^2).
///
/// (0, 1, 0) maps to itself. Unit-sphere inputs within kWarpSingularGuard of
/// it snap to (0, 1, 0). Any other input with y == 1 is rejected with a
/// DomainError. Off-sphere inputs are evaluated verbatim.
Vec3 warp_poles(const Vec3& p, WarpSigma sigma);

/// Inverse of warp_poles on the unit sphere: the same map with 1/sigma.
Vec3 unwarp_poles(const Vec3& p, WarpSigma sigma);

/// The warp written as a single rational function of (x, y, z):
///
///   x^ = -2 sigma x (y - 1) / D,  y^ = (sigma^2 x^2 + sigma^2 z^2 - y^2 + 2y - 1) / D,
///   z^ = -2 sigma z (y - 1) / D,  D = sigma^2 x^2 + sigma^2 z^2 + y^2 - 2y + 1.
///
/// Independent evaluation path for differential testing; throws DomainError
/// when D == 0.
Vec3 warp_expanded_oracle(const Vec3& p, WarpSigma sigma);

struct PolePair {
    Vec3 north;
    Vec3 south;
};

/// Images of (0, 0, 1) and (0, 0, -1) under warp_poles.
PolePair warped_pole_positions(WarpSigma sigma);

/// Preimages of (0, 0, +-1) under warp_poles: where the warped chart's
/// coordinate poles sit before the warp is applied.
PolePair pole_preimages(WarpSigma sigma);

}  // namespace polewarp
