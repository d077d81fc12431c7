#pragma once

#include "polewarp/pole_warp.hpp"
#include "polewarp/vec3.hpp"

namespace polewarp {

/// Position of the distorted north pole for the coordinate-wise mapping.
///
/// The pole lies on the unit circle of the YZ plane: o = (0, cos a, sin a)
/// where a = sigma_angle.
class DistortedPole {
public:
    /// Throws DomainError unless o.x == 0 and |(o.y, o.z)| = 1 within 1e-12.
    explicit DistortedPole(const Vec3& o);

    static DistortedPole from_angle(double sigma_angle);

    const Vec3& position() const noexcept { return o_; }
    double sigma_angle() const noexcept { return sigma_angle_; }

private:
    Vec3 o_;
    double sigma_angle_;
};

/// Pole of the coordinate-wise mapping matching a given warp scale:
/// the image of (0, 0, 1) under warp_poles.
DistortedPole sigma_angle_from_warp(WarpSigma sigma);

/// A point of the (y, z) plane.
struct PointYZ {
    double y = 0.0;
    double z = 0.0;
};

/// Chord of the unit YZ circle onto which a distorted latitude projects.
struct Chord {
    PointYZ a;
    PointYZ b;
    PointYZ mid;
    /// dz/dy of the chord line; meaningless when `vertical` is set.
    double slope = 0.0;
    bool vertical = false;
    /// a == b: the chord collapsed onto the pole (phi = pi/2).
    bool degenerate = false;
};

struct ThetaResult {
    double theta = 0.0;  ///< in (-pi, pi]
    bool degenerate = false;
};

/// theta = atan2(p_y - o_y, p_x): the anticlockwise angle of the XY-projected
/// offset from the pole against +x. Reads only (p_x, p_y).
ThetaResult f1_theta(double px, double py, const DistortedPole& pole);

inline ThetaResult f1_theta(const Vec3& p, const DistortedPole& pole) {
    return f1_theta(p.x, p.y, pole);
}

/// Chord for a given phi in [0, pi].
///
/// Endpoints a = (cos(2 s phi / pi), sin(2 s phi / pi)) and
/// b = (cos(pi + 2 (pi - s) phi / pi), -sin(pi + 2 (pi - s) phi / pi)), s the
/// pole angle. phi = 0 is the horizontal diameter, phi = pi/2 collapses onto
/// the pole and phi = pi is the diameter through angle 2s.
/// Throws DomainError for phi outside [0, pi].
Chord chord_for_phi(double phi, const DistortedPole& pole);

/// The two monotone halves of the chord family.
enum class ChordBranch {
    Auto,
    Lower,  ///< phi in [0, pi/2]
    Upper,  ///< phi in [pi/2, pi]
};

struct PhiSolveOptions {
    double tol = 1e-10;          ///< bound on the chord-line residual
    double bracket_tol = 1e-12;  ///< bound on the final phi bracket width
    ChordBranch branch = ChordBranch::Auto;
};

struct PhiSolution {
    double phi = 0.0;
    ChordBranch branch = ChordBranch::Lower;
    double residual = 0.0;
    int iterations = 0;
    bool degenerate = false;
};

/// Signed distance from (py, pz) to the chord line at phi. Continuous in phi,
/// including at the degenerate and vertical chords.
double chord_signed_distance(double phi, double py, double pz, const DistortedPole& pole);

/// Residual of the implicit chord relation at phi: (p_z - g_z) - g_m (p_y - g_y)
/// for |g_m| <= 1 and (p_y - g_y) - (p_z - g_z) / g_m for steeper chords, so that
/// vertical chords reduce to p_y - g_y.
double chord_residual(double phi, double py, double pz, const DistortedPole& pole);

/// The branch Auto resolves to for a query: the sign of the query's angular
/// offset from the pole, read against which side of pi/2 the pole angle lies.
ChordBranch select_branch(double py, double pz, const DistortedPole& pole);

/// phi such that (p_y, p_z) lies on chord_for_phi(phi). Reads only (p_y, p_z).
///
/// Bisects the signed chord distance over one monotone branch. Auto picks the
/// branch via select_branch and falls back to the other one when it holds no
/// root. The pole itself returns pi/2. Throws NotInChordFamily when no branch
/// brackets a root (the query is outside the swept region or off the disc).
PhiSolution f2_phi(double py, double pz, const DistortedPole& pole, const PhiSolveOptions& opts = {});

inline PhiSolution f2_phi(const Vec3& p, const DistortedPole& pole, const PhiSolveOptions& opts = {}) {
    return f2_phi(p.y, p.z, pole, opts);
}

/// Both coordinates of the alternative mapping at once.
struct AltThetaPhi {
    double theta = 0.0;
    double phi = 0.0;
};
AltThetaPhi alt_map(const Vec3& p, const DistortedPole& pole, const PhiSolveOptions& opts = {});

}  // namespace polewarp
