#include "polewarp/alt_mapping.hpp"

#include <cmath>
#include <utility>

#include "polewarp/constants.hpp"
#include "polewarp/errors.hpp"

namespace polewarp {

namespace {

// Tilt of the chord at phi: the chord direction is (cos k, -sin k).
double chord_tilt(double phi, double sigma_angle) {
    return phi * (1.0 - 2.0 * sigma_angle / kPi);
}

std::pair<double, double> branch_interval(ChordBranch b) {
    return b == ChordBranch::Upper ? std::pair{kHalfPi, kPi} : std::pair{0.0, kHalfPi};
}

ChordBranch other(ChordBranch b) {
    return b == ChordBranch::Upper ? ChordBranch::Lower : ChordBranch::Upper;
}

bool bisect(double py, double pz, const DistortedPole& pole, ChordBranch branch,
            const PhiSolveOptions& opts, PhiSolution& out) {
    auto [lo, hi] = branch_interval(branch);
    double f_lo = chord_signed_distance(lo, py, pz, pole);
    double f_hi = chord_signed_distance(hi, py, pz, pole);
    if (f_lo == 0.0 || f_hi == 0.0) {
        out.phi = f_lo == 0.0 ? lo : hi;
        out.branch = branch;
        out.residual = std::abs(chord_residual(out.phi, py, pz, pole));
        return true;
    }
    if ((f_lo > 0.0) == (f_hi > 0.0)) {
        return false;
    }
    int it = 0;
    for (; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;  // bracket exhausted at machine resolution
        }
        const double f_mid = chord_signed_distance(mid, py, pz, pole);
        if (f_mid == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
        if (hi - lo <= opts.bracket_tol &&
            std::abs(chord_residual(0.5 * (lo + hi), py, pz, pole)) <= 0.01 * opts.tol) {
            break;
        }
    }
    const double phi = std::abs(f_lo) <= std::abs(f_hi) ? lo : hi;
    out.phi = phi;
    out.branch = branch;
    out.iterations = it;
    out.residual = std::abs(chord_residual(phi, py, pz, pole));
    return true;
}

}  // namespace

DistortedPole::DistortedPole(const Vec3& o) : o_(o), sigma_angle_(std::atan2(o.z, o.y)) {
    if (o.x != 0.0) {
        throw DomainError("distorted pole must lie in the YZ plane (o_x == 0)");
    }
    if (!is_finite(o) || std::abs(o.y * o.y + o.z * o.z - 1.0) > 1e-12) {
        throw DomainError("distorted pole must lie on the unit YZ circle");
    }
}

DistortedPole DistortedPole::from_angle(double sigma_angle) {
    return DistortedPole(Vec3{0.0, std::cos(sigma_angle), std::sin(sigma_angle)});
}

DistortedPole sigma_angle_from_warp(WarpSigma sigma) {
    Vec3 north = warp_poles({0.0, 0.0, 1.0}, sigma);
    north.x = 0.0;
    return DistortedPole(north);
}

ThetaResult f1_theta(double px, double py, const DistortedPole& pole) {
    const double dy = py - pole.position().y;
    if (px == 0.0 && dy == 0.0) {
        return {0.0, true};
    }
    const double t = std::atan2(dy, px);
    return {t == -kPi ? kPi : t, false};
}

Chord chord_for_phi(double phi, const DistortedPole& pole) {
    if (!(phi >= 0.0 && phi <= kPi)) {
        throw DomainError("chord parameter phi must lie in [0, pi]");
    }
    const double s = pole.sigma_angle();
    const double ang_a = 2.0 * s * phi / kPi;
    const double ang_b = kPi + 2.0 * (kPi - s) * phi / kPi;
    Chord c;
    c.a = {std::cos(ang_a), std::sin(ang_a)};
    c.b = {std::cos(ang_b), -std::sin(ang_b)};
    c.mid = {0.5 * (c.a.y + c.b.y), 0.5 * (c.a.z + c.b.z)};
    const double k = chord_tilt(phi, s);
    c.degenerate = phi == kHalfPi;
    c.vertical = std::abs(std::cos(k)) < 1e-14;
    c.slope = c.vertical ? 0.0 : -std::tan(k);
    return c;
}

double chord_signed_distance(double phi, double py, double pz, const DistortedPole& pole) {
    const Chord c = chord_for_phi(phi, pole);
    const double k = chord_tilt(phi, pole.sigma_angle());
    return std::cos(k) * (pz - c.mid.z) + std::sin(k) * (py - c.mid.y);
}

double chord_residual(double phi, double py, double pz, const DistortedPole& pole) {
    const double k = chord_tilt(phi, pole.sigma_angle());
    const double dist = chord_signed_distance(phi, py, pz, pole);
    const double ck = std::cos(k);
    const double sk = std::sin(k);
    return std::abs(ck) >= std::abs(sk) ? dist / ck : dist / sk;
}

ChordBranch select_branch(double py, double pz, const DistortedPole& pole) {
    const Vec3& o = pole.position();
    const double side = o.y * pz - o.z * py;  // > 0: anticlockwise of the pole
    const double s = pole.sigma_angle();
    if (s > kHalfPi) {
        return side > 0.0 ? ChordBranch::Upper : ChordBranch::Lower;
    }
    if (s < kHalfPi) {
        return side < 0.0 ? ChordBranch::Upper : ChordBranch::Lower;
    }
    return ChordBranch::Lower;
}

PhiSolution f2_phi(double py, double pz, const DistortedPole& pole, const PhiSolveOptions& opts) {
    if (!(opts.tol > 0.0) || !(opts.bracket_tol > 0.0)) {
        throw DomainError("solver tolerances must be positive");
    }
    const Vec3& o = pole.position();
    if (std::hypot(py - o.y, pz - o.z) <= 1e-12) {
        PhiSolution s;
        s.phi = kHalfPi;
        s.degenerate = true;
        s.branch = opts.branch == ChordBranch::Upper ? ChordBranch::Upper : ChordBranch::Lower;
        return s;
    }
    if (py * py + pz * pz > 1.0 + 1e-12) {
        throw NotInChordFamily("query lies outside the unit YZ disc");
    }
    PhiSolution out;
    if (opts.branch != ChordBranch::Auto) {
        if (!bisect(py, pz, pole, opts.branch, opts, out)) {
            throw NotInChordFamily("no chord of the requested branch passes through the query");
        }
    } else {
        const ChordBranch first = select_branch(py, pz, pole);
        if (!bisect(py, pz, pole, first, opts, out) && !bisect(py, pz, pole, other(first), opts, out)) {
            throw NotInChordFamily("query is not swept by the chord family");
        }
    }
    return out;
}

AltThetaPhi alt_map(const Vec3& p, const DistortedPole& pole, const PhiSolveOptions& opts) {
    return {f1_theta(p.x, p.y, pole).theta, f2_phi(p.y, p.z, pole, opts).phi};
}

}  // namespace polewarp
